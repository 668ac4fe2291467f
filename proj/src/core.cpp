#include "mereo/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace mereo {

std::vector<ElementId> Subset::members() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for_each_bit(bits_, [&](std::uint32_t i) { out.push_back(ElementId{i}); });
  return out;
}

ParthoodStructure::ParthoodStructure(std::vector<std::string> labels,
                                     std::vector<Mask> part_rows,
                                     std::size_t max_universe)
    : labels_(std::move(labels)), up_(std::move(part_rows)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw DomainError("universe must be non-empty");
  if (max_universe > kMaskBits) max_universe = kMaskBits;
  if (n > max_universe)
    throw DomainError("universe of " + std::to_string(n) + " elements exceeds cap of " +
                      std::to_string(max_universe));
  if (up_.size() != n) throw DomainError("relation row count does not match universe");
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty()) throw DomainError("empty element label");
      if (!seen.insert(l).second) throw DomainError("duplicate element label '" + l + "'");
    }
  }
  universe_ = n == kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask row : up_)
    if ((row & ~universe_) != 0) throw DomainError("relation mentions element outside universe");

  down_.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x)
    for_each_bit(up_[x], [&](std::uint32_t y) { down_[y] |= bit(x); });

  ing_down_.resize(n);
  ing_up_.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    ing_down_[x] = down_[x] | bit(x);
    ing_up_[x] = up_[x] | bit(x);
  }
  ov_.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if ((ing_down_[x] & ing_down_[y]) != 0) ov_[x] |= bit(y);
}

ParthoodStructure ParthoodStructure::from_rows(std::vector<Mask> part_rows,
                                               std::size_t max_universe) {
  std::vector<std::string> labels;
  labels.reserve(part_rows.size());
  for (std::size_t i = 0; i < part_rows.size(); ++i) labels.push_back(std::to_string(i));
  return ParthoodStructure(std::move(labels), std::move(part_rows), max_universe);
}

ParthoodStructure ParthoodStructure::from_pairs(
    std::vector<std::string> labels,
    std::span<const std::pair<std::string, std::string>> pairs,
    std::size_t max_universe) {
  auto index_of = [&](const std::string& l) -> std::uint32_t {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw DomainError("unknown element '" + l + "'");
    return static_cast<std::uint32_t>(it - labels.begin());
  };
  std::vector<Mask> rows(labels.size(), 0);
  for (const auto& [part, whole] : pairs) rows[index_of(part)] |= bit(index_of(whole));
  return ParthoodStructure(std::move(labels), std::move(rows), max_universe);
}

std::vector<ElementId> ParthoodStructure::elements() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for (std::uint32_t i = 0; i < size(); ++i) out.push_back(ElementId{i});
  return out;
}

const std::string& ParthoodStructure::label(ElementId x) const {
  require(x);
  return labels_[x.index];
}

ElementId ParthoodStructure::element(std::string_view label) const {
  for (std::uint32_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return ElementId{i};
  throw DomainError("unknown element '" + std::string(label) + "'");
}

Subset ParthoodStructure::subset(std::span<const std::string> labels) const {
  Subset s;
  for (const auto& l : labels) s.insert(element(l));
  return s;
}

bool ParthoodStructure::part(ElementId x, ElementId y) const {
  require(x);
  require(y);
  return ((up_[x.index] >> y.index) & 1U) != 0;
}

void ParthoodStructure::require(ElementId x) const {
  if (x.index >= size())
    throw DomainError("element " + std::to_string(x.index) + " not in universe of size " +
                      std::to_string(size()));
}

void ParthoodStructure::require(Subset s) const {
  if ((s.bits() & ~universe_) != 0) throw DomainError("subset not contained in universe");
}

bool ing(const ParthoodStructure& s, ElementId x, ElementId y) {
  s.require(x);
  s.require(y);
  return ((s.ingredients_of(y.index) >> x.index) & 1U) != 0;
}

bool ov(const ParthoodStructure& s, ElementId x, ElementId y) {
  s.require(x);
  s.require(y);
  return ((s.overlapping(x.index) >> y.index) & 1U) != 0;
}

bool ext(const ParthoodStructure& s, ElementId x, ElementId y) { return !ov(s, x, y); }

bool pov(const ParthoodStructure& s, ElementId x, ElementId y) {
  s.require(x);
  s.require(y);
  if (x == y || s.part(x, y) || s.part(y, x)) return false;
  return (s.parts_of(x.index) & s.parts_of(y.index)) != 0;
}

bool is_zero(const ParthoodStructure& s, ElementId x) {
  s.require(x);
  return s.ing_above(x.index) == s.universe_mask();
}

bool is_unity(const ParthoodStructure& s, ElementId x) {
  s.require(x);
  return s.ingredients_of(x.index) == s.universe_mask();
}

Subset atoms(const ParthoodStructure& s) {
  Mask m = 0;
  for (std::uint32_t x = 0; x < s.size(); ++x)
    if (s.parts_of(x) == 0) m |= bit(x);
  return Subset{m};
}

}  // namespace mereo
