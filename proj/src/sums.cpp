#include "mereo/sums.hpp"

namespace mereo {
namespace {

std::vector<ElementId> to_ids(Mask m) { return Subset{m}.members(); }

OpResult resolve(const ParthoodStructure& s, Mask set) {
  OpResult r;
  const Mask c = sums_of_mask(s, set);
  r.candidates = to_ids(c);
  if (c == 0) {
    r.status = OpStatus::absent;
  } else if (std::popcount(c) == 1) {
    r.status = OpStatus::found;
    r.value = r.candidates.front();
  } else {
    r.status = OpStatus::ambiguous;
  }
  return r;
}

}  // namespace

bool sum_mask(const ParthoodStructure& s, std::uint32_t x, Mask set) {
  const Mask ings = s.ingredients_of(x);
  if ((set & ~ings) != 0) return false;
  for (Mask m = ings; m != 0; m &= m - 1) {
    const auto u = static_cast<std::uint32_t>(std::countr_zero(m));
    if ((s.overlapping(u) & set) == 0) return false;
  }
  return true;
}

Mask upper_bounds(const ParthoodStructure& s, Mask set) {
  Mask ub = s.universe_mask();
  for_each_bit(set, [&](std::uint32_t m) { ub &= s.ing_above(m); });
  return ub;
}

bool sup_mask(const ParthoodStructure& s, std::uint32_t x, Mask set) {
  const Mask ub = upper_bounds(s, set);
  if (((ub >> x) & 1U) == 0) return false;
  return (ub & ~s.ing_above(x)) == 0;
}

Mask sums_of_mask(const ParthoodStructure& s, Mask set) {
  Mask out = 0;
  for (std::uint32_t x = 0; x < s.size(); ++x)
    if (sum_mask(s, x, set)) out |= bit(x);
  return out;
}

Mask sups_of_mask(const ParthoodStructure& s, Mask set) {
  const Mask ub = upper_bounds(s, set);
  Mask out = 0;
  for_each_bit(ub, [&](std::uint32_t x) {
    if ((ub & ~s.ing_above(x)) == 0) out |= bit(x);
  });
  return out;
}

bool is_sum(const ParthoodStructure& s, ElementId x, Subset set) {
  s.require(x);
  s.require(set);
  return sum_mask(s, x.index, set.bits());
}

bool is_sup(const ParthoodStructure& s, ElementId x, Subset set) {
  s.require(x);
  s.require(set);
  return sup_mask(s, x.index, set.bits());
}

SumQueryResult sum_of(const ParthoodStructure& s, Subset set) {
  s.require(set);
  const Mask c = sums_of_mask(s, set.bits());
  return {to_ids(c), std::popcount(c) == 1};
}

SupQueryResult sup_of(const ParthoodStructure& s, Subset set) {
  s.require(set);
  const Mask c = sups_of_mask(s, set.bits());
  return {to_ids(c), std::popcount(c) == 1};
}

OpResult product(const ParthoodStructure& s, ElementId x, ElementId y) {
  s.require(x);
  s.require(y);
  return resolve(s, s.ingredients_of(x.index) & s.ingredients_of(y.index));
}

OpResult difference(const ParthoodStructure& s, ElementId x, ElementId y) {
  s.require(x);
  s.require(y);
  return resolve(s, s.ingredients_of(x.index) & ~s.overlapping(y.index));
}

std::optional<ElementId> unity(const ParthoodStructure& s) {
  for (std::uint32_t x = 0; x < s.size(); ++x)
    if (s.ingredients_of(x) == s.universe_mask()) return ElementId{x};
  return std::nullopt;
}

OpResult complement(const ParthoodStructure& s, ElementId x) {
  s.require(x);
  const auto one = unity(s);
  if (!one || *one == x) return {};
  return difference(s, *one, x);
}

OpResult binary_sum(const ParthoodStructure& s, ElementId x, ElementId y) {
  s.require(x);
  s.require(y);
  return resolve(s, bit(x.index) | bit(y.index));
}

OpResult product_by_cases(const ParthoodStructure& s, ElementId x, ElementId y) {
  if (ing(s, x, y)) return {OpStatus::found, x, {x}};
  if (ing(s, y, x)) return {OpStatus::found, y, {y}};
  if (!pov(s, y, x)) return {};
  const OpResult rest = difference(s, x, y);
  if (!rest.found()) return rest;
  return difference(s, x, *rest.value);
}

}  // namespace mereo
