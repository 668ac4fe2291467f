#pragma once

// Finite parthood structures and the relations derived from "part of".

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mereo {

/// Hard ceiling imposed by the bitmask representation.
inline constexpr std::size_t kMaskBits = 32;
/// Default cap on universe size; 2^n subset scans stay cheap below it.
inline constexpr std::size_t kDefaultMaxUniverse = 12;

using Mask = std::uint32_t;

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ElementId {
  std::uint32_t index = 0;

  friend constexpr bool operator==(ElementId, ElementId) = default;
  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// A set of universe elements, stored as a characteristic bitmask.
/// Subsets are ordered by the numeric value of that mask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(Mask bits) : bits_(bits) {}
  Subset(std::initializer_list<ElementId> members) {
    for (auto e : members) insert(e);
  }

  [[nodiscard]] constexpr Mask bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  [[nodiscard]] constexpr bool contains(ElementId e) const {
    return e.index < kMaskBits && ((bits_ >> e.index) & 1U) != 0;
  }
  void insert(ElementId e) {
    if (e.index >= kMaskBits) throw DomainError("element index exceeds mask width");
    bits_ |= Mask{1} << e.index;
  }
  [[nodiscard]] std::vector<ElementId> members() const;

  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  Mask bits_ = 0;
};

/// A finite universe with an explicit binary relation P ("x is a part of y").
///
/// No axiom is imposed at construction. The derived relations (Ing, Ov) are
/// tabulated eagerly so every query is a constant-time mask test, and the
/// object is never mutated afterwards.
class ParthoodStructure {
 public:
  /// `part_rows[x]` has bit y set iff x P y.
  ParthoodStructure(std::vector<std::string> labels, std::vector<Mask> part_rows,
                    std::size_t max_universe = kDefaultMaxUniverse);

  /// Unlabelled structure; elements are named "0", "1", ...
  static ParthoodStructure from_rows(std::vector<Mask> part_rows,
                                     std::size_t max_universe = kDefaultMaxUniverse);
  /// Builds from (part, whole) label pairs.
  static ParthoodStructure from_pairs(
      std::vector<std::string> labels,
      std::span<const std::pair<std::string, std::string>> pairs,
      std::size_t max_universe = kDefaultMaxUniverse);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] Mask universe_mask() const { return universe_; }
  [[nodiscard]] Subset universe() const { return Subset{universe_}; }
  [[nodiscard]] std::vector<ElementId> elements() const;

  [[nodiscard]] const std::string& label(ElementId x) const;
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  /// Throws DomainError for an unknown label.
  [[nodiscard]] ElementId element(std::string_view label) const;
  [[nodiscard]] Subset subset(std::span<const std::string> labels) const;

  [[nodiscard]] bool part(ElementId x, ElementId y) const;

  // Raw mask accessors; indices are assumed valid.
  /// Elements y with x P y.
  [[nodiscard]] Mask wholes_of(std::uint32_t x) const { return up_[x]; }
  /// Elements u with u P x.
  [[nodiscard]] Mask parts_of(std::uint32_t x) const { return down_[x]; }
  /// Elements u with u Ing x.
  [[nodiscard]] Mask ingredients_of(std::uint32_t x) const { return ing_down_[x]; }
  /// Elements y with x Ing y.
  [[nodiscard]] Mask ing_above(std::uint32_t x) const { return ing_up_[x]; }
  /// Elements overlapping x.
  [[nodiscard]] Mask overlapping(std::uint32_t x) const { return ov_[x]; }

  [[nodiscard]] const std::vector<Mask>& part_rows() const { return up_; }

  void require(ElementId x) const;
  void require(Subset s) const;

  friend bool operator==(const ParthoodStructure& a, const ParthoodStructure& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> labels_;
  Mask universe_ = 0;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::vector<Mask> ing_down_;
  std::vector<Mask> ing_up_;
  std::vector<Mask> ov_;
};

[[nodiscard]] bool ing(const ParthoodStructure& s, ElementId x, ElementId y);
[[nodiscard]] bool ext(const ParthoodStructure& s, ElementId x, ElementId y);
[[nodiscard]] bool ov(const ParthoodStructure& s, ElementId x, ElementId y);
/// Crossing: distinct, neither part of the other, with a common part.
[[nodiscard]] bool pov(const ParthoodStructure& s, ElementId x, ElementId y);
[[nodiscard]] bool is_zero(const ParthoodStructure& s, ElementId x);
[[nodiscard]] bool is_unity(const ParthoodStructure& s, ElementId x);
[[nodiscard]] Subset atoms(const ParthoodStructure& s);

/// Iterate set bits of a mask in increasing order.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<std::uint32_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

inline constexpr Mask bit(std::uint32_t i) { return Mask{1} << i; }

}  // namespace mereo
