#pragma once

// Mereological sums, suprema, and the algebraic operations built on them.

#include <optional>
#include <vector>

#include "mereo/core.hpp"

namespace mereo {

struct SumQueryResult {
  std::vector<ElementId> candidates;  // universe order
  bool unique = false;
};

using SupQueryResult = SumQueryResult;

/// Outcome of product/difference/complement/binary sum. An operation whose
/// defining set has several sums is `ambiguous`, which only happens on
/// structures violating uniqueness of sums.
enum class OpStatus { found, absent, ambiguous };

struct OpResult {
  OpStatus status = OpStatus::absent;
  std::optional<ElementId> value;
  std::vector<ElementId> candidates;

  [[nodiscard]] bool found() const { return status == OpStatus::found; }
  friend bool operator==(const OpResult&, const OpResult&) = default;
};

// Mask-level kernels used by the axiom checkers; no bounds checking.
[[nodiscard]] bool sum_mask(const ParthoodStructure& s, std::uint32_t x, Mask set);
[[nodiscard]] bool sup_mask(const ParthoodStructure& s, std::uint32_t x, Mask set);
/// Elements u with every member of `set` Ing u.
[[nodiscard]] Mask upper_bounds(const ParthoodStructure& s, Mask set);
[[nodiscard]] Mask sums_of_mask(const ParthoodStructure& s, Mask set);
[[nodiscard]] Mask sups_of_mask(const ParthoodStructure& s, Mask set);

/// x Sum S: every member of S is an ingrediens of x, and every ingrediens
/// of x overlaps some member of S.
[[nodiscard]] bool is_sum(const ParthoodStructure& s, ElementId x, Subset set);
/// x Sup S: x is an upper bound of S under Ing and an ingrediens of every
/// other upper bound.
[[nodiscard]] bool is_sup(const ParthoodStructure& s, ElementId x, Subset set);

[[nodiscard]] SumQueryResult sum_of(const ParthoodStructure& s, Subset set);
[[nodiscard]] SupQueryResult sup_of(const ParthoodStructure& s, Subset set);

/// Sum of the common ingredienses of x and y.
[[nodiscard]] OpResult product(const ParthoodStructure& s, ElementId x, ElementId y);
/// Sum of the ingredienses of x exterior to y.
[[nodiscard]] OpResult difference(const ParthoodStructure& s, ElementId x, ElementId y);
/// Difference from the unity; absent without a unity or for the unity itself.
[[nodiscard]] OpResult complement(const ParthoodStructure& s, ElementId x);
[[nodiscard]] OpResult binary_sum(const ParthoodStructure& s, ElementId x, ElementId y);

/// The product by cases: x if x Ing y, y if y Ing x, x-(x-y) if they cross,
/// absent when exterior. Meaningful on models of Grzegorczykian mereology.
[[nodiscard]] OpResult product_by_cases(const ParthoodStructure& s, ElementId x, ElementId y);

[[nodiscard]] std::optional<ElementId> unity(const ParthoodStructure& s);

}  // namespace mereo
