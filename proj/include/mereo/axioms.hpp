#pragma once

// Catalog of parthood principles as decidable predicates over finite
// structures. Every failing verdict carries the first violating assignment.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mereo/core.hpp"

namespace mereo {

enum class AxiomId {
  IRR,
  ANTIS,
  AS,
  T,
  AC,
  NO_ZERO,
  EXISTS_EXT,
  WSP,
  SSP,
  SSP_OV,
  SSP_EXT,
  SSP_PLUS,
  PPP,
  U_SUM,
  S_SUM,
  U_SUP,
  EXT_PP,
  EXT_ING,
  EXT_OV,
  EXT_EXT,
  DOLLAR_EXT,
  DOLLAR_OV,
  DIAMOND,
  SUM_SUB_SUP,
  SUP_SUB_SUM,
  DAGGER,
  DDAGGER,
  C_PROD,
  C_BSUM,
  E_BSUM,
  E_SUM,
  UNITY,
};

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// How an axiom quantifies; fixes the layout of its witness.
enum class Shape {
  nullary,       // no free variables in the violating matrix
  elem1,         // x
  elem2,         // x, y
  elem3,         // x, y, z
  set,           // S
  set_elem1,     // S, x
  set_elem2,     // S, x, y
  cycle,         // x1 .. xk with x1 P x2 P .. P xk P x1
};

struct Witness {
  std::vector<ElementId> elements;
  std::optional<Subset> subset;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  AxiomId axiom{};
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
};

/// All axioms in catalog order.
[[nodiscard]] std::span<const AxiomId> catalog();
[[nodiscard]] std::string_view axiom_code(AxiomId a);
/// Conventional display label, e.g. "SSP+" or "Sum⊆Sup".
[[nodiscard]] std::string_view axiom_label(AxiomId a);
[[nodiscard]] Shape axiom_shape(AxiomId a);
/// Case-insensitive lookup by code; throws CatalogError.
[[nodiscard]] AxiomId parse_axiom(std::string_view code);
/// Comma- or space-separated list of codes.
[[nodiscard]] std::vector<AxiomId> parse_axiom_list(std::string_view codes);

[[nodiscard]] Verdict check_axiom(const ParthoodStructure& s, AxiomId a);
[[nodiscard]] std::vector<Verdict> check_all(const ParthoodStructure& s);
[[nodiscard]] bool holds(const ParthoodStructure& s, AxiomId a);
[[nodiscard]] bool holds_all(const ParthoodStructure& s, std::span<const AxiomId> axioms);

/// Evaluates the axiom's matrix at the given assignment; true iff that
/// assignment violates the axiom. Used to re-check witnesses.
[[nodiscard]] bool violated_at(const ParthoodStructure& s, AxiomId a, const Witness& w);

/// Only the right-to-left half of ($_Ext) or ($_Ov):
/// for all x, S, the characterisation via Ext (resp. Ov) implies x Sum S.
/// `a` must be DOLLAR_EXT or DOLLAR_OV.
[[nodiscard]] Verdict check_dollar_converse(const ParthoodStructure& s, AxiomId a);

}  // namespace mereo
