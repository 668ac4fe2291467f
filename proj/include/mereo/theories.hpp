#pragma once

// Named theories of parthood as bundles of catalog axioms.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mereo/axioms.hpp"

namespace mereo {

enum class TheoryId {
  SPO,        // strict partial orders
  T1,         // + uniqueness of sums
  T2,         // + uniqueness of sums and the proper parts principle
  T3,         // + strong supplementation
  MSPO_DAG,   // mereological strict partial order, Sum ⊆ Sup and (†)
  MSPO_DDAG,  // mereological strict partial order, (‡)
  MEM,        // minimal extensional mereology
  MCM,        // minimal closure mereology
  GM,         // Grzegorczykian mereology
  GMU,        // Grzegorczykian mereology with unity
  CM,         // classical mereology
};

struct TheoryVerdict {
  TheoryId theory{};
  bool holds = true;
  /// Verdict of the first failing axiom of the bundle.
  std::optional<Verdict> failure;
};

[[nodiscard]] std::span<const TheoryId> theories();
[[nodiscard]] std::string_view theory_code(TheoryId t);
[[nodiscard]] std::string_view theory_title(TheoryId t);
/// Case-insensitive; throws CatalogError.
[[nodiscard]] TheoryId parse_theory(std::string_view code);

[[nodiscard]] std::span<const AxiomId> theory_axioms(TheoryId t);
/// Catalog entries asserted to be theses of the theory on finite models.
[[nodiscard]] std::span<const AxiomId> derived_theses(TheoryId t);

[[nodiscard]] TheoryVerdict check_theory(const ParthoodStructure& s, TheoryId t);

}  // namespace mereo
