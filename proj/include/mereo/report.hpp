#pragma once

// Human-readable and JSON renderings of verdicts, plus DOT export.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mereo/axioms.hpp"
#include "mereo/lattice.hpp"
#include "mereo/sums.hpp"
#include "mereo/theories.hpp"
#include "mereo/weakparts.hpp"

namespace mereo {

/// "(u, {o1,o2})": witness elements, then the subset if any.
[[nodiscard]] std::string format_witness(const ParthoodStructure& s, const Witness& w);
[[nodiscard]] std::string format_subset(const ParthoodStructure& s, Subset set);
[[nodiscard]] std::string format_elements(const ParthoodStructure& s,
                                          const std::vector<ElementId>& xs);

[[nodiscard]] std::string verdict_line(const ParthoodStructure& s, const Verdict& v);
[[nodiscard]] std::string theory_text(std::string_view name, const ParthoodStructure& s,
                                      const TheoryVerdict& v);

[[nodiscard]] nlohmann::ordered_json witness_json(const ParthoodStructure& s, const Witness& w);
[[nodiscard]] nlohmann::ordered_json verdict_json(const ParthoodStructure& s, const Verdict& v);
[[nodiscard]] nlohmann::ordered_json axioms_json(std::string_view name, const ParthoodStructure& s,
                                                 const std::vector<Verdict>& vs);
[[nodiscard]] nlohmann::ordered_json theory_json(std::string_view name, const ParthoodStructure& s,
                                                 const TheoryVerdict& v);

[[nodiscard]] std::string lattice_text(const ZeroedStructure& z, const LatticeReport& r);
[[nodiscard]] nlohmann::ordered_json lattice_json(std::string_view name, const ZeroedStructure& z,
                                                  const LatticeReport& r);

/// Covering pairs (x, y) of Ing: x Ing y, x != y, and no third element between.
[[nodiscard]] std::vector<std::pair<ElementId, ElementId>> ing_covers(const ParthoodStructure& s);
/// Digraph with an edge part -> whole for every covering pair of Ing, or for
/// every pair of P when `full` is set.
[[nodiscard]] std::string to_dot(const ParthoodStructure& s, std::string_view name, bool full = false);

}  // namespace mereo
