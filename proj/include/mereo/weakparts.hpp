#pragma once

// Parthood without assumed transitivity: acyclicity plus transitivity
// required only along part-paths between x and y when x P y.

#include <array>
#include <optional>
#include <vector>

#include "mereo/axioms.hpp"

namespace mereo {

/// Nodes x, z1, ..., zk, y with each consecutive pair in P.
struct PartPath {
  std::vector<ElementId> nodes;
  friend bool operator==(const PartPath&, const PartPath&) = default;
};

[[nodiscard]] bool is_valid_path(const ParthoodStructure& s, const PartPath& p);

/// Holds iff the P-digraph has no directed cycle; the witness lists the cycle.
[[nodiscard]] Verdict is_acyclic(const ParthoodStructure& s);

struct LocalTransitivityVerdict {
  bool holds = true;
  /// First offending path (lexicographic over pairs, then paths) and the
  /// first ordered triple (a, b, c) on its node set with a P b, b P c, not a P c.
  std::optional<PartPath> path;
  std::optional<std::array<ElementId, 3>> triple;
};

[[nodiscard]] LocalTransitivityVerdict is_locally_transitive(const ParthoodStructure& s);

/// All simple P-paths from x to y with at most max_len nodes, in
/// lexicographic order of node indices. max_len = 0 means the universe size.
[[nodiscard]] std::vector<PartPath> paths_between(const ParthoodStructure& s, ElementId x,
                                                  ElementId y, std::size_t max_len = 0);

}  // namespace mereo
