#include "mereo/weakparts.hpp"

#include <bit>

namespace mereo {

bool is_valid_path(const ParthoodStructure& s, const PartPath& p) {
  if (p.nodes.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i)
    if (!s.part(p.nodes[i], p.nodes[i + 1])) return false;
  return true;
}

Verdict is_acyclic(const ParthoodStructure& s) { return check_axiom(s, AxiomId::AC); }

std::vector<PartPath> paths_between(const ParthoodStructure& s, ElementId x, ElementId y,
                                    std::size_t max_len) {
  s.require(x);
  s.require(y);
  if (max_len == 0) max_len = s.size();
  std::vector<PartPath> out;
  if (x == y || max_len < 2) return out;

  // DFS visiting successors in index order yields lexicographic output.
  std::vector<ElementId> path{x};
  Mask used = bit(x.index);
  auto dfs = [&](auto&& self, std::uint32_t v) -> void {
    for_each_bit(s.wholes_of(v), [&](std::uint32_t w) {
      if ((used >> w) & 1U) return;
      path.push_back(ElementId{w});
      if (w == y.index) {
        out.push_back(PartPath{path});
      } else if (path.size() < max_len) {
        used |= bit(w);
        self(self, w);
        used &= ~bit(w);
      }
      path.pop_back();
    });
  };
  dfs(dfs, x.index);
  return out;
}

LocalTransitivityVerdict is_locally_transitive(const ParthoodStructure& s) {
  const auto n = static_cast<std::uint32_t>(s.size());
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (x == y || !((s.wholes_of(x) >> y) & 1U)) continue;
      for (const PartPath& p : paths_between(s, ElementId{x}, ElementId{y})) {
        Mask nodes = 0;
        for (auto e : p.nodes) nodes |= bit(e.index);
        // P restricted to the node set must be transitive.
        for (std::uint32_t a = 0; a < n; ++a) {
          if (!((nodes >> a) & 1U)) continue;
          for (std::uint32_t b = 0; b < n; ++b) {
            if (!((nodes >> b) & 1U) || !((s.wholes_of(a) >> b) & 1U)) continue;
            const Mask missing = s.wholes_of(b) & nodes & ~s.wholes_of(a);
            if (missing != 0) {
              const auto c = static_cast<std::uint32_t>(std::countr_zero(missing));
              return {false, p, std::array{ElementId{a}, ElementId{b}, ElementId{c}}};
            }
          }
        }
      }
    }
  }
  return {};
}

}  // namespace mereo
