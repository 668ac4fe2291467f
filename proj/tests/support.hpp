#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mereo/core.hpp"
#include "mereo/structure_file.hpp"
#include "oracle.hpp"

namespace support {

inline mereo::ParthoodStructure fixture(const std::string& name) {
  return mereo::load_structure(std::string(MEREO_FIXTURE_DIR) + "/" + name + ".txt");
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"b7",     "c2",          "chain4", "chain4_broken",
                                              "orch",   "s1",          "w4",     "x6"};
  return names;
}

inline mereo::ElementId el(const mereo::ParthoodStructure& s, const std::string& l) {
  return s.element(l);
}

inline mereo::Subset set(const mereo::ParthoodStructure& s, std::vector<std::string> ls) {
  return s.subset(ls);
}

inline std::vector<std::string> names(const mereo::ParthoodStructure& s,
                                      const std::vector<mereo::ElementId>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(s.label(x));
  return out;
}

inline oracle::Rel to_oracle(const mereo::ParthoodStructure& s) {
  oracle::Rel r(static_cast<int>(s.size()));
  for (std::uint32_t x = 0; x < s.size(); ++x)
    for (std::uint32_t y = 0; y < s.size(); ++y) r.p[x][y] = s.part({x}, {y});
  return r;
}

inline oracle::Set to_oracle(mereo::Subset s) {
  oracle::Set out;
  for (auto e : s.members()) out.push_back(static_cast<int>(e.index));
  return out;
}

/// Uniform random relation on n elements with edge density `p`.
inline mereo::ParthoodStructure random_structure(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<mereo::Mask> rows(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (edge(rng)) rows[x] |= mereo::bit(static_cast<std::uint32_t>(y));
  return mereo::ParthoodStructure::from_rows(std::move(rows));
}

/// Random strict partial order: a random DAG on a shuffled linear order, closed transitively.
inline mereo::ParthoodStructure random_order(std::mt19937& rng, std::size_t n, double p) {
  std::vector<std::uint32_t> pos(n);
  for (std::uint32_t i = 0; i < n; ++i) pos[i] = i;
  std::shuffle(pos.begin(), pos.end(), rng);
  std::bernoulli_distribution edge(p);
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (pos[x] < pos[y] && edge(rng)) r[x][y] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  std::vector<mereo::Mask> rows(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (r[x][y]) rows[x] |= mereo::bit(static_cast<std::uint32_t>(y));
  return mereo::ParthoodStructure::from_rows(std::move(rows));
}

}  // namespace support
