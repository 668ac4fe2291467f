#pragma once

// Test-only reference implementations. Everything here is written straight
// from the quantified definitions over a plain boolean matrix and shares no
// code with the library's mask kernels.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using Set = std::vector<int>;

struct Rel {
  int n = 0;
  std::vector<std::vector<bool>> p;  // p[x][y]: x is a part of y

  explicit Rel(int size) : n(size), p(size, std::vector<bool>(size, false)) {}

  bool P(int x, int y) const { return p[x][y]; }
  bool Ing(int x, int y) const { return x == y || p[x][y]; }
  bool Ov(int x, int y) const {
    for (int z = 0; z < n; ++z)
      if (Ing(z, x) && Ing(z, y)) return true;
    return false;
  }
  bool Ext(int x, int y) const { return !Ov(x, y); }
  bool POv(int x, int y) const {
    if (x == y || P(x, y) || P(y, x)) return false;
    for (int z = 0; z < n; ++z)
      if (P(z, x) && P(z, y)) return true;
    return false;
  }

  static bool in(const Set& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

  bool Sum(int x, const Set& s) const {
    for (int m : s)
      if (!Ing(m, x)) return false;
    for (int u = 0; u < n; ++u) {
      if (!Ing(u, x)) continue;
      bool some = false;
      for (int m : s) some = some || Ov(m, u);
      if (!some) return false;
    }
    return true;
  }
  bool Sup(int x, const Set& s) const {
    for (int m : s)
      if (!Ing(m, x)) return false;
    for (int u = 0; u < n; ++u) {
      bool ub = true;
      for (int m : s) ub = ub && Ing(m, u);
      if (ub && !Ing(x, u)) return false;
    }
    return true;
  }
  bool zero(int x) const {
    for (int u = 0; u < n; ++u)
      if (!Ing(x, u)) return false;
    return true;
  }
  bool unity(int x) const {
    for (int u = 0; u < n; ++u)
      if (!Ing(u, x)) return false;
    return true;
  }
  std::vector<Set> subsets() const {
    std::vector<Set> out;
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
      Set s;
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1U) s.push_back(i);
      out.push_back(s);
    }
    return out;
  }
};

inline Rel from_code(std::uint64_t code, int n) {
  Rel r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.p[i][j] = (code >> (n * n - 1 - (i * n + j))) & 1U;
  return r;
}

inline std::uint64_t code_of(const Rel& r) {
  std::uint64_t c = 0;
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j) c = (c << 1) | (r.p[i][j] ? 1U : 0U);
  return c;
}

inline std::uint64_t min_code(const Rel& r) {
  std::vector<int> perm(r.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    Rel q(r.n);
    for (int i = 0; i < r.n; ++i)
      for (int j = 0; j < r.n; ++j) q.p[perm[i]][perm[j]] = r.p[i][j];
    best = std::min(best, code_of(q));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Literal evaluation of catalog axioms by code string.
inline bool axiom(const Rel& r, const std::string& a) {
  const int n = r.n;
  auto all2 = [&](auto f) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!f(x, y)) return false;
    return true;
  };
  const auto subsets = r.subsets();
  auto all_sets = [&](auto f) {
    for (const auto& s : subsets)
      if (!f(s)) return false;
    return true;
  };
  auto exists = [&](auto f) {
    for (int z = 0; z < n; ++z)
      if (f(z)) return true;
    return false;
  };
  auto forall = [&](auto f) {
    for (int z = 0; z < n; ++z)
      if (!f(z)) return false;
    return true;
  };

  if (a == "IRR") return forall([&](int x) { return !r.P(x, x); });
  if (a == "ANTIS") return all2([&](int x, int y) { return !(x != y && r.P(x, y) && r.P(y, x)); });
  if (a == "AS") return all2([&](int x, int y) { return !(r.P(x, y) && r.P(y, x)); });
  if (a == "T")
    return all2([&](int x, int y) {
      return forall([&](int z) { return !(r.P(x, y) && r.P(y, z)) || r.P(x, z); });
    });
  if (a == "AC") {
    // Reachability closure: a cycle exists iff some x reaches itself.
    auto reach = r.p;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    return forall([&](int x) { return !reach[x][x]; });
  }
  if (a == "NO_ZERO") return n < 2 || !exists([&](int x) { return r.zero(x); });
  if (a == "EXISTS_EXT") return n < 2 || exists([&](int x) { return exists([&](int y) { return r.Ext(x, y); }); });
  if (a == "WSP")
    return all2([&](int x, int y) {
      return !r.P(y, x) || exists([&](int z) { return r.P(z, x) && r.Ext(z, y); });
    });
  if (a == "SSP")
    return all2([&](int x, int y) {
      return r.Ing(x, y) || exists([&](int z) { return r.Ing(z, x) && r.Ext(z, y); });
    });
  if (a == "SSP_OV")
    return all2([&](int x, int y) {
      return !forall([&](int u) { return !r.Ov(u, x) || r.Ov(u, y); }) || r.Ing(x, y);
    });
  if (a == "SSP_EXT")
    return all2([&](int x, int y) {
      return !forall([&](int u) { return !r.Ext(u, y) || r.Ext(u, x); }) || r.Ing(x, y);
    });
  if (a == "SSP_PLUS")
    return all2([&](int x, int y) {
      return r.Ing(x, y) || exists([&](int z) {
               return r.Ing(z, x) && r.Ext(z, y) &&
                      forall([&](int u) { return !(r.Ing(u, x) && r.Ext(u, y)) || r.Ing(u, z); });
             });
    });
  if (a == "PPP")
    return all2([&](int x, int y) {
      const bool ante = exists([&](int z) { return r.P(z, x); }) &&
                        forall([&](int u) { return !r.P(u, x) || r.P(u, y); });
      return !ante || r.Ing(x, y);
    });
  if (a == "U_SUM")
    return all_sets([&](const Set& s) {
      return all2([&](int x, int y) { return !(r.Sum(x, s) && r.Sum(y, s)) || x == y; });
    });
  if (a == "S_SUM") return all2([&](int x, int y) { return !r.Sum(x, {y}) || x == y; });
  if (a == "U_SUP")
    return all_sets([&](const Set& s) {
      return all2([&](int x, int y) { return !(r.Sup(x, s) && r.Sup(y, s)) || x == y; });
    });
  if (a == "EXT_PP")
    return all2([&](int x, int y) {
      const bool ante = exists([&](int z) { return r.P(z, x); }) &&
                        forall([&](int u) { return r.P(u, x) == r.P(u, y); });
      return !ante || x == y;
    });
  if (a == "EXT_ING")
    return all2([&](int x, int y) {
      return !forall([&](int u) { return r.Ing(u, x) == r.Ing(u, y); }) || x == y;
    });
  if (a == "EXT_OV")
    return all2([&](int x, int y) {
      return !forall([&](int u) { return r.Ov(u, x) == r.Ov(u, y); }) || x == y;
    });
  if (a == "EXT_EXT")
    return all2([&](int x, int y) {
      return !forall([&](int u) { return r.Ext(u, x) == r.Ext(u, y); }) || x == y;
    });
  if (a == "DOLLAR_EXT")
    return all_sets([&](const Set& s) {
      return forall([&](int x) {
        const bool rhs = forall([&](int u) {
          bool all_ext = true;
          for (int m : s) all_ext = all_ext && r.Ext(m, u);
          return r.Ext(u, x) == all_ext;
        });
        return r.Sum(x, s) == rhs;
      });
    });
  if (a == "DOLLAR_OV")
    return all_sets([&](const Set& s) {
      return forall([&](int x) {
        const bool rhs = forall([&](int u) {
          bool some = false;
          for (int m : s) some = some || r.Ov(m, u);
          return r.Ov(u, x) == some;
        });
        return r.Sum(x, s) == rhs;
      });
    });
  if (a == "DIAMOND")
    return all_sets([&](const Set& s) {
      return all2([&](int x, int y) { return !(r.Sum(x, s) && r.Sup(y, s)) || x == y; });
    });
  if (a == "SUM_SUB_SUP")
    return all_sets([&](const Set& s) { return forall([&](int x) { return !r.Sum(x, s) || r.Sup(x, s); }); });
  if (a == "SUP_SUB_SUM")
    return all_sets([&](const Set& s) { return forall([&](int x) { return !r.Sup(x, s) || r.Sum(x, s); }); });
  if (a == "DAGGER")
    return all_sets([&](const Set& s) {
      return forall([&](int x) { return !(!s.empty() && r.Sup(x, s)) || r.Sum(x, s); });
    });
  if (a == "DDAGGER")
    return all_sets([&](const Set& s) {
      return forall([&](int x) { return r.Sum(x, s) == (!s.empty() && r.Sup(x, s)); });
    });
  if (a == "C_PROD")
    return all2([&](int x, int y) {
      return !r.Ov(x, y) || exists([&](int z) {
               return forall([&](int u) { return r.Ing(u, z) == (r.Ing(u, x) && r.Ing(u, y)); });
             });
    });
  if (a == "C_BSUM")
    return all2([&](int x, int y) {
      const bool bounded = exists([&](int u) { return r.Ing(x, u) && r.Ing(y, u); });
      return !bounded || exists([&](int z) { return r.Sum(z, {x, y}); });
    });
  if (a == "E_BSUM")
    return all2([&](int x, int y) { return exists([&](int z) { return r.Sum(z, {x, y}); }); });
  if (a == "E_SUM")
    return all_sets([&](const Set& s) {
      return s.empty() || exists([&](int x) { return r.Sum(x, s); });
    });
  if (a == "UNITY") return exists([&](int x) { return r.unity(x); });
  throw std::invalid_argument("oracle: unknown axiom " + a);
}

inline bool all_of(const Rel& r, const std::vector<std::string>& axioms) {
  return std::all_of(axioms.begin(), axioms.end(), [&](const std::string& a) { return axiom(r, a); });
}

/// Naive enumeration over all 2^(n*n) relations.
/// Returns {labelled count, number of isomorphism classes}.
inline std::pair<std::uint64_t, std::uint64_t> naive_count(int n, const std::vector<std::string>& axioms) {
  std::uint64_t labelled = 0;
  std::map<std::uint64_t, bool> classes;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t c = 0; c < total; ++c) {
    const Rel r = from_code(c, n);
    if (!all_of(r, axioms)) continue;
    ++labelled;
    classes[min_code(r)] = true;
  }
  return {labelled, classes.size()};
}

}  // namespace oracle
