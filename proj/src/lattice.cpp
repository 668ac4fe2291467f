#include "mereo/lattice.hpp"

#include <algorithm>

#include "mereo/theories.hpp"

namespace mereo {
namespace {

bool strict_order(const ParthoodStructure& s) {
  const auto n = static_cast<std::uint32_t>(s.size());
  for (std::uint32_t x = 0; x < n; ++x) {
    if ((s.wholes_of(x) >> x) & 1U) return false;
    for (std::uint32_t y = 0; y < n; ++y)
      if (((s.wholes_of(x) >> y) & 1U) && (s.wholes_of(y) & ~s.wholes_of(x)) != 0) return false;
  }
  return true;
}

std::string fresh_zero_label(const ParthoodStructure& s) {
  std::string l = "0";
  auto taken = [&](const std::string& c) {
    return std::find(s.labels().begin(), s.labels().end(), c) != s.labels().end();
  };
  while (taken(l)) l += "'";
  return l;
}

// Greatest element of `set` under the order, if any.
std::optional<std::uint32_t> greatest(const ZeroedStructure& z, Mask set) {
  std::optional<std::uint32_t> g;
  for_each_bit(set, [&](std::uint32_t c) {
    if (!g && (set & ~z.below(c)) == 0) g = c;
  });
  return g;
}

Mask above(const ZeroedStructure& z, std::uint32_t a) {
  Mask m = 0;
  for (std::uint32_t b = 0; b < z.size(); ++b)
    if (z.leq(a, b)) m |= bit(b);
  return m;
}

std::optional<std::uint32_t> least(const ZeroedStructure& z, Mask set) {
  std::optional<std::uint32_t> l;
  for_each_bit(set, [&](std::uint32_t c) {
    if (!l && (set & ~above(z, c)) == 0) l = c;
  });
  return l;
}

Mask all(std::size_t n) { return n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

ZeroedStructure::ZeroedStructure(const ParthoodStructure& s)
    : base_(s), zero_label_(fresh_zero_label(s)) {
  const auto n = static_cast<std::uint32_t>(s.size());
  if (n + 1 > kMaskBits) throw OrderError("structure too large for zero adjunction");
  below_.assign(n + 1, 0);
  for (std::uint32_t b = 0; b < n; ++b) below_[b] = s.ingredients_of(b) | bit(n);
  below_[n] = bit(n);
}

const std::string& ZeroedStructure::label(std::uint32_t a) const {
  if (a == zero()) return zero_label_;
  return base_.label(ElementId{a});
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> ZeroedStructure::covers() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const auto n = static_cast<std::uint32_t>(size());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool between = false;
      for (std::uint32_t c = 0; c < n && !between; ++c)
        between = c != a && c != b && leq(a, c) && leq(c, b);
      if (!between) out.emplace_back(a, b);
    }
  return out;
}

ZeroedStructure adjoin_zero(const ParthoodStructure& s) {
  if (!strict_order(s))
    throw OrderError("zero adjunction needs a transitive irreflexive part relation");
  return ZeroedStructure(s);
}

ZeroedStructure adjoin_zero_unchecked(const ParthoodStructure& s) { return ZeroedStructure(s); }

ParthoodStructure remove_zero(const ZeroedStructure& z) { return z.base(); }

LatticeReport lattice_report(const ZeroedStructure& z) {
  LatticeReport r;
  const auto n = static_cast<std::uint32_t>(z.size());
  const Mask top_mask = all(n);
  r.is_nondegenerate = n >= 2;
  auto fail = [&](const char* law, std::vector<std::uint32_t> w) {
    if (!r.failed_law) {
      r.failed_law = law;
      r.witness = std::move(w);
    }
  };

  r.is_partial_order = true;
  for (std::uint32_t a = 0; a < n && r.is_partial_order; ++a) {
    if (!z.leq(a, a)) {
      r.is_partial_order = false;
      fail("partial order", {a});
    }
    for (std::uint32_t b = 0; b < n && r.is_partial_order; ++b) {
      if (a != b && z.leq(a, b) && z.leq(b, a)) {
        r.is_partial_order = false;
        fail("partial order", {a, b});
      }
      for (std::uint32_t c = 0; c < n && r.is_partial_order; ++c)
        if (z.leq(a, b) && z.leq(b, c) && !z.leq(a, c)) {
          r.is_partial_order = false;
          fail("partial order", {a, b, c});
        }
    }
  }
  if (!r.is_partial_order) return r;

  std::vector<std::optional<std::uint32_t>> meet(n * n), join(n * n);
  r.is_lattice = true;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      meet[a * n + b] = greatest(z, z.below(a) & z.below(b));
      join[a * n + b] = least(z, above(z, a) & above(z, b));
      if (!meet[a * n + b] && r.is_lattice) {
        r.is_lattice = false;
        fail("meet", {a, b});
      }
      if (!join[a * n + b] && r.is_lattice) {
        r.is_lattice = false;
        fail("join", {a, b});
      }
    }

  // Completeness: every subset, the empty one included, has a join.
  r.is_complete = true;
  for (Mask set = 0;; ++set) {
    Mask ub = top_mask;
    for_each_bit(set, [&](std::uint32_t m) { ub &= above(z, m); });
    if (!least(z, ub)) {
      r.is_complete = false;
      std::vector<std::uint32_t> w;
      for_each_bit(set, [&](std::uint32_t e) { w.push_back(e); });
      fail("completeness", std::move(w));
      break;
    }
    if (set == top_mask) break;
  }
  if (!r.is_lattice) return r;

  auto m = [&](std::uint32_t a, std::uint32_t b) { return *meet[a * n + b]; };
  auto j = [&](std::uint32_t a, std::uint32_t b) { return *join[a * n + b]; };

  r.is_distributive = true;
  for (std::uint32_t a = 0; a < n && r.is_distributive; ++a)
    for (std::uint32_t b = 0; b < n && r.is_distributive; ++b)
      for (std::uint32_t c = 0; c < n && r.is_distributive; ++c)
        if (m(a, j(b, c)) != j(m(a, b), m(a, c))) {
          r.is_distributive = false;
          fail("distributivity", {a, b, c});
        }

  const auto bottom = least(z, top_mask);
  const auto top = greatest(z, top_mask);
  r.is_complemented = bottom && top;
  for (std::uint32_t a = 0; a < n && r.is_complemented; ++a) {
    bool has = false;
    for (std::uint32_t b = 0; b < n && !has; ++b) has = m(a, b) == *bottom && j(a, b) == *top;
    if (!has) {
      r.is_complemented = false;
      fail("complement", {a});
    }
  }
  r.is_boolean = r.is_lattice && r.is_distributive && r.is_complemented;
  return r;
}

TarskiSides tarski_sides(const ParthoodStructure& s) {
  TarskiSides t;
  t.classical = check_theory(s, TheoryId::CM).holds;
  if (strict_order(s) && s.size() + 1 <= kMaskBits) {
    const LatticeReport r = lattice_report(adjoin_zero(s));
    t.boolean_side = r.is_boolean && r.is_complete && r.is_nondegenerate;
  }
  return t;
}

bool tarski_check(const ParthoodStructure& s) { return tarski_sides(s).agree(); }

ParthoodStructure boolean_structure(std::size_t k) {
  if (k == 0 || k >= 6) throw DomainError("boolean_structure supports 1..5 atoms");
  const Mask count = (Mask{1} << k) - 1;  // non-empty subsets
  // Order by cardinality, then numerically, so atoms come first.
  std::vector<Mask> sets;
  for (Mask m = 1; m <= count; ++m) sets.push_back(m);
  std::stable_sort(sets.begin(), sets.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::string> labels;
  for (Mask m : sets) {
    std::string l;
    for_each_bit(m, [&](std::uint32_t i) { l.push_back(static_cast<char>('a' + i)); });
    labels.push_back(l);
  }
  std::vector<Mask> rows(sets.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && (sets[i] & ~sets[j]) == 0) rows[i] |= bit(static_cast<std::uint32_t>(j));
  return ParthoodStructure(std::move(labels), std::move(rows), kMaskBits);
}

}  // namespace mereo
