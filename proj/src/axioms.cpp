#include "mereo/axioms.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "mereo/sums.hpp"

namespace mereo {
namespace {

struct Entry {
  AxiomId id;
  std::string_view code;
  std::string_view label;
  Shape shape;
};

constexpr std::array<Entry, 32> kCatalog{{
    {AxiomId::IRR, "IRR", "irr", Shape::elem1},
    {AxiomId::ANTIS, "ANTIS", "antis", Shape::elem2},
    {AxiomId::AS, "AS", "as", Shape::elem2},
    {AxiomId::T, "T", "t", Shape::elem3},
    {AxiomId::AC, "AC", "ac", Shape::cycle},
    {AxiomId::NO_ZERO, "NO_ZERO", "∄0", Shape::elem1},
    {AxiomId::EXISTS_EXT, "EXISTS_EXT", "∃Ext", Shape::nullary},
    {AxiomId::WSP, "WSP", "WSP", Shape::elem2},
    {AxiomId::SSP, "SSP", "SSP", Shape::elem2},
    {AxiomId::SSP_OV, "SSP_OV", "SSP_Ov", Shape::elem2},
    {AxiomId::SSP_EXT, "SSP_EXT", "SSP_Ext", Shape::elem2},
    {AxiomId::SSP_PLUS, "SSP_PLUS", "SSP+", Shape::elem2},
    {AxiomId::PPP, "PPP", "PPP", Shape::elem2},
    {AxiomId::U_SUM, "U_SUM", "U_Sum", Shape::set_elem2},
    {AxiomId::S_SUM, "S_SUM", "S_Sum", Shape::elem2},
    {AxiomId::U_SUP, "U_SUP", "U_Sup", Shape::set_elem2},
    {AxiomId::EXT_PP, "EXT_PP", "ext_P", Shape::elem2},
    {AxiomId::EXT_ING, "EXT_ING", "ext_Ing", Shape::elem2},
    {AxiomId::EXT_OV, "EXT_OV", "ext_Ov", Shape::elem2},
    {AxiomId::EXT_EXT, "EXT_EXT", "ext_Ext", Shape::elem2},
    {AxiomId::DOLLAR_EXT, "DOLLAR_EXT", "$_Ext", Shape::set_elem1},
    {AxiomId::DOLLAR_OV, "DOLLAR_OV", "$_Ov", Shape::set_elem1},
    {AxiomId::DIAMOND, "DIAMOND", "◇", Shape::set_elem2},
    {AxiomId::SUM_SUB_SUP, "SUM_SUB_SUP", "Sum⊆Sup", Shape::set_elem1},
    {AxiomId::SUP_SUB_SUM, "SUP_SUB_SUM", "Sup⊆Sum", Shape::set_elem1},
    {AxiomId::DAGGER, "DAGGER", "†", Shape::set_elem1},
    {AxiomId::DDAGGER, "DDAGGER", "‡", Shape::set_elem1},
    {AxiomId::C_PROD, "C_PROD", "c∃⊓", Shape::elem2},
    {AxiomId::C_BSUM, "C_BSUM", "c∃⊔", Shape::elem2},
    {AxiomId::E_BSUM, "E_BSUM", "∃⊔", Shape::elem2},
    {AxiomId::E_SUM, "E_SUM", "∃Sum", Shape::set},
    {AxiomId::UNITY, "UNITY", "unity", Shape::nullary},
}};

constexpr std::array<AxiomId, 32> kOrder = [] {
  std::array<AxiomId, 32> out{};
  for (std::size_t i = 0; i < kCatalog.size(); ++i) out[i] = kCatalog[i].id;
  return out;
}();

const Entry& entry(AxiomId a) {
  const auto i = static_cast<std::size_t>(a);
  if (i >= kCatalog.size()) throw CatalogError("unknown axiom id");
  return kCatalog[i];
}

bool has(Mask m, std::uint32_t i) { return ((m >> i) & 1U) != 0; }
bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

// Elements u whose overlap set meets `set` (u overlaps some member).
Mask overlapping_some(const ParthoodStructure& s, Mask set) {
  Mask out = 0;
  for (std::uint32_t u = 0; u < s.size(); ++u)
    if ((s.overlapping(u) & set) != 0) out |= bit(u);
  return out;
}

// Elements u exterior to every member of `set`.
Mask exterior_to_all(const ParthoodStructure& s, Mask set) {
  return s.universe_mask() & ~overlapping_some(s, set);
}

Mask exterior_to(const ParthoodStructure& s, std::uint32_t x) {
  return s.universe_mask() & ~s.overlapping(x);
}

bool ing_(const ParthoodStructure& s, std::uint32_t x, std::uint32_t y) {
  return has(s.ingredients_of(y), x);
}
bool part_(const ParthoodStructure& s, std::uint32_t x, std::uint32_t y) {
  return has(s.wholes_of(x), y);
}

// Matrix bodies: return true when the assignment violates the axiom.

bool bad1(const ParthoodStructure& s, AxiomId a, std::uint32_t x) {
  switch (a) {
    case AxiomId::IRR:
      return part_(s, x, x);
    case AxiomId::NO_ZERO:
      return s.size() >= 2 && s.ing_above(x) == s.universe_mask();
    default:
      return false;
  }
}

bool bad2(const ParthoodStructure& s, AxiomId a, std::uint32_t x, std::uint32_t y) {
  switch (a) {
    case AxiomId::ANTIS:
      return x != y && part_(s, x, y) && part_(s, y, x);
    case AxiomId::AS:
      return part_(s, x, y) && part_(s, y, x);
    case AxiomId::WSP:
      // x P y, and no part of y is exterior to x.
      return part_(s, x, y) && (s.parts_of(y) & exterior_to(s, x)) == 0;
    case AxiomId::SSP:
      return !ing_(s, x, y) && (s.ingredients_of(x) & exterior_to(s, y)) == 0;
    case AxiomId::SSP_OV:
      return subset_of(s.overlapping(x), s.overlapping(y)) && !ing_(s, x, y);
    case AxiomId::SSP_EXT:
      return subset_of(exterior_to(s, y), exterior_to(s, x)) && !ing_(s, x, y);
    case AxiomId::SSP_PLUS: {
      if (ing_(s, x, y)) return false;
      const Mask rest = s.ingredients_of(x) & exterior_to(s, y);
      bool found = false;
      for_each_bit(rest, [&](std::uint32_t z) {
        if (subset_of(rest, s.ingredients_of(z))) found = true;
      });
      return !found;
    }
    case AxiomId::PPP:
      return s.parts_of(x) != 0 && subset_of(s.parts_of(x), s.parts_of(y)) && !ing_(s, x, y);
    case AxiomId::S_SUM:
      return x != y && sum_mask(s, x, bit(y));
    case AxiomId::EXT_PP:
      return x != y && s.parts_of(x) != 0 && s.parts_of(x) == s.parts_of(y);
    case AxiomId::EXT_ING:
      return x != y && s.ingredients_of(x) == s.ingredients_of(y);
    case AxiomId::EXT_OV:
      return x != y && s.overlapping(x) == s.overlapping(y);
    case AxiomId::EXT_EXT:
      return x != y && exterior_to(s, x) == exterior_to(s, y);
    case AxiomId::C_PROD: {
      if (!has(s.overlapping(x), y)) return false;
      const Mask common = s.ingredients_of(x) & s.ingredients_of(y);
      for (std::uint32_t z = 0; z < s.size(); ++z)
        if (s.ingredients_of(z) == common) return false;
      return true;
    }
    case AxiomId::C_BSUM:
      return (s.ing_above(x) & s.ing_above(y)) != 0 && sums_of_mask(s, bit(x) | bit(y)) == 0;
    case AxiomId::E_BSUM:
      return sums_of_mask(s, bit(x) | bit(y)) == 0;
    default:
      return false;
  }
}

bool bad3(const ParthoodStructure& s, AxiomId a, std::uint32_t x, std::uint32_t y,
          std::uint32_t z) {
  return a == AxiomId::T && part_(s, x, y) && part_(s, y, z) && !part_(s, x, z);
}

bool bad_set(const ParthoodStructure& s, AxiomId a, Mask set) {
  return a == AxiomId::E_SUM && set != 0 && sums_of_mask(s, set) == 0;
}

bool bad_set1(const ParthoodStructure& s, AxiomId a, Mask set, std::uint32_t x) {
  switch (a) {
    case AxiomId::DOLLAR_EXT: {
      const bool rhs = exterior_to(s, x) == exterior_to_all(s, set);
      return sum_mask(s, x, set) != rhs;
    }
    case AxiomId::DOLLAR_OV: {
      const bool rhs = s.overlapping(x) == overlapping_some(s, set);
      return sum_mask(s, x, set) != rhs;
    }
    case AxiomId::SUM_SUB_SUP:
      return sum_mask(s, x, set) && !sup_mask(s, x, set);
    case AxiomId::SUP_SUB_SUM:
      return sup_mask(s, x, set) && !sum_mask(s, x, set);
    case AxiomId::DAGGER:
      return set != 0 && sup_mask(s, x, set) && !sum_mask(s, x, set);
    case AxiomId::DDAGGER:
      return sum_mask(s, x, set) != (set != 0 && sup_mask(s, x, set));
    default:
      return false;
  }
}

bool bad_set2(const ParthoodStructure& s, AxiomId a, Mask set, std::uint32_t x,
              std::uint32_t y) {
  if (x == y) return false;
  switch (a) {
    case AxiomId::U_SUM:
      return sum_mask(s, x, set) && sum_mask(s, y, set);
    case AxiomId::U_SUP:
      return sup_mask(s, x, set) && sup_mask(s, y, set);
    case AxiomId::DIAMOND:
      return sum_mask(s, x, set) && sup_mask(s, y, set);
    default:
      return false;
  }
}

bool bad0(const ParthoodStructure& s, AxiomId a) {
  switch (a) {
    case AxiomId::EXISTS_EXT: {
      if (s.size() < 2) return false;
      for (std::uint32_t x = 0; x < s.size(); ++x)
        if (exterior_to(s, x) != 0) return false;
      return true;
    }
    case AxiomId::UNITY:
      return !unity(s).has_value();
    default:
      return false;
  }
}

// First directed cycle of the P-digraph, found by DFS from the lowest index.
std::optional<std::vector<ElementId>> find_cycle(const ParthoodStructure& s) {
  const std::size_t n = s.size();
  std::vector<int> color(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::uint32_t> stack;
  std::optional<std::vector<ElementId>> found;

  auto dfs = [&](auto&& self, std::uint32_t v) -> void {
    color[v] = 1;
    stack.push_back(v);
    for (std::uint32_t w = 0; w < n && !found; ++w) {
      if (!part_(s, v, w)) continue;
      if (color[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        std::vector<ElementId> cyc;
        for (; it != stack.end(); ++it) cyc.push_back(ElementId{*it});
        found = std::move(cyc);
      } else if (color[w] == 0) {
        self(self, w);
      }
    }
    stack.pop_back();
    color[v] = 2;
  };
  for (std::uint32_t v = 0; v < n && !found; ++v)
    if (color[v] == 0) dfs(dfs, v);
  return found;
}

Verdict fail(AxiomId a, std::vector<std::uint32_t> xs, std::optional<Mask> set = {}) {
  Witness w;
  for (auto x : xs) w.elements.push_back(ElementId{x});
  if (set) w.subset = Subset{*set};
  return {a, false, std::move(w)};
}

}  // namespace

std::span<const AxiomId> catalog() { return kOrder; }
std::string_view axiom_code(AxiomId a) { return entry(a).code; }
std::string_view axiom_label(AxiomId a) { return entry(a).label; }
Shape axiom_shape(AxiomId a) { return entry(a).shape; }

AxiomId parse_axiom(std::string_view code) {
  std::string up;
  for (char c : code) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (const auto& e : kCatalog)
    if (e.code == up) return e.id;
  throw CatalogError("unknown axiom code '" + std::string(code) + "'");
}

std::vector<AxiomId> parse_axiom_list(std::string_view codes) {
  std::vector<AxiomId> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(parse_axiom(cur));
    cur.clear();
  };
  for (char c : codes) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

Verdict check_axiom(const ParthoodStructure& s, AxiomId a) {
  const auto n = static_cast<std::uint32_t>(s.size());
  const Mask top = s.universe_mask();
  switch (axiom_shape(a)) {
    case Shape::nullary:
      if (bad0(s, a)) return {a, false, Witness{}};
      break;
    case Shape::elem1:
      for (std::uint32_t x = 0; x < n; ++x)
        if (bad1(s, a, x)) return fail(a, {x});
      break;
    case Shape::elem2:
      for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
          if (bad2(s, a, x, y)) return fail(a, {x, y});
      break;
    case Shape::elem3:
      for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
          for (std::uint32_t z = 0; z < n; ++z)
            if (bad3(s, a, x, y, z)) return fail(a, {x, y, z});
      break;
    case Shape::set:
      for (Mask set = 0;; ++set) {
        if (bad_set(s, a, set)) return fail(a, {}, set);
        if (set == top) break;
      }
      break;
    case Shape::set_elem1:
      for (Mask set = 0;; ++set) {
        for (std::uint32_t x = 0; x < n; ++x)
          if (bad_set1(s, a, set, x)) return fail(a, {x}, set);
        if (set == top) break;
      }
      break;
    case Shape::set_elem2:
      for (Mask set = 0;; ++set) {
        for (std::uint32_t x = 0; x < n; ++x)
          for (std::uint32_t y = 0; y < n; ++y)
            if (bad_set2(s, a, set, x, y)) return fail(a, {x, y}, set);
        if (set == top) break;
      }
      break;
    case Shape::cycle:
      if (auto cyc = find_cycle(s)) return {a, false, Witness{std::move(*cyc), std::nullopt}};
      break;
  }
  return {a, true, std::nullopt};
}

std::vector<Verdict> check_all(const ParthoodStructure& s) {
  std::vector<Verdict> out;
  out.reserve(kOrder.size());
  for (AxiomId a : kOrder) out.push_back(check_axiom(s, a));
  return out;
}

bool holds(const ParthoodStructure& s, AxiomId a) { return check_axiom(s, a).holds; }

bool holds_all(const ParthoodStructure& s, std::span<const AxiomId> axioms) {
  return std::all_of(axioms.begin(), axioms.end(),
                     [&](AxiomId a) { return check_axiom(s, a).holds; });
}

bool violated_at(const ParthoodStructure& s, AxiomId a, const Witness& w) {
  const auto& e = w.elements;
  for (auto x : e) s.require(x);
  auto set = [&]() -> Mask {
    if (!w.subset) throw DomainError("witness lacks a subset");
    s.require(*w.subset);
    return w.subset->bits();
  };
  auto need = [&](std::size_t k) {
    if (e.size() != k) throw DomainError("witness arity does not match axiom");
  };
  switch (axiom_shape(a)) {
    case Shape::nullary:
      return bad0(s, a);
    case Shape::elem1:
      need(1);
      return bad1(s, a, e[0].index);
    case Shape::elem2:
      need(2);
      return bad2(s, a, e[0].index, e[1].index);
    case Shape::elem3:
      need(3);
      return bad3(s, a, e[0].index, e[1].index, e[2].index);
    case Shape::set:
      need(0);
      return bad_set(s, a, set());
    case Shape::set_elem1:
      need(1);
      return bad_set1(s, a, set(), e[0].index);
    case Shape::set_elem2:
      need(2);
      return bad_set2(s, a, set(), e[0].index, e[1].index);
    case Shape::cycle: {
      if (e.empty()) return false;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (!part_(s, e[i].index, e[(i + 1) % e.size()].index)) return false;
      return true;
    }
  }
  return false;
}

Verdict check_dollar_converse(const ParthoodStructure& s, AxiomId a) {
  if (a != AxiomId::DOLLAR_EXT && a != AxiomId::DOLLAR_OV)
    throw CatalogError("converse half defined only for DOLLAR_EXT and DOLLAR_OV");
  const auto n = static_cast<std::uint32_t>(s.size());
  const Mask top = s.universe_mask();
  for (Mask set = 0;; ++set) {
    for (std::uint32_t x = 0; x < n; ++x) {
      const bool rhs = a == AxiomId::DOLLAR_EXT
                           ? exterior_to(s, x) == exterior_to_all(s, set)
                           : s.overlapping(x) == overlapping_some(s, set);
      if (rhs && !sum_mask(s, x, set)) return fail(a, {x}, set);
    }
    if (set == top) break;
  }
  return {a, true, std::nullopt};
}

}  // namespace mereo
