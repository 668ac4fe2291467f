#include "mereo/theories.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace mereo {
namespace {

using A = AxiomId;
using List = std::vector<AxiomId>;

struct Row {
  TheoryId id;
  std::string_view code;
  std::string_view title;
  List axioms;
  List theses;
};

List plus(List base, std::initializer_list<AxiomId> more) {
  for (AxiomId a : more)
    if (std::find(base.begin(), base.end(), a) == base.end()) base.push_back(a);
  return base;
}

List without(const List& xs, const List& drop) {
  List out;
  for (AxiomId a : xs)
    if (std::find(drop.begin(), drop.end(), a) == drop.end()) out.push_back(a);
  return out;
}

std::vector<Row> build() {
  const List spo{A::T, A::IRR};
  const List spo_th{A::AS, A::ANTIS, A::AC, A::EXT_ING, A::U_SUP};
  const List t1_th = plus(spo_th, {A::NO_ZERO, A::EXISTS_EXT, A::WSP, A::S_SUM, A::DIAMOND,
                                   A::EXT_PP, A::EXT_OV, A::EXT_EXT});
  const List t2_th = plus(t1_th, {A::PPP});
  const List t3_th = plus(t2_th, {A::U_SUM, A::SSP_OV, A::SSP_EXT, A::SUM_SUB_SUP,
                                  A::DOLLAR_EXT, A::DOLLAR_OV});
  const List ssp_th = plus(t3_th, {A::SSP});
  const List mspo_th = plus(ssp_th, {A::SUM_SUB_SUP, A::DAGGER, A::DDAGGER});
  const List mem_th = plus(ssp_th, {A::IRR});
  // Unity and sums of all non-empty sets hold only because models are finite.
  const List gm_th = plus(mspo_th, {A::C_PROD, A::C_BSUM, A::UNITY, A::E_SUM});

  // Classical mereology proves every principle of the catalog except
  // Sup ⊆ Sum, which fails on the one-element model (its element is the
  // supremum of the empty set).
  List cm_th;
  for (AxiomId a : catalog())
    if (a != A::SUP_SUB_SUM) cm_th.push_back(a);

  std::vector<Row> rows;
  auto add = [&](TheoryId id, std::string_view code, std::string_view title, List axioms,
                 const List& theses) {
    List derived = without(theses, axioms);
    rows.push_back({id, code, title, std::move(axioms), std::move(derived)});
  };
  add(TheoryId::SPO, "SPO", "strict partial orders", spo, spo_th);
  add(TheoryId::T1, "T1", "strict partial orders with unique sums", plus(spo, {A::U_SUM}),
      t1_th);
  add(TheoryId::T2, "T2", "unique sums and the proper parts principle",
      plus(spo, {A::U_SUM, A::PPP}), t2_th);
  add(TheoryId::T3, "T3", "strong supplementation", plus(spo, {A::SSP}), ssp_th);
  add(TheoryId::MSPO_DAG, "MSPO_DAG", "mereological strict partial orders (Sum⊆Sup, †)",
      plus(spo, {A::SUM_SUB_SUP, A::DAGGER}), mspo_th);
  add(TheoryId::MSPO_DDAG, "MSPO_DDAG", "mereological strict partial orders (‡)",
      plus(spo, {A::DDAGGER}), mspo_th);
  add(TheoryId::MEM, "MEM", "minimal extensional mereology", {A::T, A::WSP, A::C_PROD},
      mem_th);
  add(TheoryId::MCM, "MCM", "minimal closure mereology",
      {A::T, A::WSP, A::C_PROD, A::C_BSUM}, mem_th);
  add(TheoryId::GM, "GM", "Grzegorczykian mereology", plus(spo, {A::SSP_PLUS, A::E_BSUM}),
      gm_th);
  add(TheoryId::GMU, "GMU", "Grzegorczykian mereology with unity",
      plus(spo, {A::SSP_PLUS, A::E_BSUM, A::UNITY}), gm_th);
  add(TheoryId::CM, "CM", "classical mereology", plus(spo, {A::U_SUM, A::E_SUM}), cm_th);
  return rows;
}

const std::vector<Row>& table() {
  static const std::vector<Row> rows = build();
  return rows;
}

const Row& row(TheoryId t) {
  const auto i = static_cast<std::size_t>(t);
  if (i >= table().size()) throw CatalogError("unknown theory id");
  return table()[i];
}

constexpr std::array<TheoryId, 11> kTheories{
    TheoryId::SPO,       TheoryId::T1,  TheoryId::T2,  TheoryId::T3,
    TheoryId::MSPO_DAG,  TheoryId::MSPO_DDAG, TheoryId::MEM, TheoryId::MCM,
    TheoryId::GM,        TheoryId::GMU, TheoryId::CM};

}  // namespace

std::span<const TheoryId> theories() { return kTheories; }
std::string_view theory_code(TheoryId t) { return row(t).code; }
std::string_view theory_title(TheoryId t) { return row(t).title; }

TheoryId parse_theory(std::string_view code) {
  std::string up;
  for (char c : code) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (const auto& r : table())
    if (r.code == up) return r.id;
  throw CatalogError("unknown theory code '" + std::string(code) + "'");
}

std::span<const AxiomId> theory_axioms(TheoryId t) { return row(t).axioms; }
std::span<const AxiomId> derived_theses(TheoryId t) { return row(t).theses; }

TheoryVerdict check_theory(const ParthoodStructure& s, TheoryId t) {
  for (AxiomId a : theory_axioms(t)) {
    Verdict v = check_axiom(s, a);
    if (!v.holds) return {t, false, std::move(v)};
  }
  return {t, true, std::nullopt};
}

}  // namespace mereo
