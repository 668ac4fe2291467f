#include <doctest.h>

#include <map>
#include <random>

#include "mereo/lattice.hpp"
#include "mereo/theories.hpp"
#include "support.hpp"

using namespace mereo;
using support::fixture;

namespace {

// Naive lattice facts about Ing-plus-zero, computed from the oracle matrix.
struct NaiveOrder {
  int n;  // base size; index n is the zero
  std::vector<std::vector<bool>> le;

  explicit NaiveOrder(const oracle::Rel& r) : n(r.n), le(r.n + 1, std::vector<bool>(r.n + 1, false)) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) le[a][b] = r.Ing(a, b);
    for (int b = 0; b <= n; ++b) le[n][b] = true;
  }

  [[nodiscard]] int size() const { return n + 1; }

  [[nodiscard]] bool is_lattice() const {
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b) {
        int lubs = 0, glbs = 0;
        for (int c = 0; c < size(); ++c) {
          bool least_upper = le[a][c] && le[b][c];
          bool greatest_lower = le[c][a] && le[c][b];
          for (int d = 0; d < size(); ++d) {
            if (le[a][d] && le[b][d] && !le[c][d]) least_upper = false;
            if (le[d][a] && le[d][b] && !le[d][c]) greatest_lower = false;
          }
          lubs += least_upper;
          glbs += greatest_lower;
        }
        if (lubs != 1 || glbs != 1) return false;
      }
    return true;
  }

  // Boolean iff x -> {atoms below x} is an order isomorphism onto all atom sets.
  [[nodiscard]] bool is_boolean() const {
    std::vector<int> atoms;
    for (int a = 0; a < n; ++a) {
      bool atom = true;
      for (int b = 0; b < n; ++b)
        if (b != a && le[b][a]) atom = false;
      if (atom) atoms.push_back(a);
    }
    if (atoms.size() > 20) return false;
    std::map<std::uint32_t, int> image;
    std::vector<std::uint32_t> code(size(), 0);
    for (int x = 0; x < size(); ++x) {
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (le[atoms[i]][x]) code[x] |= 1U << i;
      if (!image.emplace(code[x], x).second) return false;
    }
    if (image.size() != (std::size_t{1} << atoms.size())) return false;
    for (int x = 0; x < size(); ++x)
      for (int y = 0; y < size(); ++y)
        if (le[x][y] != ((code[x] & ~code[y]) == 0)) return false;
    return true;
  }
};

}  // namespace

TEST_CASE("zero adjunction examples") {
  const auto b7 = adjoin_zero(fixture("b7"));
  CHECK(b7.size() == 8);
  CHECK(b7.covers().size() == 12);
  CHECK(b7.zero_label() == "0");

  const auto s1 = adjoin_zero(fixture("s1"));
  CHECK(s1.size() == 2);
  REQUIRE(s1.covers().size() == 1);
  CHECK(s1.covers()[0] == std::pair<std::uint32_t, std::uint32_t>{1, 0});

  const auto w4 = adjoin_zero(fixture("w4"));
  CHECK(w4.size() == 5);
  const auto top = fixture("w4").element("1").index;
  int coatoms = 0;
  for (auto [a, b] : w4.covers()) coatoms += b == top;
  CHECK(coatoms == 3);
  // Avoids clashing with the label of the unity.
  CHECK(w4.zero_label() == "0");

  const auto clash = adjoin_zero(ParthoodStructure({"0", "1"}, {0b10, 0}));
  CHECK(clash.zero_label() == "0'");
}

TEST_CASE("zero adjunction order") {
  const auto base = fixture("x6");
  const auto z = adjoin_zero(base);
  for (std::uint32_t a = 0; a < base.size(); ++a) {
    CHECK(z.leq(z.zero(), a));
    CHECK_FALSE(z.leq(a, z.zero()));
    for (std::uint32_t b = 0; b < base.size(); ++b) CHECK(z.leq(a, b) == ing(base, {a}, {b}));
  }
  CHECK(remove_zero(z) == base);
}

TEST_CASE("zero adjunction precondition") {
  const auto loop = ParthoodStructure({"a"}, {0b1});
  CHECK_THROWS_AS((void)adjoin_zero(loop), OrderError);
  const auto open = ParthoodStructure({"a", "b", "c"}, {0b010, 0b100, 0});
  CHECK_THROWS_AS((void)adjoin_zero(open), OrderError);
  const auto rep = lattice_report(adjoin_zero_unchecked(open));
  CHECK_FALSE(rep.is_partial_order);
  CHECK(rep.failed_law == "partial order");
}

TEST_CASE("lattice report examples") {
  const auto b7 = lattice_report(adjoin_zero(fixture("b7")));
  CHECK(b7.is_boolean);
  CHECK(b7.is_nondegenerate);
  CHECK_FALSE(b7.failed_law.has_value());

  const auto w4s = fixture("w4");
  const auto w4z = adjoin_zero(w4s);
  const auto w4 = lattice_report(w4z);
  CHECK(w4.is_lattice);
  CHECK_FALSE(w4.is_boolean);
  CHECK(w4.failed_law == "distributivity");
  std::vector<std::string> witness;
  for (auto w : w4.witness) witness.push_back(w4z.label(w));
  CHECK(witness == std::vector<std::string>{"o1", "o2", "o3"});

  const auto c2z = adjoin_zero(fixture("c2"));
  const auto c2 = lattice_report(c2z);
  CHECK(c2.is_lattice);
  CHECK(c2.is_distributive);
  CHECK_FALSE(c2.is_complemented);
  CHECK_FALSE(c2.is_boolean);
  REQUIRE(c2.failed_law == "complement");
  CHECK(c2z.label(c2.witness.at(0)) == "x");
}

TEST_CASE("Tarski check examples") {
  for (const auto* name : {"b7", "w4", "c2", "x6", "s1"}) {
    INFO(name);
    CHECK(tarski_check(fixture(name)));
  }
  CHECK(tarski_sides(fixture("b7")).classical);
  CHECK(tarski_sides(fixture("b7")).boolean_side);
  CHECK_FALSE(tarski_sides(fixture("w4")).classical);
  CHECK_FALSE(tarski_sides(fixture("w4")).boolean_side);
  CHECK_FALSE(tarski_sides(fixture("c2")).boolean_side);
}

TEST_CASE("boolean structures") {
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto b = boolean_structure(k);
    CHECK(b.size() == (std::size_t{1} << k) - 1);
    CHECK(atoms(b).size() == k);
    if (k > 4) continue;  // subset scans over 2^31 sets
    CHECK(check_theory(b, TheoryId::CM).holds);
    CHECK(check_theory(b, TheoryId::GMU).holds);
    CHECK(lattice_report(adjoin_zero(b)).is_boolean);
  }
  CHECK(boolean_structure(3) == fixture("b7"));
  CHECK_THROWS_AS((void)boolean_structure(0), DomainError);
}

TEST_CASE("lattice report agrees with naive order checks") {
  std::mt19937 rng(31);
  int lattices = 0, booleans = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto s = support::random_order(rng, n, 0.2 + 0.1 * (trial % 6));
    const auto z = adjoin_zero(s);
    const auto rep = lattice_report(z);
    const NaiveOrder naive(support::to_oracle(s));
    CHECK(rep.is_partial_order);
    CHECK(rep.is_lattice == naive.is_lattice());
    CHECK(rep.is_boolean == naive.is_boolean());
    CHECK(rep.is_boolean == (rep.is_lattice && rep.is_distributive && rep.is_complemented));
    CHECK(rep.is_complete == rep.is_lattice);
    CHECK(rep.failed_law.has_value() == !rep.is_boolean);
    CHECK(tarski_check(s));
    lattices += rep.is_lattice;
    booleans += rep.is_boolean;
  }
  CHECK(lattices > 50);
  CHECK(booleans > 5);
}
