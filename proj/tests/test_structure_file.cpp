#include <doctest.h>

#include <random>

#include "mereo/report.hpp"
#include "mereo/structure_file.hpp"
#include "support.hpp"

using namespace mereo;
using support::fixture;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    (void)parse_structure(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_structure("elements: x y\npart: x < y") == fixture("c2"));
  const auto w4 = parse_structure("elements: u o1 o2 o3\npart: o1 < u\npart: o2 < u\npart: o3 < u");
  CHECK(w4.part_rows() == fixture("w4").part_rows());
  CHECK(w4.labels() == std::vector<std::string>{"u", "o1", "o2", "o3"});

  try {
    (void)parse_structure("elements: a\npart: a < b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()) == "line 2: undeclared element 'b'");
  }
}

TEST_CASE("comments, blanks and repeated lines") {
  const auto s = parse_structure("# header\n\n  elements:  x   y  # trailing\npart: x<y\npart: x < y\n");
  CHECK(s == fixture("c2"));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("part: a < b\nelements: a b") == 1);
  CHECK(error_line("elements: a b\nelements: c") == 2);
  CHECK(error_line("elements: a a") == 1);
  CHECK(error_line("elements:") == 1);
  CHECK(error_line("elements: a b\n\nparts: a < b") == 3);
  CHECK(error_line("elements: a b\npart: a b") == 2);
  CHECK(error_line("elements: a b\npart: a < b c") == 2);
  CHECK(error_line("elements: a b\njunk") == 2);
  CHECK(error_line("# nothing here\n") == 1);
  CHECK(error_line("") == 1);
  CHECK(error_line("elements: a b c d e f g h i j k l m") == 1);
  CHECK_NOTHROW((void)parse_structure("elements: a b c d e f g h i j k l m", 13));
  CHECK_THROWS_AS((void)load_structure("/nonexistent/file.txt"), std::runtime_error);
}

TEST_CASE("serialize round trip") {
  for (const auto& name : support::fixture_names()) {
    INFO(name);
    const auto s = fixture(name);
    const auto text = serialize_structure(s);
    CHECK(parse_structure(text) == s);
    CHECK(serialize_structure(parse_structure(text)) == text);
  }
  std::mt19937 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = support::random_structure(rng, 1 + trial % 10, 0.3);
    CHECK(parse_structure(serialize_structure(s)) == s);
  }
}

TEST_CASE("report formatting") {
  const auto w4 = fixture("w4");
  const auto v = check_axiom(w4, AxiomId::SUP_SUB_SUM);
  CHECK(verdict_line(w4, v) == "SUP_SUB_SUM  fails  (1, {o1,o2})");
  CHECK(verdict_line(w4, check_axiom(w4, AxiomId::SSP)) == "SSP          holds");
  CHECK(format_subset(w4, Subset{}) == "{}");

  const auto j = verdict_json(w4, v);
  CHECK(j["axiom"] == "SUP_SUB_SUM");
  CHECK(j["holds"] == false);
  CHECK(j["witness"]["elements"] == nlohmann::json::array({"1"}));
  CHECK(j["witness"]["subset"] == nlohmann::json::array({"o1", "o2"}));
  CHECK(nlohmann::json::parse(axioms_json("w4", w4, check_all(w4)).dump())["results"].size() == 32);

  const auto t = check_theory(w4, TheoryId::MSPO_DDAG);
  CHECK(theory_text("w4", w4, t) ==
        "w4: theory MSPO_DDAG (" + std::string(theory_title(TheoryId::MSPO_DDAG)) +
            ") fails\n  " + verdict_line(w4, *t.failure) + "\n");
}

TEST_CASE("dot export draws exactly the covering pairs") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto s = trial % 2 ? support::random_order(rng, n, 0.4) : support::random_structure(rng, n, 0.3);
    const auto r = support::to_oracle(s);
    std::string edges;
    std::size_t count = 0;
    for (int x = 0; x < r.n; ++x)
      for (int y = 0; y < r.n; ++y) {
        if (x == y || !r.Ing(x, y)) continue;
        bool between = false;
        for (int z = 0; z < r.n; ++z)
          if (z != x && z != y && r.Ing(x, z) && r.Ing(z, y)) between = true;
        if (between) continue;
        edges += "  \"" + s.labels()[x] + "\" -> \"" + s.labels()[y] + "\";\n";
        ++count;
      }
    const auto dot = to_dot(s, "g");
    CHECK(ing_covers(s).size() == count);
    CHECK(dot.find(edges) != std::string::npos);
    CHECK(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '>')) == count);
  }
  const auto b7 = fixture("b7");
  CHECK(ing_covers(b7).size() == 9);
  const auto full = to_dot(b7, "b7", true);
  CHECK(std::count(full.begin(), full.end(), '>') == 12);
}
