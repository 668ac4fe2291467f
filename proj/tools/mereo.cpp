// mereo: command-line front end for checking finite parthood structures.
//
// Exit status: 0 when the checked property holds, 1 when it fails,
// 2 for usage, catalog, and parse errors.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mereo/axioms.hpp"
#include "mereo/lattice.hpp"
#include "mereo/report.hpp"
#include "mereo/search.hpp"
#include "mereo/structure_file.hpp"
#include "mereo/sums.hpp"
#include "mereo/theories.hpp"
#include "mereo/weakparts.hpp"

namespace {

using namespace mereo;

constexpr std::size_t kCliMaxN = 7;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

std::vector<AxiomId> constraints_for(const std::string& theory, const std::string& axioms) {
  std::vector<AxiomId> out;
  if (!theory.empty())
    for (AxiomId a : theory_axioms(parse_theory(theory))) out.push_back(a);
  for (AxiomId a : parse_axiom_list(axioms)) out.push_back(a);
  return out;
}

void check_max_n(std::size_t n) {
  if (n < 1 || n > kCliMaxN)
    throw UsageError("size must be between 1 and " + std::to_string(kCliMaxN));
}

std::string candidates_text(const ParthoodStructure& s, const SumQueryResult& r,
                            const char* none, const char* one, const char* many) {
  if (r.candidates.empty()) return std::string(none) + "\n";
  if (r.unique) return std::string(one) + ": " + s.label(r.candidates.front()) + "\n";
  return std::string(many) + ": " + format_elements(s, r.candidates) + " (not unique)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite models of parthood theories"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string file, theory, only, set, op, args, ambient, from, to, axioms_list;
  std::size_t n = 0, max_n = 0, workers = 1;
  bool count_only = false, up_to_iso = false, tarski = false, full = false;

  auto* check = app.add_subcommand("check", "Check a structure against a theory");
  check->add_option("file", file, "Structure file")->required();
  check->add_option("--theory", theory, "Theory code")->required();

  auto* axioms = app.add_subcommand("axioms", "Check catalog axioms");
  axioms->add_option("file", file, "Structure file")->required();
  axioms->add_option("--only", only, "Comma-separated axiom codes");

  auto* sum = app.add_subcommand("sum", "Mereological sums of a set");
  sum->add_option("file", file, "Structure file")->required();
  sum->add_option("--set", set, "Comma-separated labels")->required();

  auto* sup = app.add_subcommand("sup", "Suprema of a set");
  sup->add_option("file", file, "Structure file")->required();
  sup->add_option("--set", set, "Comma-separated labels")->required();

  auto* alg = app.add_subcommand("alg", "Product, difference, complement or binary sum");
  alg->add_option("file", file, "Structure file")->required();
  alg->add_option("--op", op, "product|difference|complement|bsum")
      ->required()
      ->check(CLI::IsMember({"product", "difference", "complement", "bsum"}));
  alg->add_option("--args", args, "Comma-separated labels")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate models of a theory");
  enumerate->add_option("--n", n, "Universe size")->required();
  enumerate->add_option("--theory", theory, "Theory code");
  enumerate->add_option("--axioms", axioms_list, "Additional axiom codes");
  enumerate->add_flag("--count-only", count_only, "Print only the number of models");
  enumerate->add_flag("--up-to-iso", up_to_iso, "One model per isomorphism class");
  enumerate->add_option("--workers", workers, "Worker threads (0 = all cores)");

  auto* implies = app.add_subcommand("implies", "Search for a countermodel to an implication");
  implies->add_option("--ambient", ambient, "Assumed axiom codes");
  implies->add_option("--from", from, "Hypothesis axiom codes")->required();
  implies->add_option("--to", to, "Conclusion axiom code")->required();
  implies->add_option("--max-n", max_n, "Largest universe size")->required();
  implies->add_option("--workers", workers, "Worker threads (0 = all cores)");

  auto* lattice = app.add_subcommand("lattice", "Lattice report after adjoining a zero");
  lattice->add_option("file", file, "Structure file")->required();
  lattice->add_flag("--tarski", tarski, "Also compare with classical mereology");

  auto* localtrans = app.add_subcommand("localtrans", "Acyclicity and local transitivity");
  localtrans->add_option("file", file, "Structure file")->required();

  auto* dot = app.add_subcommand("dot", "Hasse diagram of Ing in DOT");
  dot->add_option("file", file, "Structure file")->required();
  dot->add_flag("--full", full, "Draw every pair of P instead of the covering pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto& out = std::cout;
    if (check->parsed()) {
      const auto s = load_structure(file);
      const auto v = check_theory(s, parse_theory(theory));
      if (json) out << theory_json(stem(file), s, v).dump(2) << "\n";
      else out << theory_text(stem(file), s, v);
      return v.holds ? 0 : 1;
    }
    if (axioms->parsed()) {
      const auto s = load_structure(file);
      std::vector<Verdict> vs;
      if (only.empty()) {
        vs = check_all(s);
      } else {
        for (AxiomId a : parse_axiom_list(only)) vs.push_back(check_axiom(s, a));
      }
      bool ok = true;
      for (const auto& v : vs) ok = ok && v.holds;
      if (json) {
        out << axioms_json(stem(file), s, vs).dump(2) << "\n";
      } else {
        out << stem(file) << ":\n";
        for (const auto& v : vs) out << "  " << verdict_line(s, v) << "\n";
      }
      return ok ? 0 : 1;
    }
    if (sum->parsed() || sup->parsed()) {
      const auto s = load_structure(file);
      const auto labels = split_labels(set);
      const Subset subset = s.subset(labels);
      const bool is_sum_query = sum->parsed();
      const auto r = is_sum_query ? sum_of(s, subset) : sup_of(s, subset);
      if (json) {
        nlohmann::ordered_json j;
        j["structure"] = stem(file);
        j["query"] = is_sum_query ? "sum" : "sup";
        j["set"] = labels;
        j["candidates"] = nlohmann::ordered_json::array();
        for (auto c : r.candidates) j["candidates"].push_back(s.label(c));
        j["unique"] = r.unique;
        out << j.dump(2) << "\n";
      } else if (is_sum_query) {
        out << candidates_text(s, r, "no sum", "sum", "sums");
      } else {
        out << candidates_text(s, r, "no supremum", "supremum", "suprema");
      }
      return 0;
    }
    if (alg->parsed()) {
      const auto s = load_structure(file);
      const auto labels = split_labels(args);
      const std::size_t arity = op == "complement" ? 1 : 2;
      if (labels.size() != arity)
        throw UsageError("--op " + op + " takes " + std::to_string(arity) + " argument(s)");
      const ElementId x = s.element(labels[0]);
      OpResult r;
      if (op == "product") r = product(s, x, s.element(labels[1]));
      else if (op == "difference") r = difference(s, x, s.element(labels[1]));
      else if (op == "bsum") r = binary_sum(s, x, s.element(labels[1]));
      else r = complement(s, x);
      const char* status = r.status == OpStatus::found    ? "found"
                           : r.status == OpStatus::absent ? "absent"
                                                          : "ambiguous";
      if (json) {
        nlohmann::ordered_json j;
        j["structure"] = stem(file);
        j["op"] = op;
        j["args"] = labels;
        j["status"] = status;
        j["value"] = r.value ? nlohmann::ordered_json(s.label(*r.value)) : nlohmann::ordered_json(nullptr);
        j["candidates"] = nlohmann::ordered_json::array();
        for (auto c : r.candidates) j["candidates"].push_back(s.label(c));
        out << j.dump(2) << "\n";
      } else if (r.status == OpStatus::found) {
        out << op << ": " << s.label(*r.value) << "\n";
      } else if (r.status == OpStatus::absent) {
        out << op << ": absent\n";
      } else {
        out << op << ": ambiguous (" << format_elements(s, r.candidates) << ")\n";
      }
      return 0;
    }
    if (enumerate->parsed()) {
      check_max_n(n);
      if (theory.empty() && axioms_list.empty())
        throw UsageError("enumerate needs --theory or --axioms");
      const auto cs = constraints_for(theory, axioms_list);
      if (count_only) {
        const auto c = count_models(n, cs, up_to_iso, workers);
        if (json) out << nlohmann::ordered_json{{"n", n}, {"count", c}}.dump(2) << "\n";
        else out << c << "\n";
        return 0;
      }
      std::size_t k = 0;
      nlohmann::ordered_json models = nlohmann::ordered_json::array();
      for_each_model(n, cs, {up_to_iso, workers}, [&](const ParthoodStructure& s) {
        if (json) {
          models.push_back(serialize_structure(s));
        } else {
          if (k) out << "\n";
          out << "# model " << k << "\n" << serialize_structure(s);
        }
        ++k;
      });
      if (json) out << nlohmann::ordered_json{{"n", n}, {"models", models}}.dump(2) << "\n";
      return 0;
    }
    if (implies->parsed()) {
      check_max_n(max_n);
      const auto amb = parse_axiom_list(ambient);
      const auto hyp = parse_axiom_list(from);
      const AxiomId concl = parse_axiom(to);
      const auto r = verify_implication(amb, hyp, concl, max_n, workers);
      if (json) {
        nlohmann::ordered_json j;
        j["exhausted"] = r.exhausted;
        j["explored"] = r.explored;
        if (r.found) {
          j["countermodel"] = serialize_structure(*r.found);
          j["witness"] = verdict_json(*r.found, check_axiom(*r.found, concl));
        } else {
          j["countermodel"] = nullptr;
        }
        out << j.dump(2) << "\n";
      } else if (r.found) {
        out << "refuted: countermodel with " << r.found->size()
            << (r.found->size() == 1 ? " element" : " elements") << " (explored "
            << r.explored << ")\n"
            << serialize_structure(*r.found)
            << verdict_line(*r.found, check_axiom(*r.found, concl)) << "\n";
      } else {
        out << "exhausted: no countermodel up to n=" << max_n << " (explored " << r.explored
            << ")\n";
      }
      return r.found ? 1 : 0;
    }
    if (lattice->parsed()) {
      const auto s = load_structure(file);
      const auto z = adjoin_zero(s);
      const auto r = lattice_report(z);
      std::optional<TarskiSides> t;
      if (tarski) t = tarski_sides(s);
      if (json) {
        auto j = lattice_json(stem(file), z, r);
        if (t) {
          j["classical_mereology"] = t->classical;
          j["boolean_side"] = t->boolean_side;
          j["tarski_agree"] = t->agree();
        }
        out << j.dump(2) << "\n";
      } else {
        out << lattice_text(z, r);
        if (t) {
          out << "classical mereology: " << (t->classical ? "yes" : "no") << "\n";
          out << "tarski agreement:   " << (t->agree() ? "yes" : "no") << "\n";
        }
      }
      if (t) return t->agree() ? 0 : 1;
      return r.is_boolean ? 0 : 1;
    }
    if (localtrans->parsed()) {
      const auto s = load_structure(file);
      const auto ac = is_acyclic(s);
      const auto lt = is_locally_transitive(s);
      if (json) {
        nlohmann::ordered_json j;
        j["structure"] = stem(file);
        j["acyclic"] = verdict_json(s, ac);
        j["locally_transitive"] = lt.holds;
        if (lt.path) {
          std::vector<std::string> path, triple;
          for (auto e : lt.path->nodes) path.push_back(s.label(e));
          for (auto e : *lt.triple) triple.push_back(s.label(e));
          j["path"] = path;
          j["triple"] = triple;
        }
        out << j.dump(2) << "\n";
      } else {
        out << "acyclic:             " << (ac.holds ? "holds" : "fails");
        if (ac.witness) out << "  cycle " << format_witness(s, *ac.witness);
        out << "\nlocally transitive:  " << (lt.holds ? "holds" : "fails");
        if (lt.path) {
          out << "  path [" << format_elements(s, lt.path->nodes) << "] triple "
              << format_elements(s, {(*lt.triple)[0], (*lt.triple)[1], (*lt.triple)[2]});
        }
        out << "\n";
      }
      return ac.holds && lt.holds ? 0 : 1;
    }
    if (dot->parsed()) {
      const auto s = load_structure(file);
      out << to_dot(s, stem(file), full);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    return 2;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OrderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
