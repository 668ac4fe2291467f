#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mereo/lattice.hpp"
#include "mereo/report.hpp"
#include "mereo/search.hpp"
#include "mereo/structure_file.hpp"
#include "mereo/sums.hpp"
#include "mereo/theories.hpp"
#include "mereo/weakparts.hpp"

namespace py = pybind11;
using namespace mereo;

namespace {

std::vector<std::string> labels_of(const ParthoodStructure& s, const std::vector<ElementId>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(s.label(x));
  return out;
}

std::vector<std::string> labels_of(const ParthoodStructure& s, Subset set) {
  return labels_of(s, set.members());
}

std::vector<AxiomId> axiom_ids(const std::vector<std::string>& codes) {
  std::vector<AxiomId> out;
  for (const auto& c : codes) out.push_back(parse_axiom(c));
  return out;
}

std::vector<std::string> axiom_codes(std::span<const AxiomId> xs) {
  std::vector<std::string> out;
  for (auto a : xs) out.emplace_back(axiom_code(a));
  return out;
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object op_value(const ParthoodStructure& s, const OpResult& r) {
  switch (r.status) {
    case OpStatus::found: return py::str(s.label(*r.value));
    case OpStatus::absent: return py::none();
    case OpStatus::ambiguous: break;
  }
  throw DomainError("ambiguous: several candidates " + format_elements(s, r.candidates));
}

py::dict search_dict(const SearchResult& r) {
  py::dict d;
  d["found"] = r.found ? py::cast(*r.found) : py::none();
  d["explored"] = r.explored;
  d["exhausted"] = r.exhausted;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite parthood structures: relations, sums, axioms, theories and model search.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OrderError>(m, "OrderError", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_KeyError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<ParthoodStructure>(m, "Structure")
      .def(py::init([](std::vector<std::string> labels,
                       const std::vector<std::pair<std::string, std::string>>& parts) {
             return ParthoodStructure::from_pairs(std::move(labels), parts);
           }),
           py::arg("labels"), py::arg("parts") = std::vector<std::pair<std::string, std::string>>{})
      .def_static("parse", [](const std::string& text) { return parse_structure(text); })
      .def_static("load", [](const std::string& path) { return load_structure(path); })
      .def("serialize", &serialize_structure)
      .def_property_readonly("labels", &ParthoodStructure::labels)
      .def("__len__", &ParthoodStructure::size)
      .def("__eq__", [](const ParthoodStructure& a, const ParthoodStructure& b) { return a == b; })
      .def("__repr__", [](const ParthoodStructure& s) {
        return "<Structure " + format_elements(s, s.elements()) + ">";
      })
      .def("part", [](const ParthoodStructure& s, const std::string& x, const std::string& y) {
        return s.part(s.element(x), s.element(y));
      })
      .def("ing", [](const ParthoodStructure& s, const std::string& x, const std::string& y) {
        return ing(s, s.element(x), s.element(y));
      })
      .def("ov", [](const ParthoodStructure& s, const std::string& x, const std::string& y) {
        return ov(s, s.element(x), s.element(y));
      })
      .def("ext", [](const ParthoodStructure& s, const std::string& x, const std::string& y) {
        return ext(s, s.element(x), s.element(y));
      })
      .def("pov", [](const ParthoodStructure& s, const std::string& x, const std::string& y) {
        return pov(s, s.element(x), s.element(y));
      })
      .def("is_zero", [](const ParthoodStructure& s, const std::string& x) { return is_zero(s, s.element(x)); })
      .def("is_unity", [](const ParthoodStructure& s, const std::string& x) { return is_unity(s, s.element(x)); })
      .def("atoms", [](const ParthoodStructure& s) { return labels_of(s, atoms(s)); });

  m.def("is_sum", [](const ParthoodStructure& s, const std::string& x, const std::vector<std::string>& set) {
    return is_sum(s, s.element(x), s.subset(set));
  });
  m.def("is_sup", [](const ParthoodStructure& s, const std::string& x, const std::vector<std::string>& set) {
    return is_sup(s, s.element(x), s.subset(set));
  });
  m.def("sum_of", [](const ParthoodStructure& s, const std::vector<std::string>& set) {
    return labels_of(s, sum_of(s, s.subset(set)).candidates);
  });
  m.def("sup_of", [](const ParthoodStructure& s, const std::vector<std::string>& set) {
    return labels_of(s, sup_of(s, s.subset(set)).candidates);
  });
  m.def("product", [](const ParthoodStructure& s, const std::string& x, const std::string& y) {
    return op_value(s, product(s, s.element(x), s.element(y)));
  });
  m.def("difference", [](const ParthoodStructure& s, const std::string& x, const std::string& y) {
    return op_value(s, difference(s, s.element(x), s.element(y)));
  });
  m.def("binary_sum", [](const ParthoodStructure& s, const std::string& x, const std::string& y) {
    return op_value(s, binary_sum(s, s.element(x), s.element(y)));
  });
  m.def("complement", [](const ParthoodStructure& s, const std::string& x) {
    return op_value(s, complement(s, s.element(x)));
  });

  m.def("axioms", [] { return axiom_codes(catalog()); });
  m.def("check_axiom", [](const ParthoodStructure& s, const std::string& code) {
    return json_to_py(verdict_json(s, check_axiom(s, parse_axiom(code))));
  });
  m.def("check_all", [](const ParthoodStructure& s) {
    py::list out;
    for (const auto& v : check_all(s)) out.append(json_to_py(verdict_json(s, v)));
    return out;
  });

  m.def("theories", [] {
    std::vector<std::string> out;
    for (auto t : theories()) out.emplace_back(theory_code(t));
    return out;
  });
  m.def("theory_axioms", [](const std::string& t) { return axiom_codes(theory_axioms(parse_theory(t))); });
  m.def("derived_theses", [](const std::string& t) { return axiom_codes(derived_theses(parse_theory(t))); });
  m.def("check_theory", [](const ParthoodStructure& s, const std::string& t) {
    auto j = theory_json("", s, check_theory(s, parse_theory(t)));
    j.erase("structure");
    return json_to_py(j);
  });

  m.def(
      "enumerate_models",
      [](std::size_t n, const std::vector<std::string>& constraints, bool up_to_iso, std::size_t workers) {
        const auto ids = axiom_ids(constraints);
        py::gil_scoped_release release;
        return enumerate_models(n, ids, up_to_iso, workers);
      },
      py::arg("n"), py::arg("constraints") = std::vector<std::string>{}, py::arg("up_to_iso") = true,
      py::arg("workers") = 1);
  m.def(
      "count_models",
      [](std::size_t n, const std::vector<std::string>& constraints, bool up_to_iso, std::size_t workers) {
        const auto ids = axiom_ids(constraints);
        py::gil_scoped_release release;
        return count_models(n, ids, up_to_iso, workers);
      },
      py::arg("n"), py::arg("constraints") = std::vector<std::string>{}, py::arg("up_to_iso") = true,
      py::arg("workers") = 1);
  m.def(
      "find_model",
      [](const std::vector<std::string>& require, const std::vector<std::string>& forbid,
         const std::vector<std::string>& ambient, std::size_t max_n, bool up_to_iso, std::size_t workers) {
        SearchSpec spec;
        spec.require = axiom_ids(require);
        spec.forbid = axiom_ids(forbid);
        spec.ambient = axiom_ids(ambient);
        spec.max_n = max_n;
        spec.up_to_iso = up_to_iso;
        spec.workers = workers;
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = find_model(spec);
        }
        return search_dict(r);
      },
      py::arg("require") = std::vector<std::string>{}, py::arg("forbid") = std::vector<std::string>{},
      py::arg("ambient") = std::vector<std::string>{}, py::arg("max_n") = 5, py::arg("up_to_iso") = true,
      py::arg("workers") = 1);
  m.def(
      "verify_implication",
      [](const std::vector<std::string>& ambient, const std::vector<std::string>& hypothesis,
         const std::string& conclusion, std::size_t max_n, std::size_t workers) {
        const auto amb = axiom_ids(ambient), hyp = axiom_ids(hypothesis);
        const auto concl = parse_axiom(conclusion);
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = verify_implication(amb, hyp, concl, max_n, workers);
        }
        return search_dict(r);
      },
      py::arg("ambient"), py::arg("hypothesis"), py::arg("conclusion"), py::arg("max_n"),
      py::arg("workers") = 1);
  m.def("canonical_encoding", &canonical_encoding);

  m.def("lattice_report", [](const ParthoodStructure& s) {
    const auto z = adjoin_zero(s);
    auto j = lattice_json("", z, lattice_report(z));
    j.erase("structure");
    return json_to_py(j);
  });
  m.def("tarski_check", &tarski_check);
  m.def("boolean_structure", &boolean_structure);

  m.def("is_acyclic", [](const ParthoodStructure& s) { return json_to_py(verdict_json(s, is_acyclic(s))); });
  m.def("is_locally_transitive", [](const ParthoodStructure& s) {
    const auto v = is_locally_transitive(s);
    py::dict d;
    d["holds"] = v.holds;
    d["path"] = v.path ? py::cast(labels_of(s, v.path->nodes)) : py::none();
    d["triple"] = v.triple ? py::cast(labels_of(s, std::vector<ElementId>(v.triple->begin(), v.triple->end())))
                           : py::none();
    return d;
  });
  m.def(
      "paths_between",
      [](const ParthoodStructure& s, const std::string& x, const std::string& y, std::size_t max_len) {
        std::vector<std::vector<std::string>> out;
        for (const auto& p : paths_between(s, s.element(x), s.element(y), max_len))
          out.push_back(labels_of(s, p.nodes));
        return out;
      },
      py::arg("s"), py::arg("x"), py::arg("y"), py::arg("max_len") = 0);

  m.def("to_dot", &to_dot, py::arg("s"), py::arg("name") = "structure", py::arg("full") = false);
}
