#include "mereo/report.hpp"

#include <iomanip>
#include <sstream>

namespace mereo {
namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_subset(const ParthoodStructure& s, Subset set) {
  std::string out = "{";
  bool first = true;
  for (auto e : set.members()) {
    if (!first) out += ",";
    out += s.label(e);
    first = false;
  }
  return out + "}";
}

std::string format_elements(const ParthoodStructure& s, const std::vector<ElementId>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ";
    out += s.label(xs[i]);
  }
  return out;
}

std::string format_witness(const ParthoodStructure& s, const Witness& w) {
  std::string out = "(";
  bool first = true;
  for (auto e : w.elements) {
    if (!first) out += ", ";
    out += s.label(e);
    first = false;
  }
  if (w.subset) {
    if (!first) out += ", ";
    out += format_subset(s, *w.subset);
  }
  return out + ")";
}

std::string verdict_line(const ParthoodStructure& s, const Verdict& v) {
  std::ostringstream out;
  out << std::left << std::setw(12) << axiom_code(v.axiom) << ' ' << (v.holds ? "holds" : "fails");
  if (v.witness) out << "  " << format_witness(s, *v.witness);
  return out.str();
}

std::string theory_text(std::string_view name, const ParthoodStructure& s, const TheoryVerdict& v) {
  std::string out = std::string(name) + ": theory " + std::string(theory_code(v.theory)) + " (" +
                    std::string(theory_title(v.theory)) + ") ";
  if (v.holds) return out + "holds\n";
  out += "fails\n";
  out += "  " + verdict_line(s, *v.failure) + "\n";
  return out;
}

nlohmann::ordered_json witness_json(const ParthoodStructure& s, const Witness& w) {
  nlohmann::ordered_json j;
  j["elements"] = nlohmann::ordered_json::array();
  for (auto e : w.elements) j["elements"].push_back(s.label(e));
  if (w.subset) {
    j["subset"] = nlohmann::ordered_json::array();
    for (auto e : w.subset->members()) j["subset"].push_back(s.label(e));
  }
  return j;
}

nlohmann::ordered_json verdict_json(const ParthoodStructure& s, const Verdict& v) {
  nlohmann::ordered_json j;
  j["axiom"] = std::string(axiom_code(v.axiom));
  j["holds"] = v.holds;
  j["witness"] = v.witness ? witness_json(s, *v.witness) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json axioms_json(std::string_view name, const ParthoodStructure& s,
                                   const std::vector<Verdict>& vs) {
  nlohmann::ordered_json j;
  j["structure"] = std::string(name);
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& v : vs) j["results"].push_back(verdict_json(s, v));
  return j;
}

nlohmann::ordered_json theory_json(std::string_view name, const ParthoodStructure& s,
                                   const TheoryVerdict& v) {
  nlohmann::ordered_json j;
  j["structure"] = std::string(name);
  j["theory"] = std::string(theory_code(v.theory));
  j["holds"] = v.holds;
  j["failure"] = v.failure ? verdict_json(s, *v.failure) : nlohmann::ordered_json(nullptr);
  return j;
}

std::string lattice_text(const ZeroedStructure& z, const LatticeReport& r) {
  std::string out;
  out += "elements with zero: " + std::to_string(z.size()) + "\n";
  out += "partial order:      " + yes_no(r.is_partial_order) + "\n";
  out += "lattice:            " + yes_no(r.is_lattice) + "\n";
  out += "complete:           " + yes_no(r.is_complete) + "\n";
  out += "distributive:       " + yes_no(r.is_distributive) + "\n";
  out += "complemented:       " + yes_no(r.is_complemented) + "\n";
  out += "boolean:            " + yes_no(r.is_boolean) + "\n";
  out += "non-degenerate:     " + yes_no(r.is_nondegenerate) + "\n";
  if (r.failed_law) {
    out += "first failure:      " + *r.failed_law + " (";
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      if (i) out += ", ";
      out += z.label(r.witness[i]);
    }
    out += ")\n";
  }
  return out;
}

nlohmann::ordered_json lattice_json(std::string_view name, const ZeroedStructure& z,
                                    const LatticeReport& r) {
  nlohmann::ordered_json j;
  j["structure"] = std::string(name);
  j["zero"] = z.zero_label();
  j["is_partial_order"] = r.is_partial_order;
  j["is_lattice"] = r.is_lattice;
  j["is_complete"] = r.is_complete;
  j["is_distributive"] = r.is_distributive;
  j["is_complemented"] = r.is_complemented;
  j["is_boolean"] = r.is_boolean;
  j["is_nondegenerate"] = r.is_nondegenerate;
  if (r.failed_law) {
    j["failed_law"] = *r.failed_law;
    j["witness"] = nlohmann::ordered_json::array();
    for (auto w : r.witness) j["witness"].push_back(z.label(w));
  } else {
    j["failed_law"] = nullptr;
    j["witness"] = nullptr;
  }
  return j;
}

std::vector<std::pair<ElementId, ElementId>> ing_covers(const ParthoodStructure& s) {
  std::vector<std::pair<ElementId, ElementId>> out;
  const auto n = static_cast<std::uint32_t>(s.size());
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      if (x == y || !((s.ingredients_of(y) >> x) & 1U)) continue;
      // Elements strictly between x and y.
      const Mask between = s.ing_above(x) & s.ingredients_of(y) & ~bit(x) & ~bit(y);
      if (between == 0) out.emplace_back(ElementId{x}, ElementId{y});
    }
  return out;
}

std::string to_dot(const ParthoodStructure& s, std::string_view name, bool full) {
  std::string out = "digraph " + quote(name) + " {\n  rankdir=BT;\n";
  for (const auto& l : s.labels()) out += "  " + quote(l) + ";\n";
  if (full) {
    for (std::uint32_t x = 0; x < s.size(); ++x)
      for_each_bit(s.wholes_of(x), [&](std::uint32_t y) {
        out += "  " + quote(s.labels()[x]) + " -> " + quote(s.labels()[y]) + ";\n";
      });
  } else {
    for (auto [x, y] : ing_covers(s))
      out += "  " + quote(s.label(x)) + " -> " + quote(s.label(y)) + ";\n";
  }
  return out + "}\n";
}

}  // namespace mereo
