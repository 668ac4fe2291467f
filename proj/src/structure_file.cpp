#include "mereo/structure_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace mereo {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool valid_label(std::string_view l) {
  return !l.empty() && l.find_first_of("<,:#") == std::string_view::npos;
}

}  // namespace

ParthoodStructure parse_structure(std::string_view text, std::size_t max_universe) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  bool declared = false;
  std::size_t line_no = 0;

  auto index_of = [&](const std::string& l) -> std::size_t {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    throw ParseError(line_no, "undeclared element '" + l + "'");
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'elements:' or 'part:'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view rest = trim(line.substr(colon + 1));

    if (key == "elements") {
      if (declared) throw ParseError(line_no, "elements declared twice");
      labels = words(rest);
      if (labels.empty()) throw ParseError(line_no, "no elements declared");
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!valid_label(labels[i])) throw ParseError(line_no, "invalid label '" + labels[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
          if (labels[i] == labels[j]) throw ParseError(line_no, "duplicate element '" + labels[i] + "'");
      }
      if (labels.size() > max_universe)
        throw ParseError(line_no, "universe of " + std::to_string(labels.size()) +
                                      " elements exceeds cap of " + std::to_string(max_universe));
      declared = true;
    } else if (key == "part") {
      if (!declared) throw ParseError(line_no, "part line before elements declaration");
      const auto lt = rest.find('<');
      if (lt == std::string_view::npos) throw ParseError(line_no, "expected 'part: <label> < <label>'");
      const auto lhs = words(rest.substr(0, lt));
      const auto rhs = words(rest.substr(lt + 1));
      if (lhs.size() != 1 || rhs.size() != 1)
        throw ParseError(line_no, "expected exactly one label on each side of '<'");
      pairs.emplace_back(index_of(lhs[0]), index_of(rhs[0]));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!declared) throw ParseError(std::max<std::size_t>(line_no, 1), "missing 'elements:' line");

  std::vector<Mask> rows(labels.size(), 0);
  for (auto [x, y] : pairs) rows[x] |= bit(static_cast<std::uint32_t>(y));
  return ParthoodStructure(std::move(labels), std::move(rows), max_universe);
}

ParthoodStructure load_structure(const std::filesystem::path& path, std::size_t max_universe) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str(), max_universe);
}

std::string serialize_structure(const ParthoodStructure& s) {
  std::string out = "elements:";
  for (const auto& l : s.labels()) out += " " + l;
  out += "\n";
  for (std::uint32_t x = 0; x < s.size(); ++x)
    for_each_bit(s.wholes_of(x), [&](std::uint32_t y) {
      out += "part: " + s.labels()[x] + " < " + s.labels()[y] + "\n";
    });
  return out;
}

}  // namespace mereo
