#pragma once

// Plain-text structure files:
//
//   # comment
//   elements: a b ab
//   part: a < ab
//   part: b < ab
//
// Universe order is declaration order. Repeated part lines are harmless.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mereo/core.hpp"

namespace mereo {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

[[nodiscard]] ParthoodStructure parse_structure(std::string_view text,
                                                std::size_t max_universe = kDefaultMaxUniverse);
[[nodiscard]] ParthoodStructure load_structure(const std::filesystem::path& path,
                                               std::size_t max_universe = kDefaultMaxUniverse);
[[nodiscard]] std::string serialize_structure(const ParthoodStructure& s);

}  // namespace mereo
