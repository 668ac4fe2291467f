// Sanity checks on the brute-force oracle itself, against well-known counts
// of finite posets, before it is trusted to judge the library.
#include <doctest.h>

#include "oracle.hpp"

TEST_CASE("oracle counts strict partial orders") {
  const std::vector<std::string> spo{"T", "IRR"};
  // Labelled posets: 1, 3, 19, 219. Unlabelled: 1, 2, 5, 16.
  CHECK(oracle::naive_count(1, spo) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
  CHECK(oracle::naive_count(2, spo) == std::pair<std::uint64_t, std::uint64_t>{3, 2});
  CHECK(oracle::naive_count(3, spo) == std::pair<std::uint64_t, std::uint64_t>{19, 5});
  CHECK(oracle::naive_count(4, spo) == std::pair<std::uint64_t, std::uint64_t>{219, 16});
}

TEST_CASE("oracle counts all digraphs up to isomorphism") {
  // Digraphs with loops allowed: 2, 10, 104 classes.
  CHECK(oracle::naive_count(1, {}).second == 2);
  CHECK(oracle::naive_count(2, {}).second == 10);
  CHECK(oracle::naive_count(3, {}).second == 104);
}

TEST_CASE("oracle encoding round trip") {
  for (std::uint64_t c = 0; c < 512; ++c) CHECK(oracle::code_of(oracle::from_code(c, 3)) == c);
}
