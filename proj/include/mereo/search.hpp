#pragma once

// Exhaustive enumeration of finite parthood structures, up to isomorphism,
// and bounded model / countermodel search.
//
// A structure on n elements is encoded as the n*n bit string of its relation
// read row-major, entry (0,0) most significant. Structures are generated in
// increasing encoding; with `up_to_iso` only those whose encoding is minimal
// over all n! relabellings are kept, so the first structure of every
// isomorphism class met in generation order is exactly its canonical form.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mereo/axioms.hpp"

namespace mereo {

/// Largest universe the encoder handles (n*n bits in a 64-bit word).
inline constexpr std::size_t kMaxSearchN = 8;

using Encoding = std::uint64_t;

[[nodiscard]] Encoding encode(const ParthoodStructure& s);
/// Elements are labelled a, b, c, ...
[[nodiscard]] ParthoodStructure decode(Encoding code, std::size_t n);
/// Minimal encoding over all relabellings.
[[nodiscard]] Encoding canonical_encoding(const ParthoodStructure& s);
[[nodiscard]] bool is_canonical(const ParthoodStructure& s);
/// The structure relabelled by `perm` (element i moves to position perm[i]).
[[nodiscard]] ParthoodStructure permute(const ParthoodStructure& s,
                                        std::span<const std::uint32_t> perm);

struct EnumerationOptions {
  bool up_to_iso = true;
  /// 0 selects the hardware concurrency. Output does not depend on it.
  std::size_t workers = 1;
};

using ModelVisitor = std::function<void(const ParthoodStructure&)>;

/// Calls `visit` for every structure of size n satisfying all constraints,
/// in increasing encoding order.
void for_each_model(std::size_t n, std::span<const AxiomId> constraints,
                    const EnumerationOptions& options, const ModelVisitor& visit);
[[nodiscard]] std::vector<ParthoodStructure> enumerate_models(
    std::size_t n, std::span<const AxiomId> constraints, bool up_to_iso,
    std::size_t workers = 1);
[[nodiscard]] std::uint64_t count_models(std::size_t n, std::span<const AxiomId> constraints,
                                         bool up_to_iso, std::size_t workers = 1);

/// for_each_model over every size 1..max_n.
void sweep(std::size_t max_n, std::span<const AxiomId> ambient,
           const EnumerationOptions& options, const ModelVisitor& visit);

struct SearchSpec {
  std::size_t max_n = 5;
  std::vector<AxiomId> ambient;
  std::vector<AxiomId> require;
  std::vector<AxiomId> forbid;
  bool up_to_iso = true;
  std::size_t workers = 1;
};

struct SearchResult {
  std::optional<ParthoodStructure> found;
  /// Structures examined (canonical ones when searching up to isomorphism),
  /// counted in generation order up to and including the find.
  std::uint64_t explored = 0;
  /// True iff the whole space up to max_n was covered without a find.
  bool exhausted = false;
};

/// First structure, by size then encoding, satisfying ambient and require
/// and violating every forbidden axiom. Throws DomainError on a malformed spec.
[[nodiscard]] SearchResult find_model(const SearchSpec& spec);

/// Searches for a model of ambient + hypothesis violating the conclusion.
/// No find with `exhausted` is a bounded confirmation of the implication.
[[nodiscard]] SearchResult verify_implication(std::span<const AxiomId> ambient,
                                              std::span<const AxiomId> hypothesis,
                                              AxiomId conclusion, std::size_t max_n,
                                              std::size_t workers = 1);

}  // namespace mereo
