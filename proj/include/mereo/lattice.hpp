#pragma once

// Zero adjunction and brute-force lattice verification. Meets and joins are
// found by scanning bounds of the order, never through mereological sums.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mereo/core.hpp"

namespace mereo {

class OrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parthood structure with a fresh bottom element appended at index
/// `base.size()`. The order is Ing on the base, with the zero below all.
class ZeroedStructure {
 public:
  [[nodiscard]] const ParthoodStructure& base() const { return base_; }
  [[nodiscard]] std::uint32_t zero() const { return static_cast<std::uint32_t>(base_.size()); }
  [[nodiscard]] std::size_t size() const { return below_.size(); }
  /// a ≤ b in the extended order.
  [[nodiscard]] bool leq(std::uint32_t a, std::uint32_t b) const { return (below_[b] >> a) & 1U; }
  /// Elements a with a ≤ b.
  [[nodiscard]] Mask below(std::uint32_t b) const { return below_[b]; }
  [[nodiscard]] const std::string& label(std::uint32_t a) const;
  [[nodiscard]] const std::string& zero_label() const { return zero_label_; }
  /// Covering pairs (a, b): a < b with nothing strictly between.
  [[nodiscard]] std::vector<std::pair<std::uint32_t, std::uint32_t>> covers() const;

 private:
  friend ZeroedStructure adjoin_zero(const ParthoodStructure& s);
  friend ZeroedStructure adjoin_zero_unchecked(const ParthoodStructure& s);
  explicit ZeroedStructure(const ParthoodStructure& s);

  ParthoodStructure base_;
  std::string zero_label_;
  std::vector<Mask> below_;
};

/// Requires the base relation to be transitive and irreflexive; throws OrderError otherwise.
[[nodiscard]] ZeroedStructure adjoin_zero(const ParthoodStructure& s);
/// Same construction without the precondition; the result may fail to be a partial order.
[[nodiscard]] ZeroedStructure adjoin_zero_unchecked(const ParthoodStructure& s);
/// Recovers the base structure.
[[nodiscard]] ParthoodStructure remove_zero(const ZeroedStructure& z);

struct LatticeReport {
  bool is_partial_order = false;
  bool is_lattice = false;
  bool is_distributive = false;
  bool is_complemented = false;
  bool is_boolean = false;
  bool is_complete = false;
  bool is_nondegenerate = false;
  /// Name of the first failing law ("partial order", "meet", "join",
  /// "distributivity", "complement", "completeness") and its witness,
  /// as indices into the zeroed carrier.
  std::optional<std::string> failed_law;
  std::vector<std::uint32_t> witness;
};

[[nodiscard]] LatticeReport lattice_report(const ZeroedStructure& z);

struct TarskiSides {
  bool classical = false;    // the structure models classical mereology
  bool boolean_side = false; // it is a non-degenerate complete Boolean lattice minus zero
  [[nodiscard]] bool agree() const { return classical == boolean_side; }
};

[[nodiscard]] TarskiSides tarski_sides(const ParthoodStructure& s);
/// True iff both sides of the classical-mereology / Boolean-lattice
/// correspondence agree on s.
[[nodiscard]] bool tarski_check(const ParthoodStructure& s);

/// The non-empty subsets of a k-element set under strict inclusion, i.e.
/// the Boolean lattice with 2^k elements minus its zero. Atoms come first.
[[nodiscard]] ParthoodStructure boolean_structure(std::size_t k);

}  // namespace mereo
