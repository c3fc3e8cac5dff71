#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyptest/distribution.hpp"

namespace hyptest {

/// A fixed-length single-shot compressor f: {1..|X|} -> {1..M}, represented
/// by the partition of the source alphabet into the preimage groups of the
/// M output symbols. Canonical form: letters ascending within each group,
/// groups ordered by their smallest letter. Letters and symbols are 0-based
/// in this API; file formats use 1-based letters.
class Compressor {
 public:
  /// Validates the partition property (non-empty, disjoint, covering) and
  /// stores the canonical form.
  Compressor(std::size_t source_size, std::vector<std::vector<std::size_t>> groups);

  static Compressor identity(std::size_t source_size);
  static Compressor single_group(std::size_t source_size);

  std::size_t source_size() const { return source_size_; }
  std::size_t rate_symbols() const { return groups_.size(); }  // M
  const std::vector<std::vector<std::size_t>>& groups() const { return groups_; }
  std::size_t symbol_of(std::size_t letter) const;

  /// Compressor with groups a and b combined, again in canonical form.
  Compressor merged(std::size_t a, std::size_t b) const;

  bool operator==(const Compressor& other) const {
    return source_size_ == other.source_size_ && groups_ == other.groups_;
  }

 private:
  std::size_t source_size_;
  std::vector<std::vector<std::size_t>> groups_;
  std::vector<std::uint32_t> symbol_of_;
};

/// Design-time analytics for one compressor against one hypothesis pair.
struct DesignReport {
  Compressor compressor;
  Distribution p0_hat;
  Distribution p1_hat;
  double exponent_bits;   // D(p0_hat || p1_hat)
  double penalty_bits;    // source_kl_bits - exponent_bits
  double source_kl_bits;  // D(p0 || p1)
};

/// Pushforward of p through c: entry m is the total source mass mapped to
/// symbol m.
Distribution induced_distribution(const Compressor& c, const Distribution& p);

/// Conditional distribution of the source letter given that it compressed
/// to the given group, restricted to that group's letters (in ascending
/// letter order). theta selects the hypothesis (0 or 1).
Distribution group_posterior(const HypothesisPair& h, const Compressor& c,
                             std::size_t group_index, int theta);

/// Exponent loss D(p0||p1) - D(p0_hat||p1_hat) in bits.
double penalty_direct(const HypothesisPair& h, const Compressor& c);

/// The same penalty as a mixture of per-group posterior divergences;
/// singleton groups contribute exactly 0.
double penalty_grouped(const HypothesisPair& h, const Compressor& c);

/// Penalty increment from combining groups a and b of c.
double merge_cost(const HypothesisPair& h, const Compressor& c,
                  std::size_t a, std::size_t b);

DesignReport make_design_report(const HypothesisPair& h, const Compressor& c);

}  // namespace hyptest
