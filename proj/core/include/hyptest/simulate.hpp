#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyptest/compressor.hpp"
#include "hyptest/distribution.hpp"
#include "hyptest/rng.hpp"

namespace hyptest {

/// Monte Carlo configuration for one test: samples per block, type-I budget
/// epsilon, number of blocks per hypothesis and the RNG seed.
struct TestConfig {
  std::size_t blocklength = 5;
  double epsilon = 0.05;
  std::size_t trials_per_hypothesis = 1000000;
  std::uint64_t seed = 0;

  void validate() const;

  bool operator==(const TestConfig&) const = default;
};

struct TestResult {
  double threshold_log_t = 0.0;
  double type1_rate = 0.0;
  double type2_rate = 0.0;
  /// -(1/n) log2(type2_rate); 0 with exact_zero set when no type-II error
  /// occurred, so every field stays finite.
  double type2_exponent_bits = 0.0;
  bool exact_zero = false;
  std::size_t trials = 0;
  std::uint64_t seed = 0;

  bool operator==(const TestResult&) const = default;
};

/// Sum of per-sample log-likelihood ratios log2(p0_hat/p1_hat) over the
/// received symbols (0-based). Empty input gives 0.
double llr_statistic(std::span<const std::size_t> symbols,
                     const Distribution& p0_hat, const Distribution& p1_hat);

/// n i.i.d. source letters drawn from p by inverse CDF, each mapped through
/// the compressor. Deterministic given the stream state.
std::vector<std::size_t> sample_block(const Distribution& p, const Compressor& c,
                                      std::size_t n, PhiloxStream& stream);

/// Draws cfg.trials_per_hypothesis blocks under the null hypothesis and
/// returns the largest threshold (an observed order statistic) for which
/// the fraction of blocks with statistic strictly below it stays under
/// epsilon: the statistic at 0-based index floor(epsilon * N) of the sorted
/// sample.
double calibrate_threshold(const HypothesisPair& h, const Compressor& c,
                           const TestConfig& cfg, const PhiloxEngine& engine,
                           unsigned threads = 0);

/// Full protocol: calibrates on null-hypothesis blocks (stream id 0),
/// reports the type-I rate on that calibration sample, then measures the
/// type-II rate on fresh alternative-hypothesis blocks (stream id 1).
/// Equality with the threshold decides for the null hypothesis. Results are
/// bit-identical for a given config regardless of `threads`.
TestResult simulate_errors(const HypothesisPair& h, const Compressor& c,
                           const TestConfig& cfg, unsigned threads = 0);

struct ProbePoint {
  std::size_t blocklength = 0;
  double exponent_bits = 0.0;
  bool exact_zero = false;
};

/// Runs simulate_errors at each blocklength and collects the exponent
/// estimates, for convergence checks against the design-report exponent.
std::vector<ProbePoint> exponent_convergence_probe(
    const HypothesisPair& h, const Compressor& c, double epsilon,
    const std::vector<std::size_t>& blocklengths, std::size_t trials,
    std::uint64_t seed, unsigned threads = 0);

}  // namespace hyptest
