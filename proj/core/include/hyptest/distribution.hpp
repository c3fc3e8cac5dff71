#pragma once

#include <cstddef>
#include <vector>

#include "hyptest/errors.hpp"

namespace hyptest {

/// Finite probability vector over the alphabet {1,...,size()}, stored
/// 0-based. Entries are validated at construction (non-negative, finite,
/// summing to 1 within kSumTolerance) and used as-is afterwards; there is
/// no renormalization.
class Distribution {
 public:
  static constexpr double kSumTolerance = 1e-9;

  explicit Distribution(std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  bool operator==(const Distribution&) const = default;

 private:
  std::vector<double> probs_;
};

/// The two candidate source distributions: p0 is the null hypothesis,
/// p1 the alternative. Both must live on the same alphabet of at least two
/// letters and carry strictly positive mass on every letter, so that
/// log-likelihood ratios are finite everywhere.
class HypothesisPair {
 public:
  HypothesisPair(Distribution p0, Distribution p1);

  const Distribution& p0() const { return p0_; }
  const Distribution& p1() const { return p1_; }
  std::size_t alphabet_size() const { return p0_.size(); }

  bool operator==(const HypothesisPair&) const = default;

 private:
  Distribution p0_;
  Distribution p1_;
};

/// Shifted binomial source family: letter x of {1..alphabet_size} carries
/// the mass of x-1 successes in alphabet_size-1 trials with success
/// probability s.
struct BinomialSpec {
  std::size_t alphabet_size = 2;
  double s = 0.5;
};

/// p * log2(p/q) with the 0*log(0/q) = 0 convention. The caller must
/// guarantee q > 0 whenever p > 0; this is the unguarded building block
/// shared by the divergence, penalty and merge-cost routines.
double kl_term_bits(double p, double q);

/// Kullback-Leibler divergence D(p||q) in bits. Throws DimensionError on
/// size mismatch and SupportError if p(x) > 0 while q(x) = 0; never returns
/// an infinite value.
double kl_divergence(const Distribution& p, const Distribution& q);

/// Evaluates the shifted-binomial pmf in the log domain (lgamma-based), so
/// alphabets as large as 256 neither overflow nor lose their tails.
Distribution binomial_source(const BinomialSpec& spec);

}  // namespace hyptest
