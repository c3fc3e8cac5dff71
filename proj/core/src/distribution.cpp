#include "hyptest/distribution.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace hyptest {

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("Distribution: probability vector is empty");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double p = probs_[i];
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument("Distribution: entry " + std::to_string(i + 1) +
                                  " is negative or not finite");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("Distribution: entries sum to " + std::to_string(sum) +
                                ", expected 1 within 1e-9");
  }
}

HypothesisPair::HypothesisPair(Distribution p0, Distribution p1)
    : p0_(std::move(p0)), p1_(std::move(p1)) {
  if (p0_.size() != p1_.size()) {
    throw DimensionError("HypothesisPair: alphabet sizes differ (" +
                         std::to_string(p0_.size()) + " vs " + std::to_string(p1_.size()) + ")");
  }
  if (p0_.size() < 2) {
    throw std::invalid_argument("HypothesisPair: alphabet must have at least 2 letters");
  }
  for (std::size_t x = 0; x < p0_.size(); ++x) {
    if (p0_[x] <= 0.0 || p1_[x] <= 0.0) {
      throw SupportError("HypothesisPair: letter " + std::to_string(x + 1) +
                         " has zero mass under one hypothesis; strictly positive "
                         "support is required");
    }
  }
}

double kl_term_bits(double p, double q) {
  return p == 0.0 ? 0.0 : p * std::log2(p / q);
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw DimensionError("kl_divergence: alphabet sizes differ (" + std::to_string(p.size()) +
                         " vs " + std::to_string(q.size()) + ")");
  }
  double sum = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0) continue;
    if (q[x] == 0.0) {
      throw SupportError("kl_divergence: p(" + std::to_string(x + 1) +
                         ") > 0 while q(" + std::to_string(x + 1) +
                         ") = 0 (absolute continuity violated)");
    }
    sum += kl_term_bits(p[x], q[x]);
  }
  return sum;
}

Distribution binomial_source(const BinomialSpec& spec) {
  if (spec.alphabet_size < 2) {
    throw std::invalid_argument("binomial_source: alphabet_size must be >= 2");
  }
  if (!(spec.s > 0.0 && spec.s < 1.0)) {
    throw std::invalid_argument("binomial_source: s must lie in (0, 1)");
  }
  const std::size_t trials = spec.alphabet_size - 1;
  const double log_s = std::log(spec.s);
  const double log_1ms = std::log(1.0 - spec.s);
  const double lg_n = std::lgamma(static_cast<double>(trials) + 1.0);
  std::vector<double> probs(spec.alphabet_size);
  for (std::size_t x = 0; x < spec.alphabet_size; ++x) {
    const double k = static_cast<double>(x);
    const double log_coeff = lg_n - std::lgamma(k + 1.0) -
                             std::lgamma(static_cast<double>(trials - x) + 1.0);
    probs[x] = std::exp(log_coeff + k * log_s +
                        static_cast<double>(trials - x) * log_1ms);
  }
  return Distribution(std::move(probs));
}

}  // namespace hyptest
