#include "hyptest/design.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyptest {

namespace {

double pair_merge_cost(double a0, double a1, double b0, double b1) {
  return kl_term_bits(a0, a1) + kl_term_bits(b0, b1) -
         kl_term_bits(a0 + b0, a1 + b1);
}

// Depth-first enumeration of restricted growth strings with exactly
// `block_count` blocks, carrying the per-block masses incrementally so a
// leaf only has to sum M divergence terms. Block numbering by first
// appearance coincides with the canonical group order.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const Distribution& p0, const Distribution& p1, std::size_t block_count)
      : p0_(p0.probs()),
        p1_(p1.probs()),
        n_(p0.size()),
        m_(block_count),
        assignment_(n_, 0),
        best_assignment_(n_, 0),
        mass0_(block_count, 0.0),
        mass1_(block_count, 0.0) {}

  std::vector<std::uint16_t> run() {
    descend(0, 0);
    return best_assignment_;
  }

 private:
  void descend(std::size_t letter, std::size_t blocks_used) {
    if (letter == n_) {
      double kl = 0.0;
      for (std::size_t j = 0; j < m_; ++j) kl += kl_term_bits(mass0_[j], mass1_[j]);
      // Strict improvement keeps the first (lexicographically least) string
      // among exact ties.
      if (kl > best_kl_) {
        best_kl_ = kl;
        best_assignment_ = assignment_;
      }
      return;
    }
    if (blocks_used + (n_ - letter) < m_) return;  // cannot still reach M blocks
    const std::size_t limit = std::min(blocks_used, m_ - 1);
    for (std::size_t b = 0; b <= limit; ++b) {
      assignment_[letter] = static_cast<std::uint16_t>(b);
      const double save0 = mass0_[b];
      const double save1 = mass1_[b];
      mass0_[b] = save0 + p0_[letter];
      mass1_[b] = save1 + p1_[letter];
      descend(letter + 1, std::max(blocks_used, b + 1));
      mass0_[b] = save0;
      mass1_[b] = save1;
    }
  }

  const std::vector<double>& p0_;
  const std::vector<double>& p1_;
  std::size_t n_;
  std::size_t m_;
  std::vector<std::uint16_t> assignment_;
  std::vector<std::uint16_t> best_assignment_;
  std::vector<double> mass0_;
  std::vector<double> mass1_;
  double best_kl_ = -std::numeric_limits<double>::infinity();
};

std::vector<std::vector<std::size_t>> groups_from_assignment(
    const std::vector<std::uint16_t>& assignment, std::size_t block_count) {
  std::vector<std::vector<std::size_t>> groups(block_count);
  for (std::size_t x = 0; x < assignment.size(); ++x) groups[assignment[x]].push_back(x);
  return groups;
}

std::string format_estimate(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

}  // namespace

Compressor greedy_compress(const HypothesisPair& h, std::size_t M) {
  const std::size_t n = h.alphabet_size();
  if (M < 1 || M > n) {
    throw std::invalid_argument("greedy_compress: M must lie in [1, |X|]");
  }
  std::vector<std::vector<std::size_t>> groups(n);
  std::vector<double> mass0(n), mass1(n);
  for (std::size_t x = 0; x < n; ++x) {
    groups[x] = {x};
    mass0[x] = h.p0()[x];
    mass1[x] = h.p1()[x];
  }
  while (groups.size() > M) {
    double best_cost = std::numeric_limits<double>::infinity();
    std::pair<std::size_t, std::size_t> best_key{n, n};
    std::size_t best_a = 0, best_b = 1;
    for (std::size_t a = 0; a + 1 < groups.size(); ++a) {
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
        const double cost = pair_merge_cost(mass0[a], mass1[a], mass0[b], mass1[b]);
        const auto key = std::minmax(groups[a].front(), groups[b].front());
        if (cost < best_cost || (cost == best_cost && key < best_key)) {
          best_cost = cost;
          best_key = key;
          best_a = a;
          best_b = b;
        }
      }
    }
    std::vector<std::size_t> combined;
    combined.reserve(groups[best_a].size() + groups[best_b].size());
    std::merge(groups[best_a].begin(), groups[best_a].end(),
               groups[best_b].begin(), groups[best_b].end(),
               std::back_inserter(combined));
    groups[best_a] = std::move(combined);
    mass0[best_a] += mass0[best_b];
    mass1[best_a] += mass1[best_b];
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(best_b));
    mass0.erase(mass0.begin() + static_cast<std::ptrdiff_t>(best_b));
    mass1.erase(mass1.begin() + static_cast<std::ptrdiff_t>(best_b));
  }
  return Compressor(n, std::move(groups));
}

double stirling_second(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  if (k == 0) return n == 0 ? 1.0 : 0.0;
  // One DP row per element count; doubles saturate to +inf on overflow.
  std::vector<double> row(k + 1, 0.0);
  row[0] = 1.0;  // S(0,0)
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t top = std::min(i, k);
    for (std::size_t j = top; j >= 1; --j) {
      row[j] = static_cast<double>(j) * row[j] + row[j - 1];
    }
    row[0] = 0.0;
  }
  return row[k];
}

Compressor optimal_compress(const HypothesisPair& h, std::size_t M, double budget) {
  const std::size_t n = h.alphabet_size();
  if (M < 1 || M > n) {
    throw std::invalid_argument("optimal_compress: M must lie in [1, |X|]");
  }
  const double count = stirling_second(n, M);
  if (!(count <= budget)) {
    throw BudgetError("optimal_compress: enumerating S(" + std::to_string(n) + "," +
                          std::to_string(M) + ") = " + format_estimate(count) +
                          " partitions exceeds the budget of " + format_estimate(budget),
                      count);
  }
  ExhaustiveSearch search(h.p0(), h.p1(), M);
  return Compressor(n, groups_from_assignment(search.run(), M));
}

namespace {

// lambda*p0 + (1-lambda)*p1 projected onto {q : q(x) <= cap} by clipping
// oversized entries and rescaling the rest, repeated until stable. The
// capped set only grows, so this terminates within |X| passes.
std::vector<double> capped_mixture(const HypothesisPair& h, double lambda, double cap) {
  const std::size_t n = h.alphabet_size();
  std::vector<double> mix(n);
  for (std::size_t x = 0; x < n; ++x) {
    mix[x] = lambda * h.p0()[x] + (1.0 - lambda) * h.p1()[x];
  }
  std::vector<bool> capped(n, false);
  std::vector<double> q = mix;
  for (std::size_t pass = 0; pass < n; ++pass) {
    double capped_mass = 0.0;
    double free_mass = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (capped[x]) {
        capped_mass += cap;
      } else {
        free_mass += mix[x];
      }
    }
    if (free_mass <= 0.0) break;
    const double scale = (1.0 - capped_mass) / free_mass;
    bool grew = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (capped[x]) {
        q[x] = cap;
        continue;
      }
      q[x] = mix[x] * scale;
      if (q[x] > cap) {
        capped[x] = true;
        grew = true;
      }
    }
    if (!grew) break;
  }
  return q;
}

double kl_to(const Distribution& p, const std::vector<double>& q) {
  double sum = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) sum += kl_term_bits(p[x], q[x]);
  return sum;
}

}  // namespace

QStarResult solve_q_star(const HypothesisPair& h, std::size_t M, double tol) {
  const std::size_t n = h.alphabet_size();
  if (M < 2 || M > n) {
    throw std::invalid_argument("solve_q_star: M must lie in [2, |X|]");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("solve_q_star: tol must be positive");
  }
  const double cap = 1.0 / static_cast<double>(M);
  const auto gap = [&](double lambda, double* delta) {
    const std::vector<double> q = capped_mixture(h, lambda, cap);
    const double d0 = kl_to(h.p0(), q);
    const double d1 = kl_to(h.p1(), q);
    if (delta != nullptr) *delta = std::max(d0, d1);
    return d0 - d1;
  };

  constexpr int kMaxIterations = 10000;
  double lo = 0.0, hi = 1.0;
  double lambda;
  if (gap(1.0, nullptr) >= 0.0) {
    // D(p0||.) dominates even at the capped projection of p0, which already
    // minimizes it; the endpoint is optimal.
    lambda = 1.0;
  } else if (gap(0.0, nullptr) <= 0.0) {
    lambda = 0.0;
  } else {
    int iterations = 0;
    double delta_mid = 0.0;
    while (hi - lo > 1e-15 && iterations < kMaxIterations) {
      const double mid = 0.5 * (lo + hi);
      const double g = gap(mid, &delta_mid);
      if (std::abs(g) <= tol) break;
      if (g > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
      ++iterations;
    }
    lambda = 0.5 * (lo + hi);
  }
  double delta = 0.0;
  gap(lambda, &delta);
  return QStarResult{Distribution(capped_mixture(h, lambda, cap)), delta, lambda};
}

Compressor universal_compress(const HypothesisPair& h, std::size_t M) {
  const std::size_t n = h.alphabet_size();
  if (M < 2 || M > n) {
    throw std::invalid_argument("universal_compress: M must lie in [2, |X|]");
  }
  const QStarResult star = solve_q_star(h, M);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return star.q[a] > star.q[b];  // descending Q*, ties toward the smaller letter
  });
  std::vector<std::vector<std::size_t>> groups;
  groups.reserve(M);
  for (std::size_t i = 0; i + 1 < M; ++i) groups.push_back({order[i]});
  std::vector<std::size_t> tail(order.begin() + static_cast<std::ptrdiff_t>(M - 1), order.end());
  groups.push_back(std::move(tail));
  return Compressor(n, std::move(groups));
}

}  // namespace hyptest
