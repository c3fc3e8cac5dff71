#pragma once

#include <cstddef>

#include "hyptest/compressor.hpp"
#include "hyptest/distribution.hpp"

namespace hyptest {

/// Agglomerative construction: start from the identity partition and
/// repeatedly combine the two groups whose merge costs the least exponent,
/// until M groups remain. Ties on the (exactly equal) minimal cost are
/// broken toward the pair whose sorted pair of smallest letters is
/// lexicographically least, so the result is deterministic.
Compressor greedy_compress(const HypothesisPair& h, std::size_t M);

/// Exhaustive optimum over all partitions of the alphabet into exactly M
/// non-empty blocks, enumerated as restricted growth strings. Among
/// exponent ties the lexicographically smallest growth string wins, so the
/// result does not depend on traversal or parallelism order. Throws
/// BudgetError naming the Stirling-number estimate when the enumeration
/// would visit more than `budget` partitions.
Compressor optimal_compress(const HypothesisPair& h, std::size_t M,
                            double budget = 1e8);

struct QStarResult {
  Distribution q;      // the minimax center
  double delta_bits;   // max(D(p0||q), D(p1||q)) at the optimum
  double lambda;       // weight of p0 in the underlying mixture
};

/// Minimizes max(D(p0||Q), D(p1||Q)) subject to the per-entry cap
/// Q(x) <= 1/M. Searches the mixture family lambda*p0 + (1-lambda)*p1,
/// enforcing the cap by iterative clip-and-redistribute and equalizing the
/// two divergences by bisection on lambda; when they cannot be equalized on
/// [0,1] the better endpoint (the capped projection of one hypothesis) is
/// returned. `tol` bounds the bisection's residual on delta.
QStarResult solve_q_star(const HypothesisPair& h, std::size_t M, double tol = 1e-9);

/// Log-loss baseline: the M-1 letters with the largest Q* values keep
/// one-to-one mappings (ties toward the smaller letter), all remaining
/// letters share one catch-all symbol.
Compressor universal_compress(const HypothesisPair& h, std::size_t M);

/// Stirling number of the second kind S(n, k) as a double; +inf when it
/// overflows the double range.
double stirling_second(std::size_t n, std::size_t k);

}  // namespace hyptest
