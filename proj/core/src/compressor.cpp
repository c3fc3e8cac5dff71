#include "hyptest/compressor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace hyptest {

namespace {

void canonicalize(std::vector<std::vector<std::size_t>>& groups) {
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

Compressor::Compressor(std::size_t source_size,
                       std::vector<std::vector<std::size_t>> groups)
    : source_size_(source_size), groups_(std::move(groups)) {
  if (source_size_ == 0) {
    throw std::invalid_argument("Compressor: source alphabet is empty");
  }
  if (groups_.empty() || groups_.size() > source_size_) {
    throw std::invalid_argument("Compressor: need between 1 and |X| groups, got " +
                                std::to_string(groups_.size()));
  }
  for (const auto& g : groups_) {
    if (g.empty()) throw std::invalid_argument("Compressor: empty group");
  }
  canonicalize(groups_);
  symbol_of_.assign(source_size_, UINT32_MAX);
  std::size_t covered = 0;
  for (std::size_t m = 0; m < groups_.size(); ++m) {
    for (std::size_t x : groups_[m]) {
      if (x >= source_size_) {
        throw std::invalid_argument("Compressor: letter index " + std::to_string(x + 1) +
                                    " outside alphabet of size " + std::to_string(source_size_));
      }
      if (symbol_of_[x] != UINT32_MAX) {
        throw std::invalid_argument("Compressor: letter " + std::to_string(x + 1) +
                                    " appears in more than one group");
      }
      symbol_of_[x] = static_cast<std::uint32_t>(m);
      ++covered;
    }
  }
  if (covered != source_size_) {
    throw std::invalid_argument("Compressor: groups cover " + std::to_string(covered) +
                                " of " + std::to_string(source_size_) + " letters");
  }
}

Compressor Compressor::identity(std::size_t source_size) {
  std::vector<std::vector<std::size_t>> groups(source_size);
  for (std::size_t x = 0; x < source_size; ++x) groups[x] = {x};
  return Compressor(source_size, std::move(groups));
}

Compressor Compressor::single_group(std::size_t source_size) {
  std::vector<std::size_t> all(source_size);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Compressor(source_size, {std::move(all)});
}

std::size_t Compressor::symbol_of(std::size_t letter) const {
  if (letter >= source_size_) {
    throw std::out_of_range("Compressor::symbol_of: letter index out of range");
  }
  return symbol_of_[letter];
}

Compressor Compressor::merged(std::size_t a, std::size_t b) const {
  if (a >= groups_.size() || b >= groups_.size() || a == b) {
    throw std::out_of_range("Compressor::merged: invalid group pair");
  }
  std::vector<std::vector<std::size_t>> next;
  next.reserve(groups_.size() - 1);
  std::vector<std::size_t> combined;
  for (std::size_t m = 0; m < groups_.size(); ++m) {
    if (m == a || m == b) {
      combined.insert(combined.end(), groups_[m].begin(), groups_[m].end());
    } else {
      next.push_back(groups_[m]);
    }
  }
  next.push_back(std::move(combined));
  return Compressor(source_size_, std::move(next));
}

Distribution induced_distribution(const Compressor& c, const Distribution& p) {
  if (c.source_size() != p.size()) {
    throw DimensionError("induced_distribution: compressor is over " +
                         std::to_string(c.source_size()) + " letters, distribution over " +
                         std::to_string(p.size()));
  }
  std::vector<double> out(c.rate_symbols(), 0.0);
  for (std::size_t m = 0; m < c.groups().size(); ++m) {
    for (std::size_t x : c.groups()[m]) out[m] += p[x];
  }
  return Distribution(std::move(out));
}

Distribution group_posterior(const HypothesisPair& h, const Compressor& c,
                             std::size_t group_index, int theta) {
  if (c.source_size() != h.alphabet_size()) {
    throw DimensionError("group_posterior: compressor and hypothesis pair disagree on |X|");
  }
  if (group_index >= c.rate_symbols()) {
    throw std::out_of_range("group_posterior: group index out of range");
  }
  if (theta != 0 && theta != 1) {
    throw std::invalid_argument("group_posterior: theta must be 0 or 1");
  }
  const Distribution& p = (theta == 0) ? h.p0() : h.p1();
  const auto& group = c.groups()[group_index];
  double mass = 0.0;
  for (std::size_t x : group) mass += p[x];
  std::vector<double> post(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) post[i] = p[group[i]] / mass;
  return Distribution(std::move(post));
}

double penalty_direct(const HypothesisPair& h, const Compressor& c) {
  const double source_kl = kl_divergence(h.p0(), h.p1());
  const double compressed_kl = kl_divergence(induced_distribution(c, h.p0()),
                                             induced_distribution(c, h.p1()));
  return source_kl - compressed_kl;
}

double penalty_grouped(const HypothesisPair& h, const Compressor& c) {
  const Distribution p0_hat = induced_distribution(c, h.p0());
  double total = 0.0;
  for (std::size_t m = 0; m < c.rate_symbols(); ++m) {
    if (c.groups()[m].size() == 1) continue;  // one-to-one mapping, exactly 0
    const Distribution post0 = group_posterior(h, c, m, 0);
    const Distribution post1 = group_posterior(h, c, m, 1);
    total += p0_hat[m] * kl_divergence(post0, post1);
  }
  return total;
}

double merge_cost(const HypothesisPair& h, const Compressor& c,
                  std::size_t a, std::size_t b) {
  if (a >= c.rate_symbols() || b >= c.rate_symbols() || a == b) {
    throw std::out_of_range("merge_cost: invalid group pair");
  }
  const Distribution m0 = induced_distribution(c, h.p0());
  const Distribution m1 = induced_distribution(c, h.p1());
  return kl_term_bits(m0[a], m1[a]) + kl_term_bits(m0[b], m1[b]) -
         kl_term_bits(m0[a] + m0[b], m1[a] + m1[b]);
}

DesignReport make_design_report(const HypothesisPair& h, const Compressor& c) {
  Distribution p0_hat = induced_distribution(c, h.p0());
  Distribution p1_hat = induced_distribution(c, h.p1());
  const double source_kl = kl_divergence(h.p0(), h.p1());
  const double exponent = kl_divergence(p0_hat, p1_hat);
  return DesignReport{c, std::move(p0_hat), std::move(p1_hat), exponent,
                      source_kl - exponent, source_kl};
}

}  // namespace hyptest
