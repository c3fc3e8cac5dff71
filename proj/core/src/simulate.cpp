#include "hyptest/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace hyptest {

namespace {

constexpr std::uint32_t kNullStream = 0;
constexpr std::uint32_t kAltStream = 1;

std::vector<double> cumulative(const Distribution& p) {
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    acc += p[x];
    cdf[x] = acc;
  }
  return cdf;
}

std::size_t draw_letter(const std::vector<double>& cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  const std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
  return std::min(idx, cdf.size() - 1);
}

std::vector<double> llr_table(const Distribution& p0_hat, const Distribution& p1_hat) {
  std::vector<double> llr(p0_hat.size());
  for (std::size_t m = 0; m < p0_hat.size(); ++m) {
    llr[m] = std::log2(p0_hat[m] / p1_hat[m]);
  }
  return llr;
}

unsigned effective_threads(unsigned requested, std::size_t blocks) {
  unsigned t = requested != 0 ? requested : std::thread::hardware_concurrency();
  if (t == 0) t = 1;
  const std::size_t cap = std::max<std::size_t>(blocks / 1024, 1);
  return static_cast<unsigned>(std::min<std::size_t>(t, cap));
}

// Fills stats[b] with the block-b LLR statistic for blocks drawn from p
// under the given stream id. Work is split by block index, so the contents
// do not depend on the thread count.
void block_statistics(const std::vector<double>& cdf, const Compressor& c,
                      const std::vector<double>& llr, std::size_t blocklength,
                      const PhiloxEngine& engine, std::uint32_t stream_id,
                      unsigned threads, std::vector<double>& stats) {
  const std::size_t blocks = stats.size();
  const unsigned t = effective_threads(threads, blocks);
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t b = begin; b < end; ++b) {
      PhiloxStream stream = engine.stream(stream_id, b);
      double s = 0.0;
      for (std::size_t i = 0; i < blocklength; ++i) {
        const std::size_t letter = draw_letter(cdf, stream.next_double());
        s += llr[c.symbol_of(letter)];
      }
      stats[b] = s;
    }
  };
  if (t <= 1) {
    worker(0, blocks);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  const std::size_t chunk = (blocks + t - 1) / t;
  for (unsigned i = 0; i < t; ++i) {
    const std::size_t begin = std::min<std::size_t>(i * chunk, blocks);
    const std::size_t end = std::min<std::size_t>(begin + chunk, blocks);
    if (begin < end) pool.emplace_back(worker, begin, end);
  }
  for (auto& th : pool) th.join();
}

struct Calibration {
  double threshold = 0.0;
  double type1_rate = 0.0;
};

Calibration calibrate(const HypothesisPair& h, const Compressor& c,
                      const TestConfig& cfg, const PhiloxEngine& engine,
                      unsigned threads) {
  const Distribution p0_hat = induced_distribution(c, h.p0());
  const Distribution p1_hat = induced_distribution(c, h.p1());
  const std::vector<double> cdf = cumulative(h.p0());
  const std::vector<double> llr = llr_table(p0_hat, p1_hat);
  std::vector<double> stats(cfg.trials_per_hypothesis);
  block_statistics(cdf, c, llr, cfg.blocklength, engine, kNullStream, threads, stats);
  std::vector<double> sorted = stats;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t index =
      static_cast<std::size_t>(cfg.epsilon * static_cast<double>(sorted.size()));
  const double threshold = sorted[std::min(index, sorted.size() - 1)];
  std::size_t below = 0;
  for (double s : stats) {
    if (s < threshold) ++below;
  }
  return Calibration{threshold,
                     static_cast<double>(below) / static_cast<double>(stats.size())};
}

}  // namespace

void TestConfig::validate() const {
  if (blocklength < 1) throw std::invalid_argument("TestConfig: blocklength must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw std::invalid_argument("TestConfig: epsilon must lie in (0, 0.5)");
  }
  if (trials_per_hypothesis < 1) {
    throw std::invalid_argument("TestConfig: trials_per_hypothesis must be >= 1");
  }
}

double llr_statistic(std::span<const std::size_t> symbols,
                     const Distribution& p0_hat, const Distribution& p1_hat) {
  if (p0_hat.size() != p1_hat.size()) {
    throw DimensionError("llr_statistic: compressed alphabets differ in size");
  }
  const std::vector<double> llr = llr_table(p0_hat, p1_hat);
  double s = 0.0;
  for (std::size_t sym : symbols) {
    if (sym >= llr.size()) {
      throw std::out_of_range("llr_statistic: symbol " + std::to_string(sym + 1) +
                              " outside compressed alphabet of size " +
                              std::to_string(llr.size()));
    }
    s += llr[sym];
  }
  return s;
}

std::vector<std::size_t> sample_block(const Distribution& p, const Compressor& c,
                                      std::size_t n, PhiloxStream& stream) {
  if (p.size() != c.source_size()) {
    throw DimensionError("sample_block: distribution and compressor disagree on |X|");
  }
  const std::vector<double> cdf = cumulative(p);
  std::vector<std::size_t> symbols(n);
  for (std::size_t i = 0; i < n; ++i) {
    symbols[i] = c.symbol_of(draw_letter(cdf, stream.next_double()));
  }
  return symbols;
}

double calibrate_threshold(const HypothesisPair& h, const Compressor& c,
                           const TestConfig& cfg, const PhiloxEngine& engine,
                           unsigned threads) {
  cfg.validate();
  return calibrate(h, c, cfg, engine, threads).threshold;
}

TestResult simulate_errors(const HypothesisPair& h, const Compressor& c,
                           const TestConfig& cfg, unsigned threads) {
  cfg.validate();
  if (h.alphabet_size() != c.source_size()) {
    throw DimensionError("simulate_errors: hypothesis pair and compressor disagree on |X|");
  }
  const PhiloxEngine engine(cfg.seed);
  const Calibration cal = calibrate(h, c, cfg, engine, threads);

  const Distribution p0_hat = induced_distribution(c, h.p0());
  const Distribution p1_hat = induced_distribution(c, h.p1());
  const std::vector<double> cdf1 = cumulative(h.p1());
  const std::vector<double> llr = llr_table(p0_hat, p1_hat);
  std::vector<double> stats(cfg.trials_per_hypothesis);
  block_statistics(cdf1, c, llr, cfg.blocklength, engine, kAltStream, threads, stats);

  std::size_t accepted_null = 0;  // type-II errors: statistic >= threshold
  for (double s : stats) {
    if (s >= cal.threshold) ++accepted_null;
  }
  const double type2 =
      static_cast<double>(accepted_null) / static_cast<double>(stats.size());

  TestResult result;
  result.threshold_log_t = cal.threshold;
  result.type1_rate = cal.type1_rate;
  result.type2_rate = type2;
  result.exact_zero = (accepted_null == 0);
  result.type2_exponent_bits =
      result.exact_zero
          ? 0.0
          : -std::log2(type2) / static_cast<double>(cfg.blocklength);
  result.trials = cfg.trials_per_hypothesis;
  result.seed = cfg.seed;
  return result;
}

std::vector<ProbePoint> exponent_convergence_probe(
    const HypothesisPair& h, const Compressor& c, double epsilon,
    const std::vector<std::size_t>& blocklengths, std::size_t trials,
    std::uint64_t seed, unsigned threads) {
  std::vector<ProbePoint> points;
  points.reserve(blocklengths.size());
  for (std::size_t n : blocklengths) {
    TestConfig cfg;
    cfg.blocklength = n;
    cfg.epsilon = epsilon;
    cfg.trials_per_hypothesis = trials;
    cfg.seed = seed;
    const TestResult r = simulate_errors(h, c, cfg, threads);
    points.push_back(ProbePoint{n, r.type2_exponent_bits, r.exact_zero});
  }
  return points;
}

}  // namespace hyptest
