#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyptest/distribution.hpp"
#include "hyptest/simulate.hpp"

namespace hyptest {

enum class Method { identity, greedy, optimal, universal };

std::string to_string(Method m);
Method method_from_string(const std::string& name);  // throws std::invalid_argument

enum class OutputFormat { csv, json };

std::string to_string(OutputFormat f);
OutputFormat format_from_string(const std::string& name);

/// Two shifted-binomial sources over a shared alphabet.
struct BinomialPairSpec {
  std::size_t alphabet_size = 2;
  double s0 = 0.5;
  double s1 = 0.5;

  bool operator==(const BinomialPairSpec&) const = default;
};

/// One experiment: a source pair (binomial parameters or a JSON file), the
/// design methods and rates to sweep, and the Monte Carlo test settings.
struct ExperimentConfig {
  std::optional<BinomialPairSpec> binomial;  // exactly one source must be set
  std::optional<std::string> dist_file;
  std::vector<Method> methods;
  std::vector<std::size_t> rates;  // values of M
  TestConfig test;
  OutputFormat format = OutputFormat::csv;
  std::string out_path = "-";  // "-" writes to stdout
  double optimal_budget = 1e8;
  unsigned threads = 0;  // 0 = hardware concurrency

  bool operator==(const ExperimentConfig&) const = default;
};

/// One (method, M) row of the sweep output. Analytics-only sweeps leave the
/// simulation fields empty; records skipped for budget reasons carry the
/// reason and leave every numeric field beyond the rate empty.
struct SweepRecord {
  Method method = Method::identity;
  std::size_t rate_symbols = 0;  // M
  double rate_bits = 0.0;        // log2(M)
  std::optional<double> exponent_bits;
  std::optional<double> penalty_bits;
  std::optional<double> type1_rate;
  std::optional<double> type2_rate;
  std::optional<bool> exact_zero;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> skipped;

  bool operator==(const SweepRecord&) const = default;
};

/// Loads or constructs the hypothesis pair named by the config.
HypothesisPair resolve_source(const ExperimentConfig& cfg);

/// Designs one compressor per (method, M) and reports the analytic exponent
/// and penalty. Optimal-method records whose enumeration exceeds the budget
/// are emitted with a skip marker instead of being dropped. Never consumes
/// randomness.
std::vector<SweepRecord> run_design_sweep(const ExperimentConfig& cfg);

/// Design sweep plus a Monte Carlo error simulation per record;
/// deterministic given cfg.test.seed. Throws InfeasibleError when every
/// requested record was skipped.
std::vector<SweepRecord> run_error_sweep(const ExperimentConfig& cfg);

std::string emit_csv(const std::vector<SweepRecord>& records);
std::string emit_json(const std::vector<SweepRecord>& records);

/// Writes the records to the path ("-" = stdout) in the given format;
/// byte-stable for identical inputs.
void emit(const std::vector<SweepRecord>& records, OutputFormat format,
          const std::string& path);

}  // namespace hyptest
