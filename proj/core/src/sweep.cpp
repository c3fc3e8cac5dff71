#include "hyptest/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "hyptest/design.hpp"
#include "hyptest/json_io.hpp"

namespace hyptest {

std::string to_string(Method m) {
  switch (m) {
    case Method::identity: return "identity";
    case Method::greedy: return "greedy";
    case Method::optimal: return "optimal";
    case Method::universal: return "universal";
  }
  throw std::invalid_argument("unknown method");
}

Method method_from_string(const std::string& name) {
  if (name == "identity") return Method::identity;
  if (name == "greedy") return Method::greedy;
  if (name == "optimal") return Method::optimal;
  if (name == "universal") return Method::universal;
  throw std::invalid_argument("unknown method \"" + name +
                              "\" (expected identity, greedy, optimal or universal)");
}

std::string to_string(OutputFormat f) {
  return f == OutputFormat::csv ? "csv" : "json";
}

OutputFormat format_from_string(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format \"" + name + "\" (expected csv or json)");
}

HypothesisPair resolve_source(const ExperimentConfig& cfg) {
  if (cfg.binomial.has_value() == cfg.dist_file.has_value()) {
    throw std::invalid_argument(
        "experiment config: exactly one of the binomial parameters and a "
        "distribution-pair file must be given");
  }
  if (cfg.binomial) {
    const auto& b = *cfg.binomial;
    return HypothesisPair(binomial_source({b.alphabet_size, b.s0}),
                          binomial_source({b.alphabet_size, b.s1}));
  }
  return load_distribution_pair(*cfg.dist_file);
}

namespace {

void validate_sweep(const ExperimentConfig& cfg, const HypothesisPair& h) {
  if (cfg.methods.empty()) {
    throw std::invalid_argument("experiment config: methods must be non-empty");
  }
  if (cfg.rates.empty()) {
    throw std::invalid_argument("experiment config: rates must be non-empty");
  }
  for (std::size_t m : cfg.rates) {
    if (m < 2 || m > h.alphabet_size()) {
      throw std::invalid_argument("experiment config: rate M=" + std::to_string(m) +
                                  " outside [2, |X|=" + std::to_string(h.alphabet_size()) + "]");
    }
  }
}

std::vector<Method> sorted_methods(const ExperimentConfig& cfg) {
  std::vector<Method> methods = cfg.methods;
  std::sort(methods.begin(), methods.end(), [](Method a, Method b) {
    return to_string(a) < to_string(b);
  });
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
  return methods;
}

std::optional<Compressor> build_compressor(const HypothesisPair& h, Method method,
                                           std::size_t rate, double budget,
                                           std::string* skip_reason) {
  switch (method) {
    case Method::identity:
      return Compressor::identity(h.alphabet_size());
    case Method::greedy:
      return greedy_compress(h, rate);
    case Method::universal:
      return universal_compress(h, rate);
    case Method::optimal:
      try {
        return optimal_compress(h, rate, budget);
      } catch (const BudgetError& e) {
        *skip_reason = std::string("budget: ") + e.what();
        return std::nullopt;
      }
  }
  throw std::invalid_argument("unknown method");
}

std::vector<SweepRecord> run_sweep(const ExperimentConfig& cfg, bool simulate) {
  const HypothesisPair h = resolve_source(cfg);
  validate_sweep(cfg, h);
  if (simulate) cfg.test.validate();
  std::vector<std::size_t> rates = cfg.rates;
  std::sort(rates.begin(), rates.end());
  rates.erase(std::unique(rates.begin(), rates.end()), rates.end());

  std::vector<SweepRecord> records;
  for (Method method : sorted_methods(cfg)) {
    for (std::size_t rate : rates) {
      SweepRecord rec;
      rec.method = method;
      rec.rate_symbols = rate;
      rec.rate_bits = std::log2(static_cast<double>(rate));
      std::string skip_reason;
      const std::optional<Compressor> c =
          build_compressor(h, method, rate, cfg.optimal_budget, &skip_reason);
      if (!c) {
        rec.skipped = skip_reason;
        std::cerr << "hyptest: skipping " << to_string(method) << " at M=" << rate
                  << " (" << skip_reason << ")\n";
        records.push_back(std::move(rec));
        continue;
      }
      const DesignReport report = make_design_report(h, *c);
      rec.exponent_bits = report.exponent_bits;
      rec.penalty_bits = report.penalty_bits;
      if (simulate) {
        const TestResult r = simulate_errors(h, *c, cfg.test, cfg.threads);
        rec.type1_rate = r.type1_rate;
        rec.type2_rate = r.type2_rate;
        rec.exact_zero = r.exact_zero;
        rec.seed = r.seed;
      }
      records.push_back(std::move(rec));
    }
  }
  if (std::all_of(records.begin(), records.end(),
                  [](const SweepRecord& r) { return r.skipped.has_value(); })) {
    throw InfeasibleError("every requested (method, M) record was skipped");
  }
  return records;
}

std::string csv_cell(const std::optional<double>& v) {
  return v ? format_g12(*v) : std::string();
}

}  // namespace

std::vector<SweepRecord> run_design_sweep(const ExperimentConfig& cfg) {
  return run_sweep(cfg, false);
}

std::vector<SweepRecord> run_error_sweep(const ExperimentConfig& cfg) {
  return run_sweep(cfg, true);
}

std::string emit_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream os;
  os << "method,M,rate_bits,exponent_bits,penalty_bits,type1_rate,type2_rate,"
        "exact_zero,seed\n";
  for (const SweepRecord& r : records) {
    os << to_string(r.method) << ',' << r.rate_symbols << ',' << format_g12(r.rate_bits)
       << ',' << csv_cell(r.exponent_bits) << ',' << csv_cell(r.penalty_bits) << ','
       << csv_cell(r.type1_rate) << ',' << csv_cell(r.type2_rate) << ',';
    if (r.exact_zero) os << (*r.exact_zero ? "true" : "false");
    os << ',';
    if (r.seed) os << *r.seed;
    os << '\n';
  }
  return os.str();
}

std::string emit_json(const std::vector<SweepRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRecord& r : records) {
    nlohmann::json j;
    j["method"] = to_string(r.method);
    j["M"] = r.rate_symbols;
    j["rate_bits"] = round_g12(r.rate_bits);
    if (r.exponent_bits) j["exponent_bits"] = round_g12(*r.exponent_bits);
    if (r.penalty_bits) j["penalty_bits"] = round_g12(*r.penalty_bits);
    if (r.type1_rate) j["type1_rate"] = round_g12(*r.type1_rate);
    if (r.type2_rate) j["type2_rate"] = round_g12(*r.type2_rate);
    if (r.exact_zero) j["exact_zero"] = *r.exact_zero;
    if (r.seed) j["seed"] = *r.seed;
    if (r.skipped) j["skipped"] = *r.skipped;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

void emit(const std::vector<SweepRecord>& records, OutputFormat format,
          const std::string& path) {
  const std::string text =
      format == OutputFormat::csv ? emit_csv(records) : emit_json(records);
  if (path == "-") {
    std::cout << text;
    if (!std::cout) throw IoError("failed to write records to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << text;
  if (!out) throw IoError("failed while writing output file: " + path);
}

}  // namespace hyptest
