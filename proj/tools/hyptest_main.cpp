// Command-line experiment runner: designs compressors for a sweep of rates,
// optionally simulates the receiver-side test, and emits CSV/JSON plot data.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyptest/design.hpp"
#include "hyptest/json_io.hpp"
#include "hyptest/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitInfeasible = 3;

struct CliOptions {
  std::size_t alphabet_size = 0;
  double s0 = -1.0;
  double s1 = -1.0;
  std::string dist_file;
  std::vector<std::string> methods;
  std::string rates;
  std::size_t blocklength = 5;
  double epsilon = 0.05;
  std::size_t trials = 1000000;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out = "-";
  double optimal_budget = 1e8;
  unsigned threads = 0;
};

void add_common_options(CLI::App* cmd, CliOptions* opt, bool with_test_options) {
  cmd->add_option("--alphabet-size", opt->alphabet_size,
                  "Source alphabet size for the binomial pair");
  cmd->add_option("--s0", opt->s0, "Binomial success parameter under the null hypothesis");
  cmd->add_option("--s1", opt->s1, "Binomial success parameter under the alternative");
  cmd->add_option("--dist-file", opt->dist_file,
                  "JSON file with {\"p0\": [...], \"p1\": [...]} instead of a binomial pair");
  cmd->add_option("--methods", opt->methods,
                  "Comma list of identity, greedy, optimal, universal")
      ->delimiter(',');
  cmd->add_option("--rates", opt->rates,
                  "Rates M as a comma list (2,4,8) or inclusive range (2:12)");
  cmd->add_option("--format", opt->format, "Output format: csv or json");
  cmd->add_option("--out", opt->out, "Output path, - for stdout");
  cmd->add_option("--optimal-budget", opt->optimal_budget,
                  "Partition-count cap for the exhaustive method");
  cmd->add_option("--threads", opt->threads, "Worker threads, 0 = hardware");
  if (with_test_options) {
    cmd->add_option("--blocklength", opt->blocklength, "Samples per test block (n)");
    cmd->add_option("--epsilon", opt->epsilon, "Type-I error bound");
    cmd->add_option("--trials", opt->trials, "Monte Carlo blocks per hypothesis");
    cmd->add_option("--seed", opt->seed, "RNG seed");
  }
}

std::vector<std::size_t> parse_rates(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("--rates is required");
  std::vector<std::size_t> rates;
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::size_t lo = std::stoul(text.substr(0, colon));
    const std::size_t hi = std::stoul(text.substr(colon + 1));
    if (lo > hi) throw std::invalid_argument("--rates range is empty: " + text);
    for (std::size_t m = lo; m <= hi; ++m) rates.push_back(m);
    return rates;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty()) throw std::invalid_argument("--rates has an empty entry: " + text);
    rates.push_back(std::stoul(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return rates;
}

hyptest::ExperimentConfig make_config(const CliOptions& opt,
                                      const std::vector<std::string>& default_methods) {
  hyptest::ExperimentConfig cfg;
  const bool has_binomial = opt.alphabet_size != 0 || opt.s0 >= 0.0 || opt.s1 >= 0.0;
  if (has_binomial && !opt.dist_file.empty()) {
    throw std::invalid_argument("give either binomial parameters or --dist-file, not both");
  }
  if (!opt.dist_file.empty()) {
    cfg.dist_file = opt.dist_file;
  } else {
    if (opt.alphabet_size == 0 || opt.s0 < 0.0 || opt.s1 < 0.0) {
      throw std::invalid_argument(
          "a source is required: --alphabet-size with --s0 and --s1, or --dist-file");
    }
    cfg.binomial = hyptest::BinomialPairSpec{opt.alphabet_size, opt.s0, opt.s1};
  }
  const std::vector<std::string>& method_names =
      opt.methods.empty() ? default_methods : opt.methods;
  for (const std::string& name : method_names) {
    cfg.methods.push_back(hyptest::method_from_string(name));
  }
  cfg.rates = parse_rates(opt.rates);
  cfg.test.blocklength = opt.blocklength;
  cfg.test.epsilon = opt.epsilon;
  cfg.test.trials_per_hypothesis = opt.trials;
  cfg.test.seed = opt.seed;
  cfg.format = hyptest::format_from_string(opt.format);
  cfg.out_path = opt.out;
  cfg.optimal_budget = opt.optimal_budget;
  cfg.threads = opt.threads;
  return cfg;
}

void show_compressor(const CliOptions& opt) {
  hyptest::ExperimentConfig cfg = make_config(opt, {"greedy"});
  if (cfg.methods.size() != 1 || cfg.rates.size() != 1) {
    throw std::invalid_argument("show-compressor takes exactly one method and one rate");
  }
  const hyptest::HypothesisPair h = hyptest::resolve_source(cfg);
  const std::size_t rate = cfg.rates.front();
  if (rate < 2 || rate > h.alphabet_size()) {
    throw std::invalid_argument("rate M must lie in [2, |X|]");
  }
  hyptest::Compressor c = hyptest::Compressor::identity(h.alphabet_size());
  switch (cfg.methods.front()) {
    case hyptest::Method::identity: break;
    case hyptest::Method::greedy: c = hyptest::greedy_compress(h, rate); break;
    case hyptest::Method::optimal: c = hyptest::optimal_compress(h, rate, cfg.optimal_budget); break;
    case hyptest::Method::universal: c = hyptest::universal_compress(h, rate); break;
  }
  const hyptest::DesignReport report = hyptest::make_design_report(h, c);
  if (cfg.format == hyptest::OutputFormat::json) {
    std::cout << hyptest::design_report_json(report) << "\n";
    return;
  }
  std::cout << "method " << to_string(cfg.methods.front()) << ", |X| = "
            << h.alphabet_size() << ", M = " << c.rate_symbols() << "\n";
  for (std::size_t m = 0; m < c.rate_symbols(); ++m) {
    std::cout << "  symbol " << (m + 1) << " <- letters {";
    const auto& g = c.groups()[m];
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::cout << (i ? "," : "") << (g[i] + 1);
    }
    std::cout << "}  p0_hat = " << hyptest::format_g12(report.p0_hat[m])
              << "  p1_hat = " << hyptest::format_g12(report.p1_hat[m]) << "\n";
  }
  std::cout << "exponent_bits = " << hyptest::format_g12(report.exponent_bits)
            << "\npenalty_bits = " << hyptest::format_g12(report.penalty_bits)
            << "\nsource_kl_bits = " << hyptest::format_g12(report.source_kl_bits) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design and evaluate single-shot compressors for remote binary "
               "hypothesis testing"};
  app.require_subcommand(1);

  CliOptions design_opt, simulate_opt, show_opt;
  CLI::App* design = app.add_subcommand(
      "design", "Analytic sweep: exponent and penalty per (method, M)");
  add_common_options(design, &design_opt, false);
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Design sweep plus Monte Carlo type-I/type-II error estimation");
  add_common_options(simulate, &simulate_opt, true);
  CLI::App* show = app.add_subcommand(
      "show-compressor", "Print one compressor's groups and compressed distributions");
  add_common_options(show, &show_opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (design->parsed()) {
      const auto cfg = make_config(design_opt, {"identity", "greedy", "universal"});
      hyptest::emit(hyptest::run_design_sweep(cfg), cfg.format, cfg.out_path);
    } else if (simulate->parsed()) {
      const auto cfg = make_config(simulate_opt, {"identity", "greedy", "universal"});
      hyptest::emit(hyptest::run_error_sweep(cfg), cfg.format, cfg.out_path);
    } else {
      show_compressor(show_opt);
    }
  } catch (const hyptest::InfeasibleError& e) {
    std::cerr << "hyptest: infeasible request: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const hyptest::IoError& e) {
    std::cerr << "hyptest: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const hyptest::BudgetError& e) {
    std::cerr << "hyptest: infeasible request: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "hyptest: config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
