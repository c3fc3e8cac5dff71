#include "hyptest/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hyptest {

namespace {

using nlohmann::json;

json number_g12(double v) { return json(round_g12(v)); }

std::vector<double> read_prob_array(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw std::invalid_argument(std::string("distribution pair: missing array \"") + key + '"');
  }
  return j.at(key).get<std::vector<double>>();
}

}  // namespace

std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round_g12(double v) { return std::stod(format_g12(v)); }

HypothesisPair parse_distribution_pair(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("distribution pair: ") + e.what());
  }
  auto p0 = read_prob_array(j, "p0");
  auto p1 = read_prob_array(j, "p1");
  return HypothesisPair(Distribution(std::move(p0)), Distribution(std::move(p1)));
}

HypothesisPair load_distribution_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open distribution-pair file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_distribution_pair(buf.str());
}

std::string distribution_pair_json(const HypothesisPair& h) {
  json j;
  j["p0"] = json::array();
  j["p1"] = json::array();
  for (std::size_t x = 0; x < h.alphabet_size(); ++x) {
    j["p0"].push_back(number_g12(h.p0()[x]));
    j["p1"].push_back(number_g12(h.p1()[x]));
  }
  return j.dump();
}

std::string compressor_json(const Compressor& c) {
  json groups = json::array();
  for (const auto& g : c.groups()) {
    json letters = json::array();
    for (std::size_t x : g) letters.push_back(x + 1);
    groups.push_back(std::move(letters));
  }
  json j;
  j["groups"] = std::move(groups);
  j["source_size"] = c.source_size();
  return j.dump();
}

Compressor parse_compressor(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("compressor: ") + e.what());
  }
  const std::size_t source_size = j.at("source_size").get<std::size_t>();
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& g : j.at("groups")) {
    std::vector<std::size_t> letters;
    for (const auto& x : g) {
      const std::size_t letter = x.get<std::size_t>();
      if (letter == 0) throw std::invalid_argument("compressor: letters are 1-based");
      letters.push_back(letter - 1);
    }
    groups.push_back(std::move(letters));
  }
  return Compressor(source_size, std::move(groups));
}

std::string design_report_json(const DesignReport& report) {
  json j;
  j["compressor"] = json::parse(compressor_json(report.compressor));
  j["p0_hat"] = json::array();
  j["p1_hat"] = json::array();
  for (std::size_t m = 0; m < report.p0_hat.size(); ++m) {
    j["p0_hat"].push_back(number_g12(report.p0_hat[m]));
    j["p1_hat"].push_back(number_g12(report.p1_hat[m]));
  }
  j["exponent_bits"] = number_g12(report.exponent_bits);
  j["penalty_bits"] = number_g12(report.penalty_bits);
  j["source_kl_bits"] = number_g12(report.source_kl_bits);
  return j.dump(2);
}

std::string test_result_json(const TestResult& result) {
  json j;
  j["threshold_log_t"] = number_g12(result.threshold_log_t);
  j["type1_rate"] = number_g12(result.type1_rate);
  j["type2_rate"] = number_g12(result.type2_rate);
  j["type2_exponent_bits"] = number_g12(result.type2_exponent_bits);
  j["exact_zero"] = result.exact_zero;
  j["trials"] = result.trials;
  j["seed"] = result.seed;
  return j.dump();
}

std::string experiment_config_json(const ExperimentConfig& cfg) {
  json j;
  if (cfg.binomial) {
    j["binomial"] = {{"alphabet_size", cfg.binomial->alphabet_size},
                     {"s0", cfg.binomial->s0},
                     {"s1", cfg.binomial->s1}};
  }
  if (cfg.dist_file) j["dist_file"] = *cfg.dist_file;
  j["methods"] = json::array();
  for (Method m : cfg.methods) j["methods"].push_back(to_string(m));
  j["rates"] = cfg.rates;
  j["test"] = {{"blocklength", cfg.test.blocklength},
               {"epsilon", cfg.test.epsilon},
               {"trials_per_hypothesis", cfg.test.trials_per_hypothesis},
               {"seed", cfg.test.seed}};
  j["format"] = to_string(cfg.format);
  j["out_path"] = cfg.out_path;
  j["optimal_budget"] = cfg.optimal_budget;
  j["threads"] = cfg.threads;
  return j.dump(2);
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("experiment config: ") + e.what());
  }
  ExperimentConfig cfg;
  if (j.contains("binomial")) {
    const auto& b = j.at("binomial");
    cfg.binomial = BinomialPairSpec{b.at("alphabet_size").get<std::size_t>(),
                                    b.at("s0").get<double>(), b.at("s1").get<double>()};
  }
  if (j.contains("dist_file")) cfg.dist_file = j.at("dist_file").get<std::string>();
  for (const auto& m : j.at("methods")) {
    cfg.methods.push_back(method_from_string(m.get<std::string>()));
  }
  cfg.rates = j.at("rates").get<std::vector<std::size_t>>();
  const auto& t = j.at("test");
  cfg.test.blocklength = t.at("blocklength").get<std::size_t>();
  cfg.test.epsilon = t.at("epsilon").get<double>();
  cfg.test.trials_per_hypothesis = t.at("trials_per_hypothesis").get<std::size_t>();
  cfg.test.seed = t.at("seed").get<std::uint64_t>();
  cfg.format = format_from_string(j.at("format").get<std::string>());
  cfg.out_path = j.at("out_path").get<std::string>();
  cfg.optimal_budget = j.at("optimal_budget").get<double>();
  cfg.threads = j.at("threads").get<unsigned>();
  return cfg;
}

}  // namespace hyptest
