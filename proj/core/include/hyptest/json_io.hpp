#pragma once

#include <string>

#include "hyptest/compressor.hpp"
#include "hyptest/distribution.hpp"
#include "hyptest/simulate.hpp"
#include "hyptest/sweep.hpp"

namespace hyptest {

/// 12 significant digits, locale-independent ("%.12g").
std::string format_g12(double v);

/// The double nearest to format_g12(v), used where serialized numbers must
/// match their in-memory counterparts.
double round_g12(double v);

/// Distribution-pair file: {"p0": [...], "p1": [...]}, equal-length arrays.
HypothesisPair parse_distribution_pair(const std::string& json_text);
HypothesisPair load_distribution_pair(const std::string& path);
std::string distribution_pair_json(const HypothesisPair& h);

/// Compressor form: {"groups": [[1,2],[3]], "source_size": 3} with 1-based
/// letters in canonical order.
std::string compressor_json(const Compressor& c);
Compressor parse_compressor(const std::string& json_text);

std::string design_report_json(const DesignReport& report);
std::string test_result_json(const TestResult& result);

std::string experiment_config_json(const ExperimentConfig& cfg);
ExperimentConfig parse_experiment_config(const std::string& json_text);

}  // namespace hyptest
