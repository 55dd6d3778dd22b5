#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repgrowth/tensor_growth.hpp"

namespace repgrowth {

/// Experiment description, normally loaded from a JSON file.  Unknown
/// keys are rejected so typos cannot silently fall back to defaults.
struct ExperimentConfig {
  struct RepSummand {
    std::vector<int32_t> highest_weight;
    int64_t multiplicity = 1;
  };

  std::string group;
  std::vector<RepSummand> rep;
  int n_max = 10;
  Mode mode = Mode::exact;
  std::optional<std::pair<int, int>> window;
  std::string output_dir = "out";
  uint64_t memory_budget_bytes = uint64_t{8} << 30;
  double truncation = 40.0;
  std::optional<double> fit_tolerance;
  uint64_t seed = 0;
  std::vector<int> n_list = {100, 200, 400};
  bool timings = false;
  std::optional<std::string> character_file;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

/// Parses a CLI --rep override: a JSON array in the config "rep" syntax.
std::vector<ExperimentConfig::RepSummand> parse_rep_text(const std::string& text);

/// Builds the root datum and representation from config.group/config.rep.
RepSpec build_rep_spec(const ExperimentConfig& config);

/// Effective fit tolerance: explicit value, or 0.1 * max(1, u).
double effective_fit_tolerance(const ExperimentConfig& config, int u);

}  // namespace repgrowth
