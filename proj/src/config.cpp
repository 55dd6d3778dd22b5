#include "repgrowth/config.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"

namespace repgrowth {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

int64_t as_int(const json& j, const std::string& name) {
  if (!j.is_number_integer()) fail(name + " must be an integer");
  return j.get<int64_t>();
}

std::vector<ExperimentConfig::RepSummand> parse_rep(const json& j) {
  if (!j.is_array() || j.empty()) fail("rep must be a non-empty array of summands");
  std::vector<ExperimentConfig::RepSummand> rep;
  for (size_t k = 0; k < j.size(); ++k) {
    const std::string at = "rep[" + std::to_string(k) + "]";
    const json& s = j[k];
    if (!s.is_object()) fail(at + " must be an object");
    ExperimentConfig::RepSummand out;
    bool have_hw = false;
    for (const auto& [key, value] : s.items()) {
      if (key == "highest_weight") {
        if (!value.is_array()) fail(at + ".highest_weight must be an array of integers");
        for (const auto& c : value)
          out.highest_weight.push_back(static_cast<int32_t>(as_int(c, at + ".highest_weight[]")));
        have_hw = true;
      } else if (key == "multiplicity") {
        out.multiplicity = as_int(value, at + ".multiplicity");
      } else {
        fail(at + ": unknown key '" + key + "'");
      }
    }
    if (!have_hw) fail(at + ": highest_weight is required");
    rep.push_back(std::move(out));
  }
  return rep;
}

ExperimentConfig parse_config_json(const json& j) {
  if (!j.is_object()) fail("config root must be a JSON object");
  ExperimentConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "group") {
      if (!value.is_string()) fail("group must be a string");
      cfg.group = value.get<std::string>();
    } else if (key == "rep") {
      cfg.rep = parse_rep(value);
    } else if (key == "n_max") {
      int64_t v = as_int(value, "n_max");
      if (v < 1 || v > 1000000) fail("n_max out of range");
      cfg.n_max = static_cast<int>(v);
    } else if (key == "mode") {
      if (!value.is_string()) fail("mode must be a string");
      const std::string m = value.get<std::string>();
      if (m == "exact")
        cfg.mode = Mode::exact;
      else if (m == "normalized")
        cfg.mode = Mode::normalized;
      else
        fail("mode must be \"exact\" or \"normalized\"");
    } else if (key == "window") {
      if (!value.is_array() || value.size() != 2) fail("window must be [n_lo, n_hi]");
      cfg.window = {static_cast<int>(as_int(value[0], "window[0]")),
                    static_cast<int>(as_int(value[1], "window[1]"))};
    } else if (key == "output_dir") {
      if (!value.is_string()) fail("output_dir must be a string");
      cfg.output_dir = value.get<std::string>();
    } else if (key == "memory_budget_bytes") {
      int64_t v = as_int(value, "memory_budget_bytes");
      if (v < 1) fail("memory_budget_bytes must be positive");
      cfg.memory_budget_bytes = static_cast<uint64_t>(v);
    } else if (key == "truncation") {
      if (!value.is_number()) fail("truncation must be a number");
      cfg.truncation = value.get<double>();
      if (!(cfg.truncation > 0)) fail("truncation must be positive");
    } else if (key == "fit_tolerance") {
      if (!value.is_number()) fail("fit_tolerance must be a number");
      cfg.fit_tolerance = value.get<double>();
      if (!(*cfg.fit_tolerance > 0)) fail("fit_tolerance must be positive");
    } else if (key == "seed") {
      cfg.seed = static_cast<uint64_t>(as_int(value, "seed"));
    } else if (key == "n_list") {
      if (!value.is_array()) fail("n_list must be an array of integers");
      cfg.n_list.clear();
      for (const auto& c : value) {
        int64_t v = as_int(c, "n_list[]");
        if (v < 1) fail("n_list entries must be >= 1");
        cfg.n_list.push_back(static_cast<int>(v));
      }
    } else if (key == "timings") {
      if (!value.is_boolean()) fail("timings must be a boolean");
      cfg.timings = value.get<bool>();
    } else if (key == "character_file") {
      if (!value.is_string()) fail("character_file must be a string");
      cfg.character_file = value.get<std::string>();
    } else {
      fail("unknown config key '" + key + "'");
    }
  }
  return cfg;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config_json(j);
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config_text(text);
}

std::vector<ExperimentConfig::RepSummand> parse_rep_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("--rep is not valid JSON: ") + e.what());
  }
  return parse_rep(j);
}

RepSpec build_rep_spec(const ExperimentConfig& config) {
  if (config.group.empty()) fail("group is required");
  if (config.rep.empty()) fail("rep is required");
  auto datum = make_root_datum(CartanType::parse(config.group));
  std::vector<Summand> summands;
  summands.reserve(config.rep.size());
  for (size_t k = 0; k < config.rep.size(); ++k) {
    const auto& s = config.rep[k];
    if (static_cast<int>(s.highest_weight.size()) != datum->rank())
      fail("rep[" + std::to_string(k) + "].highest_weight: expected " +
           std::to_string(datum->rank()) + " coordinates for group " + datum->type().str() +
           ", got " + std::to_string(s.highest_weight.size()));
    summands.push_back({Weight(s.highest_weight), s.multiplicity});
  }
  return RepSpec(std::move(datum), std::move(summands));
}

double effective_fit_tolerance(const ExperimentConfig& config, int u) {
  if (config.fit_tolerance) return *config.fit_tolerance;
  return 0.1 * std::max(1, u);
}

}  // namespace repgrowth
