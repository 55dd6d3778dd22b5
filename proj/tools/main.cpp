#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "repgrowth/checks.hpp"
#include "repgrowth/config.hpp"
#include "repgrowth/gaussian.hpp"
#include "repgrowth/reports.hpp"

namespace fs = std::filesystem;
using namespace repgrowth;

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_dir;
  std::string group;
  std::string rep_json;
  int nmax = 0;
};

ExperimentConfig resolve_config(const CliOptions& opt) {
  ExperimentConfig cfg =
      opt.config_path.empty() ? ExperimentConfig{} : load_config_file(opt.config_path);
  if (!opt.group.empty()) cfg.group = opt.group;
  if (!opt.rep_json.empty()) cfg.rep = parse_rep_text(opt.rep_json);
  if (opt.nmax > 0) cfg.n_max = opt.nmax;
  if (!opt.out_dir.empty()) cfg.output_dir = opt.out_dir;
  if (cfg.window) {
    const auto [lo, hi] = *cfg.window;
    if (lo < 1 || hi > cfg.n_max || lo >= hi)
      throw ConfigError("window [" + std::to_string(lo) + "," + std::to_string(hi) +
                        "] must lie inside [1, n_max] with n_lo < n_hi");
  }
  return cfg;
}

std::ofstream open_output(const ExperimentConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.output_dir);
  fs::path path = fs::path(cfg.output_dir) / name;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot write " + path.string());
  return os;
}

int cmd_growth(const ExperimentConfig& cfg) {
  const RepSpec spec = build_rep_spec(cfg);
  GrowthOptions opt;
  opt.mode = cfg.mode;
  opt.n_max = cfg.n_max;
  opt.memory_budget_bytes = cfg.memory_budget_bytes;
  const GrowthSeries series = growth_series(spec, opt);
  auto os = open_output(cfg, "series.csv");
  write_series_csv(os, series, cfg.timings);
  if (series.truncated) {
    std::cerr << "growth: memory budget reached at n=" << series.rows.back().n
              << "; series truncated\n";
    return 2;
  }
  return 0;
}

int cmd_fit(const ExperimentConfig& cfg) {
  if (!cfg.window) throw ConfigError("fit requires a window [n_lo, n_hi]");
  const auto [lo, hi] = *cfg.window;
  const RepSpec spec = build_rep_spec(cfg);
  const int u = spec.datum->u();

  std::vector<GrowthRow> rows;
  const fs::path series_path = fs::path(cfg.output_dir) / "series.csv";
  if (fs::exists(series_path)) {
    std::ifstream is(series_path);
    if (!is) throw ConfigError("cannot read " + series_path.string());
    rows = read_series_csv(is);
  } else {
    GrowthOptions opt;
    opt.mode = cfg.mode;
    opt.n_max = cfg.n_max;
    opt.memory_budget_bytes = cfg.memory_budget_bytes;
    const GrowthSeries series = growth_series(spec, opt);
    rows = series.rows;
    if (series.truncated && (rows.empty() || rows.back().n < hi)) {
      std::cerr << "fit: memory budget truncated the series before the window\n";
      return 2;
    }
  }

  const FitResult fit = fit_exponent(rows, lo, hi, -0.5 * u);
  const double tolerance = effective_fit_tolerance(cfg, u);
  auto os = open_output(cfg, "fit.json");
  write_fit_json(os, cfg.group, cfg.mode == Mode::exact ? "exact" : "normalized", fit, tolerance);
  return 0;
}

int cmd_check(const ExperimentConfig& cfg) {
  CheckReport report;
  if (cfg.character_file) {
    if (cfg.group.empty()) throw ConfigError("group is required");
    const auto datum = make_root_datum(CartanType::parse(cfg.group));
    std::ifstream in(*cfg.character_file);
    if (!in) throw ConfigError("cannot open character file '" + *cfg.character_file + "'");
    const Character chi = read_character(in, datum.get());
    report = run_character_checks(chi);
  } else {
    report = run_power_checks(build_rep_spec(cfg), cfg.n_max, cfg.seed);
  }
  auto os = open_output(cfg, "check.json");
  write_check_json(os, cfg.group, report);
  if (!report.all_pass()) {
    for (const auto& item : report.items)
      if (!item.pass) std::cerr << "check failed: " << item.name << " (" << item.witness << ")\n";
    return 3;
  }
  return 0;
}

int cmd_gauss(const ExperimentConfig& cfg) {
  const RepSpec spec = build_rep_spec(cfg);
  const MomentData md = weight_moments(spec);
  require_spanning(md);
  const auto rows = compare_report(spec, cfg.n_list, cfg.truncation);
  {
    auto os = open_output(cfg, "moments.json");
    write_moments_json(os, cfg.group, spec, md);
  }
  {
    auto os = open_output(cfg, "compare.csv");
    write_compare_csv(os, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor power decomposition growth for reductive groups"};
  app.require_subcommand(1);

  CliOptions opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "JSON experiment config");
    sub->add_option("--out", opt.out_dir, "output directory (overrides config)");
    sub->add_option("--group", opt.group, "Cartan type, e.g. A2xT1 (overrides config)");
    sub->add_option("--rep", opt.rep_json, "rep summands as JSON (overrides config)");
    sub->add_option("--nmax", opt.nmax, "n_max override");
    return sub;
  };
  CLI::App* growth = add_common(app.add_subcommand("growth", "compute the growth series"));
  CLI::App* fit = add_common(app.add_subcommand("fit", "fit the growth exponent"));
  CLI::App* check = add_common(app.add_subcommand("check", "run decomposition invariants"));
  CLI::App* gauss = add_common(app.add_subcommand("gauss", "Gaussian approximation reports"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    const ExperimentConfig cfg = resolve_config(opt);
    if (growth->parsed()) return cmd_growth(cfg);
    if (fit->parsed()) return cmd_fit(cfg);
    if (check->parsed()) return cmd_check(cfg);
    if (gauss->parsed()) return cmd_gauss(cfg);
    std::cerr << "no command given\n";
    return 1;
  } catch (const DegenerateModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
