// Command-line front end: simulate paths, run the pure-jump test on files,
// sweep the argument grid, and drive Monte Carlo size/power studies.
//
// Exit codes: 0 = completed without rejecting, 2 = usage error,
// 3 = test ran and rejected the no-diffusion null, 4 = numeric/data failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcf/ingest.hpp"
#include "rcf/io.hpp"
#include "rcf/jump_test.hpp"
#include "rcf/montecarlo.hpp"
#include "rcf/simulate.hpp"
#include "rcf/version.hpp"

namespace {

constexpr double kReferenceLevel = -1.645;  // one-sided 5% normal quantile

struct TickOptions {
  std::vector<std::string> files;
  std::string interval = "20s";
  double session_hours = 6.5;
  std::string session_open = "09:30:00";
  int time_col = -1;
  int price_col = -1;
  bool no_header = false;
};

double parse_interval_seconds(const std::string& text) {
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  std::string suffix = text.substr(used);
  if (suffix.empty() || suffix == "s" || suffix == "sec") return value;
  if (suffix == "m" || suffix == "min") return 60.0 * value;
  throw std::invalid_argument("cannot parse interval '" + text +
                              "' (use e.g. 20s or 1m)");
}

double parse_clock_seconds(const std::string& text) {
  int h = 0, m = 0, s = 0;
  if (std::sscanf(text.c_str(), "%d:%d:%d", &h, &m, &s) != 3) {
    throw std::invalid_argument("cannot parse clock time '" + text + "'");
  }
  return 3600.0 * h + 60.0 * m + s;
}

rcf::PricePath load_tick_file(const std::string& file,
                              const TickOptions& opts) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open " + file);
  rcf::TickSchema schema;
  schema.time_column = opts.time_col;
  schema.price_column = opts.price_col;
  schema.has_header = !opts.no_header;
  schema.session_open = parse_clock_seconds(opts.session_open);
  const rcf::TickParseResult parsed = rcf::parse_ticks_csv(in, schema);
  if (parsed.out_of_order > 0) {
    std::cerr << file << ": " << parsed.out_of_order
              << " out-of-order rows (sorted)\n";
  }
  rcf::SamplingRule rule;
  rule.interval_seconds = parse_interval_seconds(opts.interval);
  rule.session_seconds = opts.session_hours * 3600.0;
  return rcf::resample(parsed.records, rule);
}

// Loads either a ready path file or tick files; multiple tick files become
// one path per file unless concatenated end-to-end.
std::vector<rcf::PricePath> load_inputs(const std::string& path_file,
                                        const TickOptions& ticks,
                                        bool concat) {
  std::vector<rcf::PricePath> paths;
  if (!path_file.empty()) {
    std::ifstream in(path_file);
    if (!in) throw std::invalid_argument("cannot open " + path_file);
    paths.push_back(rcf::read_path_csv(in));
    return paths;
  }
  for (const std::string& file : ticks.files) {
    paths.push_back(load_tick_file(file, ticks));
  }
  if (concat && paths.size() > 1) {
    // Day paths joined end-to-end; each overnight gap becomes one increment.
    std::vector<double> values = paths.front().values;
    double t_end = paths.front().t_end;
    for (std::size_t d = 1; d < paths.size(); ++d) {
      values.insert(values.end(), paths[d].values.begin(),
                    paths[d].values.end());
      t_end += paths[d].t_end;
    }
    paths.clear();
    paths.push_back(rcf::make_path(t_end, std::move(values)));
  }
  return paths;
}

void write_file(const std::string& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + file + " for writing");
  out << content;
}

void write_manifest(const std::string& out_file, nlohmann::ordered_json doc) {
  doc["tool"] = "rcf";
  doc["version"] = rcf::version;
  write_file(out_file + ".manifest.json", doc.dump(2) + "\n");
}

std::string with_day_suffix(const std::string& file, std::size_t day) {
  const auto dot = file.rfind('.');
  const std::string suffix = ".day" + std::to_string(day);
  if (dot == std::string::npos || dot == 0) return file + suffix;
  return file.substr(0, dot) + suffix + file.substr(dot);
}

rcf::McScenario load_scenario(const std::string& config_file) {
  if (config_file.empty()) return rcf::McScenario{};
  std::ifstream in(config_file);
  if (!in) throw std::invalid_argument("cannot open " + config_file);
  return rcf::parse_scenario_config(in);
}

int cmd_simulate(const std::string& config_file,
                 std::optional<std::uint64_t> seed, std::optional<std::size_t> n,
                 std::optional<double> beta,
                 const std::string& scenario_name, const std::string& out) {
  rcf::McScenario scenario = load_scenario(config_file);
  if (seed) scenario.master_seed = *seed;
  if (n) scenario.sim.n = *n;
  if (beta) scenario.sim.beta = *beta;
  if (!scenario_name.empty()) {
    scenario.sim.scenario = rcf::scenario_from_string(scenario_name);
  }
  const rcf::PricePath path =
      rcf::generate_path(scenario.sim, rcf::Seed{scenario.master_seed, 0});
  std::ostringstream body;
  rcf::write_path_csv(path, body);
  write_file(out, body.str());

  nlohmann::ordered_json manifest;
  manifest["command"] = "simulate";
  manifest["seed"] = scenario.master_seed;
  manifest["config"] = rcf::scenario_config_kv(scenario);
  write_manifest(out, std::move(manifest));
  return 0;
}

int cmd_test(const std::string& path_file, const TickOptions& ticks,
             std::size_t k_n, double c, double c_star, double alpha,
             bool as_json, const std::string& out) {
  const std::vector<rcf::PricePath> paths = load_inputs(path_file, ticks, true);
  const rcf::PricePath& path = paths.front();
  rcf::TuningInputs inputs;
  inputs.k_n = k_n;
  inputs.c = c;
  inputs.c_star = c_star;
  inputs.alpha = alpha;
  const rcf::TestResult result =
      rcf::run_test(path, rcf::auto_tuning(path, inputs));

  const std::string text =
      as_json ? rcf::test_result_json(result) + "\n"
              : rcf::test_result_csv_header() + "\n" +
                    rcf::test_result_csv_row(result) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
    nlohmann::ordered_json manifest;
    manifest["command"] = "test";
    manifest["k_n"] = result.tuning.k_n;
    manifest["u_n"] = result.tuning.u_n;
    manifest["gamma_n"] = result.tuning.gamma_n;
    manifest["alpha"] = result.tuning.alpha;
    write_manifest(out, std::move(manifest));
  }
  return result.reject ? 3 : 0;
}

int cmd_scan(const std::string& path_file, const TickOptions& ticks,
             bool concat, const std::string& grid_spec, std::size_t k_n,
             double c_star, const std::string& out) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  if (std::sscanf(grid_spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3) {
    throw std::invalid_argument("cannot parse grid '" + grid_spec +
                                "' (use lo:hi:step)");
  }
  const std::vector<double> grid = rcf::scan_grid(lo, hi, step);
  const std::vector<rcf::PricePath> paths =
      load_inputs(path_file, ticks, concat);

  std::vector<std::string> outputs;
  for (std::size_t day = 0; day < paths.size(); ++day) {
    const std::string file =
        (paths.size() == 1) ? out : with_day_suffix(out, day);
    const std::size_t used_k_n =
        (k_n != 0) ? k_n : rcf::default_k_n(paths[day].n());
    const std::vector<rcf::ScanPoint> points =
        rcf::u_scan(paths[day], used_k_n, c_star, grid);
    write_file(file, rcf::scan_csv(points));

    nlohmann::ordered_json manifest;
    manifest["command"] = "scan";
    manifest["grid"] = grid_spec;
    manifest["k_n"] = used_k_n;
    manifest["c_star"] = c_star;
    manifest["reference_level"] = kReferenceLevel;
    write_manifest(file, std::move(manifest));
    outputs.push_back(file);
  }
  for (const std::string& file : outputs) std::cerr << "wrote " << file << "\n";
  return 0;
}

int cmd_mc(const std::string& config_file, std::optional<std::size_t> reps,
           std::optional<std::uint64_t> seed, std::size_t threads,
           const std::string& out) {
  std::ifstream in(config_file);
  if (!in) throw std::invalid_argument("cannot open " + config_file);
  rcf::TableSpec spec = rcf::parse_table_config(in);
  if (reps) spec.reps = *reps;
  if (seed) spec.master_seed = *seed;

  const rcf::SizePowerTable table =
      rcf::size_power_table(spec.base, spec.betas, spec.cells, spec.reps,
                            spec.master_seed, spec.alpha, threads);
  write_file(out, rcf::size_power_csv(table));

  nlohmann::ordered_json manifest;
  manifest["command"] = "mc";
  manifest["seed"] = spec.master_seed;
  manifest["reps"] = spec.reps;
  manifest["alpha"] = spec.alpha;
  manifest["betas"] = spec.betas;
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const rcf::TableCell& cell : spec.cells) {
    cells.push_back({{"n", cell.n},
                     {"k_n", cell.k_n},
                     {"c", cell.c},
                     {"c_star", cell.c_star}});
  }
  manifest["cells"] = cells;
  write_manifest(out, std::move(manifest));
  return 0;
}

int cmd_qq(const std::string& config_file, std::optional<std::size_t> reps,
           std::optional<std::uint64_t> seed, std::size_t threads,
           const std::string& out) {
  rcf::McScenario scenario = load_scenario(config_file);
  if (reps) scenario.reps = *reps;
  if (seed) scenario.master_seed = *seed;

  const rcf::McSummary summary = rcf::run_scenario(scenario, threads);
  const std::vector<rcf::QqPoint> points = rcf::qq_export(summary.statistics);
  write_file(out, rcf::qq_csv(points));

  nlohmann::ordered_json manifest;
  manifest["command"] = "qq";
  manifest["seed"] = scenario.master_seed;
  manifest["reps"] = scenario.reps;
  manifest["valid_reps"] = summary.valid_reps;
  manifest["failures"] = summary.failures.size();
  manifest["qq_correlation"] = rcf::qq_correlation(points);
  manifest["config"] = rcf::scenario_config_kv(scenario);
  write_manifest(out, std::move(manifest));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realized characteristic function test for a Brownian "
               "component in high-frequency prices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rcf::version);

  // --- simulate ---
  auto* sim = app.add_subcommand("simulate", "Generate one path to CSV");
  std::string sim_config, sim_scenario, sim_out;
  std::optional<std::uint64_t> sim_seed;
  std::optional<std::size_t> sim_n;
  std::optional<double> sim_beta;
  sim->add_option("--config", sim_config, "key=value simulation config");
  sim->add_option("--seed", sim_seed, "master seed (stream 0)");
  sim->add_option("--n", sim_n, "override sample count");
  sim->add_option("--beta", sim_beta, "override stability index");
  sim->add_option("--scenario", sim_scenario,
                  "H0_PARTIAL | H0_FULL | H1 | CONST_VOL");
  sim->add_option("--out", sim_out, "output path CSV")->required();

  // --- shared input options for test/scan ---
  auto add_input_options = [](CLI::App* cmd, std::string& path_file,
                              TickOptions& ticks) {
    cmd->add_option("--path", path_file, "path CSV (header t,x)");
    cmd->add_option("--ticks", ticks.files, "tick CSV (repeatable)");
    cmd->add_option("--interval", ticks.interval,
                    "resampling interval, e.g. 20s or 1m");
    cmd->add_option("--session-hours", ticks.session_hours,
                    "session length in hours");
    cmd->add_option("--session-open", ticks.session_open,
                    "session open clock time for HH:MM:SS stamps");
    cmd->add_option("--time-col", ticks.time_col, "0-based time column");
    cmd->add_option("--price-col", ticks.price_col, "0-based price column");
    cmd->add_flag("--no-header", ticks.no_header, "tick CSV has no header");
  };

  // --- test ---
  auto* test = app.add_subcommand("test", "Run the pure-jump test");
  std::string test_path, test_out;
  TickOptions test_ticks;
  std::size_t test_k_n = 0;
  double test_c = 0.18, test_c_star = 0.2, test_alpha = 0.05;
  bool test_json = false;
  add_input_options(test, test_path, test_ticks);
  test->add_option("--k-n", test_k_n, "block half-width (0 = auto)");
  test->add_option("--c", test_c, "argument scale constant");
  test->add_option("--c-star", test_c_star, "drift compensation constant");
  test->add_option("--alpha", test_alpha, "test level");
  test->add_flag("--json", test_json, "emit JSON instead of CSV");
  test->add_option("--out", test_out, "write the record here (default stdout)");

  // --- scan ---
  auto* scan = app.add_subcommand("scan", "Statistic across an argument grid");
  std::string scan_path, scan_out, scan_grid_spec = "0.01:1.0:0.01";
  TickOptions scan_ticks;
  std::size_t scan_k_n = 0;
  double scan_c_star = 0.2;
  bool scan_concat = false;
  add_input_options(scan, scan_path, scan_ticks);
  scan->add_option("--grid", scan_grid_spec, "lo:hi:step (default 0.01:1.0:0.01)");
  scan->add_option("--k-n", scan_k_n, "block half-width (0 = auto)");
  scan->add_option("--c-star", scan_c_star, "drift compensation constant");
  scan->add_flag("--concat", scan_concat,
                 "concatenate multiple tick files into one path");
  scan->add_option("--out", scan_out, "output CSV")->required();

  // --- mc ---
  auto* mc = app.add_subcommand("mc", "Size/power table over (beta, n)");
  std::string mc_config, mc_out;
  std::optional<std::size_t> mc_reps;
  std::optional<std::uint64_t> mc_seed;
  std::size_t mc_threads = 0;
  mc->add_option("--config", mc_config, "table config file")->required();
  mc->add_option("--reps", mc_reps, "override replication count");
  mc->add_option("--seed", mc_seed, "override master seed");
  mc->add_option("--threads", mc_threads, "worker threads (0 = RCF_THREADS/auto)");
  mc->add_option("--out", mc_out, "output CSV")->required();

  // --- qq ---
  auto* qq = app.add_subcommand("qq", "Normal QQ pairs of the null statistic");
  std::string qq_config, qq_out;
  std::optional<std::size_t> qq_reps;
  std::optional<std::uint64_t> qq_seed;
  std::size_t qq_threads = 0;
  qq->add_option("--config", qq_config, "scenario config file");
  qq->add_option("--reps", qq_reps, "override replication count");
  qq->add_option("--seed", qq_seed, "override master seed");
  qq->add_option("--threads", qq_threads, "worker threads (0 = RCF_THREADS/auto)");
  qq->add_option("--out", qq_out, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sim->parsed()) {
      return cmd_simulate(sim_config, sim_seed, sim_n, sim_beta, sim_scenario,
                          sim_out);
    }
    if (test->parsed()) {
      if (test_path.empty() == test_ticks.files.empty()) {
        std::cerr << "error: need exactly one of --path or --ticks\n";
        return 2;
      }
      return cmd_test(test_path, test_ticks, test_k_n, test_c, test_c_star,
                      test_alpha, test_json, test_out);
    }
    if (scan->parsed()) {
      if (scan_path.empty() == scan_ticks.files.empty()) {
        std::cerr << "error: need exactly one of --path or --ticks\n";
        return 2;
      }
      return cmd_scan(scan_path, scan_ticks, scan_concat, scan_grid_spec,
                      scan_k_n, scan_c_star, scan_out);
    }
    if (mc->parsed()) {
      return cmd_mc(mc_config, mc_reps, mc_seed, mc_threads, mc_out);
    }
    if (qq->parsed()) {
      return cmd_qq(qq_config, qq_reps, qq_seed, qq_threads, qq_out);
    }
  } catch (const std::invalid_argument& e) {
    // bad flag values, unreadable files, malformed configs: caller error
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
