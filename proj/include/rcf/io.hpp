#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "rcf/jump_test.hpp"
#include "rcf/montecarlo.hpp"
#include "rcf/paths.hpp"
#include "rcf/simulate.hpp"

namespace rcf {

// Doubles are always written with %.17g so files round-trip exactly and
// reruns are byte-identical.
std::string format_full(double v);

// --- path files: header "t,x", one row per grid point, full precision ---
void write_path_csv(const PricePath& path, std::ostream& out);
PricePath read_path_csv(std::istream& in);

// --- single test result, CSV record and JSON document ---
std::string test_result_csv_header();
std::string test_result_csv_row(const TestResult& result);
std::string test_result_json(const TestResult& result);

// --- table / scan / qq outputs ---
std::string size_power_csv(const SizePowerTable& table);
std::string scan_csv(const std::vector<ScanPoint>& points);
std::string qq_csv(const std::vector<QqPoint>& points);

// --- flat key=value configuration files ---
// '#' starts a comment; keys are case-insensitive. Unknown keys throw.
//
// Simulation keys (defaults in parentheses): n (2340), t_end (1.0),
// beta (1.2), jump_scale (0.5), cir_kappa (0.03), cir_theta (1.0),
// cir_xi (0.15), c0 (1.0), rho (-0.5), scenario (H0_PARTIAL),
// sigma2 (1.0, variance for CONST_VOL).
// Scenario keys add: reps (2000), seed (0), k_n (0 = auto), c (0.18),
// c_star (0.2), alpha (0.05).
SimConfig parse_sim_config(std::istream& in);
McScenario parse_scenario_config(std::istream& in);
std::string scenario_config_kv(const McScenario& scenario);

// Table files use the scenario keys as cell defaults plus:
//   betas=1.0,1.1,...          (required)
// and either
//   ns=1170,2340,4680          (one cell per sample size), or
//   n=2340 with cells=0.15:50,0.2:78   (c:k_n pairs at a fixed size).
struct TableSpec {
  SimConfig base;
  std::vector<double> betas;
  std::vector<TableCell> cells;
  std::size_t reps = 2000;
  std::uint64_t master_seed = 0;
  double alpha = 0.05;
};

TableSpec parse_table_config(std::istream& in);

}  // namespace rcf
