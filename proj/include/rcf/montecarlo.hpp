#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rcf/jump_test.hpp"
#include "rcf/simulate.hpp"

namespace rcf {

// Thread count used when a caller passes 0: the RCF_THREADS environment
// variable if set to a positive integer, otherwise hardware concurrency.
std::size_t default_thread_count();

// Runs body(i) for i in [0, count) across `threads` workers. Results must be
// written to per-index slots; scheduling order is unspecified but the
// per-index outputs make every reduction order-independent.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

// One Monte Carlo experiment: `reps` independent paths of `sim`, each run
// through the auto-tuned test. Replication r draws from the stream
// (master_seed, r), so results are bit-identical at any thread count.
struct McScenario {
  SimConfig sim;
  std::size_t k_n = 0;     // 0 = default_k_n(sim.n)
  double c = 0.18;
  double c_star = 0.2;
  double alpha = 0.05;
  std::size_t reps = 2000;
  std::uint64_t master_seed = 0;
};

// A replication whose test could not be completed (degenerate path or
// tuning); excluded from the rejection-rate denominator but reported.
struct McFailure {
  std::size_t rep = 0;
  std::string reason;
};

struct McSummary {
  McScenario scenario;
  std::size_t valid_reps = 0;
  std::size_t rejections = 0;
  double rejection_rate = 0.0;
  double mc_stderr = 0.0;             // sqrt(p(1-p)/valid_reps)
  std::vector<double> statistics;     // studentized stats, replication order
  std::vector<McFailure> failures;    // replication order
};

McSummary run_scenario(const McScenario& scenario, std::size_t threads = 0);

// One column of a size/power table: a sample size with optional tuning
// overrides (k_n = 0 means the default rule).
struct TableCell {
  std::size_t n = 2340;
  std::size_t k_n = 0;
  double c = 0.18;
  double c_star = 0.2;
};

struct TableRow {
  double beta = 0.0;
  TableCell cell;
  Scenario scenario = Scenario::H0Partial;
  std::size_t reps = 0;
  std::size_t valid_reps = 0;
  std::size_t failures = 0;
  double rejection_rate = 0.0;
  double mc_stderr = 0.0;
};

struct SizePowerTable {
  std::vector<TableRow> rows;
};

// Rejection rates over (beta x cell) x {H0_PARTIAL, H1}. The H0 rows use the
// partial null (variance killed on the last quarter-session); jump and
// variance dynamics come from `base`. Each (beta, cell, scenario) run gets a
// sub-seed derived deterministically from master_seed.
SizePowerTable size_power_table(const SimConfig& base,
                                const std::vector<double>& betas,
                                const std::vector<TableCell>& cells,
                                std::size_t reps, std::uint64_t master_seed,
                                double alpha = 0.05, std::size_t threads = 0);

// Normal probability plot coordinates: sorted statistics paired with
// standard-normal quantiles at (i - 0.5)/N. Requires N >= 10.
struct QqPoint {
  double theoretical = 0.0;
  double empirical = 0.0;
};

std::vector<QqPoint> qq_export(std::vector<double> statistics);

// Pearson correlation of a QQ pairing; the closer to 1, the closer the
// sample is to a normal shape (location and scale do not matter).
double qq_correlation(const std::vector<QqPoint>& points);

}  // namespace rcf
