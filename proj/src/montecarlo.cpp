#include "rcf/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "rcf/numerics.hpp"

namespace rcf {

namespace {

// Deterministic sub-seed for a table run: folds two indices into the master
// seed through the same mixer the streams use.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b) {
  std::uint64_t s = master;
  s = splitmix64(s) ^ (a * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
  s = splitmix64(s) ^ (b * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL);
  return splitmix64(s);
}

struct RepOutcome {
  double stat = 0.0;
  bool valid = false;
  bool reject = false;
  std::string reason;
};

}  // namespace

std::size_t default_thread_count() {
  if (const char* env = std::getenv("RCF_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) {
      return static_cast<std::size_t>(parsed);
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  if (threads == 0) threads = default_thread_count();
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        body(i);
      }
    });
  }
  for (auto& worker : pool) worker.join();
}

McSummary run_scenario(const McScenario& scenario, std::size_t threads) {
  if (scenario.reps == 0) {
    throw std::invalid_argument("scenario requires at least one replication");
  }
  validate(scenario.sim);

  std::vector<RepOutcome> outcomes(scenario.reps);
  parallel_for(scenario.reps, threads, [&](std::size_t rep) {
    RepOutcome& out = outcomes[rep];
    try {
      const PricePath path = generate_path(
          scenario.sim, Seed{scenario.master_seed, rep});
      TuningInputs inputs;
      inputs.k_n = scenario.k_n;
      inputs.c = scenario.c;
      inputs.c_star = scenario.c_star;
      inputs.alpha = scenario.alpha;
      const TestResult result = run_test(path, auto_tuning(path, inputs));
      out.stat = result.script_t;
      out.reject = result.reject;
      out.valid = true;
    } catch (const std::exception& e) {
      out.reason = e.what();
    }
  });

  McSummary summary;
  summary.scenario = scenario;
  for (std::size_t rep = 0; rep < outcomes.size(); ++rep) {
    const RepOutcome& out = outcomes[rep];
    if (out.valid) {
      summary.statistics.push_back(out.stat);
      summary.rejections += out.reject;
    } else {
      summary.failures.push_back(McFailure{rep, out.reason});
    }
  }
  summary.valid_reps = summary.statistics.size();
  if (summary.valid_reps == 0) {
    throw std::runtime_error("scenario produced no valid statistics");
  }
  const double valid = static_cast<double>(summary.valid_reps);
  summary.rejection_rate = static_cast<double>(summary.rejections) / valid;
  summary.mc_stderr = std::sqrt(
      summary.rejection_rate * (1.0 - summary.rejection_rate) / valid);
  return summary;
}

SizePowerTable size_power_table(const SimConfig& base,
                                const std::vector<double>& betas,
                                const std::vector<TableCell>& cells,
                                std::size_t reps, std::uint64_t master_seed,
                                double alpha, std::size_t threads) {
  if (betas.empty() || cells.empty()) {
    throw std::invalid_argument("size_power_table needs betas and cells");
  }
  SizePowerTable table;
  for (std::size_t bi = 0; bi < betas.size(); ++bi) {
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      for (const Scenario scen : {Scenario::H0Partial, Scenario::H1}) {
        McScenario mc;
        mc.sim = base;
        mc.sim.n = cells[ci].n;
        mc.sim.beta = betas[bi];
        mc.sim.scenario = scen;
        mc.k_n = cells[ci].k_n;
        mc.c = cells[ci].c;
        mc.c_star = cells[ci].c_star;
        mc.alpha = alpha;
        mc.reps = reps;
        mc.master_seed = derive_seed(
            master_seed, bi,
            2 * ci + (scen == Scenario::H1 ? 1 : 0));
        const McSummary summary = run_scenario(mc, threads);

        TableRow row;
        row.beta = betas[bi];
        row.cell = cells[ci];
        row.scenario = scen;
        row.reps = reps;
        row.valid_reps = summary.valid_reps;
        row.failures = summary.failures.size();
        row.rejection_rate = summary.rejection_rate;
        row.mc_stderr = summary.mc_stderr;
        table.rows.push_back(row);
      }
    }
  }
  return table;
}

std::vector<QqPoint> qq_export(std::vector<double> statistics) {
  const std::size_t n = statistics.size();
  if (n < 10) {
    throw std::invalid_argument("insufficient statistics for QQ");
  }
  std::sort(statistics.begin(), statistics.end());
  std::vector<QqPoint> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    points[i].theoretical = normal_quantile(
        (static_cast<double>(i) + 0.5) / static_cast<double>(n));
    points[i].empirical = statistics[i];
  }
  return points;
}

double qq_correlation(const std::vector<QqPoint>& points) {
  std::vector<double> theo(points.size());
  std::vector<double> emp(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    theo[i] = points[i].theoretical;
    emp[i] = points[i].empirical;
  }
  return pearson_correlation(theo, emp);
}

}  // namespace rcf
