#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcf/paths.hpp"
#include "rcf/rng.hpp"

namespace rcf {

// Data-generating regimes:
//   H0Partial - square-root stochastic vol active on [0, 3T/4), zero after
//   H0Full    - square-root stochastic vol active on all of [0, T]
//   H1        - no diffusion at all (pure-jump path)
//   ConstVol  - constant spot variance const_vol (jumps per jump_scale)
enum class Scenario { H0Partial, H0Full, H1, ConstVol };

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& name);

// One simulated session: n increments over [0, t_end] (trading days) of
//   X_{i+1} = X_i + sqrt(c_i^+) * sqrt(delta) * Z_i
//                 + jump_scale * delta^(1/beta) * S_i
// where S_i is a standardized symmetric beta-stable draw and c follows a
// full-truncation Euler square-root diffusion with leverage rho.
struct SimConfig {
  std::size_t n = 2340;
  double t_end = 1.0;
  double beta = 1.2;        // stability index of the jump component, [1, 2]
  double jump_scale = 0.5;  // multiplier on the standardized stable increment
  double cir_kappa = 0.03;  // mean-reversion speed (per day)
  double cir_theta = 1.0;   // long-run spot variance
  double cir_xi = 0.15;     // vol-of-vol
  double c0 = 1.0;          // initial spot variance
  double rho = -0.5;        // corr(price noise, variance noise)
  Scenario scenario = Scenario::H0Partial;
  double const_vol = 1.0;   // spot variance when scenario == ConstVol
};

// Throws std::invalid_argument on out-of-range fields.
void validate(const SimConfig& config);

// Standardized symmetric stable variate with E[exp(i s S)] = exp(-|s|^beta),
// from one uniform angle u in (-pi/2, pi/2) and one unit exponential e.
// beta in (0, 2]; beta == 2 gives 2*sin(u)*sqrt(e) ~ N(0, 2) and is admitted
// for validation, beta == 1 is the tan(u) Cauchy limit.
double stable_draw(double beta, double u, double e);

// Deterministic magnitude factor of one jump increment: delta^(1/beta).
// Halving the step scales jumps by 2^(-1/beta).
double jump_increment_scale(double beta, double delta);

// Spot-variance path c_{t_0..t_n} under `config.scenario` (constant vector
// for H1 / ConstVol). Full-truncation Euler: negative excursions are kept in
// the state but floored at zero inside every square root and drift.
std::vector<double> simulate_cir(const SimConfig& config, Seed seed);

// Simulates one log-price path. Bit-identical for equal (config, seed)
// regardless of how many other streams are drawn elsewhere.
PricePath generate_path(const SimConfig& config, Seed seed);

}  // namespace rcf
