#include "rcf/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rcf {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Joint Euler evolution of (spot variance, log price) sharing one stream.
// Draw order per step is fixed (z, z_perp, angle, exponential) and does not
// depend on the scenario, so paths with equal seeds stay aligned across
// scenarios: an H0Partial path and an H1 path with the same seed share the
// same jump draws.
struct Evolved {
  std::vector<double> variance;  // c at t_0..t_n (after scenario forcing)
  std::vector<double> price;     // X at t_0..t_n
};

Evolved evolve(const SimConfig& config, Seed seed) {
  validate(config);
  RngStream rng(seed);

  const std::size_t n = config.n;
  const double delta = config.t_end / static_cast<double>(n);
  const double sqrt_delta = std::sqrt(delta);
  const double rho_comp = std::sqrt(1.0 - config.rho * config.rho);
  const bool stochastic_vol = config.scenario == Scenario::H0Partial ||
                              config.scenario == Scenario::H0Full;
  const double jump_factor =
      config.jump_scale * jump_increment_scale(config.beta, delta);

  Evolved out;
  out.variance.resize(n + 1);
  out.price.resize(n + 1);

  auto forced = [&](std::size_t i, double latent) {
    if (config.scenario == Scenario::H1) return 0.0;
    if (config.scenario == Scenario::ConstVol) return config.const_vol;
    // Dead zone of the partial null: t_i >= 3*t_end/4, exactly 4*i >= 3*n.
    if (config.scenario == Scenario::H0Partial && 4 * i >= 3 * n) return 0.0;
    return latent;
  };

  double latent_c = config.c0;
  double x = 0.0;
  out.variance[0] = forced(0, latent_c);
  out.price[0] = x;

  for (std::size_t i = 0; i < n; ++i) {
    const double z = rng.normal();
    const double z_perp = rng.normal();
    const double angle = rng.uniform_angle();
    const double expo = rng.exponential();

    const double c_i = out.variance[i];
    const double diffusion = std::sqrt(std::max(c_i, 0.0)) * sqrt_delta * z;
    const double jump =
        (jump_factor != 0.0)
            ? jump_factor * stable_draw(config.beta, angle, expo)
            : 0.0;
    x += diffusion + jump;
    out.price[i + 1] = x;

    if (stochastic_vol) {
      const double c_plus = std::max(latent_c, 0.0);
      const double dw = sqrt_delta * z;
      const double dw_perp = config.rho * dw + rho_comp * sqrt_delta * z_perp;
      latent_c += config.cir_kappa * (config.cir_theta - c_plus) * delta +
                  config.cir_xi * std::sqrt(c_plus) * dw_perp;
    }
    out.variance[i + 1] = forced(i + 1, latent_c);
  }
  return out;
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::H0Partial: return "H0_PARTIAL";
    case Scenario::H0Full: return "H0_FULL";
    case Scenario::H1: return "H1";
    case Scenario::ConstVol: return "CONST_VOL";
  }
  throw std::logic_error("unreachable scenario");
}

Scenario scenario_from_string(const std::string& name) {
  if (name == "H0_PARTIAL") return Scenario::H0Partial;
  if (name == "H0_FULL") return Scenario::H0Full;
  if (name == "H1") return Scenario::H1;
  if (name == "CONST_VOL") return Scenario::ConstVol;
  throw std::invalid_argument("unknown scenario: " + name);
}

void validate(const SimConfig& config) {
  if (config.n < 2) {
    throw std::invalid_argument("simulation needs at least two increments");
  }
  if (!(config.t_end > 0.0) || !std::isfinite(config.t_end)) {
    throw std::invalid_argument("t_end must be positive");
  }
  if (!(config.beta >= 1.0 && config.beta <= 2.0)) {
    throw std::invalid_argument(
        "invalid stability index: experiment beta must lie in [1, 2]");
  }
  if (!(config.jump_scale >= 0.0) || !std::isfinite(config.jump_scale)) {
    throw std::invalid_argument("jump_scale must be non-negative");
  }
  if (!(config.cir_kappa >= 0.0) || !(config.cir_theta >= 0.0) ||
      !(config.cir_xi >= 0.0) || !(config.c0 >= 0.0)) {
    throw std::invalid_argument("variance dynamics need non-negative params");
  }
  if (!(config.rho >= -1.0 && config.rho <= 1.0)) {
    throw std::invalid_argument("rho must lie in [-1, 1]");
  }
  if (!(config.const_vol >= 0.0) || !std::isfinite(config.const_vol)) {
    throw std::invalid_argument("const_vol must be non-negative");
  }
}

double stable_draw(double beta, double u, double e) {
  if (!(beta > 0.0 && beta <= 2.0)) {
    throw std::invalid_argument("invalid stability index: beta must lie in (0, 2]");
  }
  if (!(u > -kPi / 2.0 && u < kPi / 2.0)) {
    throw std::invalid_argument("stable_draw: angle must lie in (-pi/2, pi/2)");
  }
  if (!(e > 0.0)) {
    throw std::invalid_argument("stable_draw: exponential variate must be positive");
  }
  // Cauchy limit: the generic exponent (1-beta)/beta degenerates at beta = 1.
  if (std::abs(beta - 1.0) < 1e-12) return std::tan(u);

  const double cos_u = std::cos(u);
  const double lead = std::sin(beta * u) / std::pow(cos_u, 1.0 / beta);
  const double tail =
      std::pow(std::cos((1.0 - beta) * u) / e, (1.0 - beta) / beta);
  return lead * tail;
}

double jump_increment_scale(double beta, double delta) {
  if (!(beta > 0.0 && beta <= 2.0)) {
    throw std::invalid_argument("invalid stability index: beta must lie in (0, 2]");
  }
  if (!(delta > 0.0)) {
    throw std::invalid_argument("jump_increment_scale: delta must be positive");
  }
  return std::pow(delta, 1.0 / beta);
}

std::vector<double> simulate_cir(const SimConfig& config, Seed seed) {
  return evolve(config, seed).variance;
}

PricePath generate_path(const SimConfig& config, Seed seed) {
  Evolved ev = evolve(config, seed);
  return PricePath{config.t_end, std::move(ev.price)};
}

}  // namespace rcf
