#include "rcf/estimators.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "rcf/numerics.hpp"

namespace rcf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDenomTolerance = 1e-12;

void check_u(double u) {
  if (!(u > 0.0) || !std::isfinite(u)) {
    throw std::invalid_argument("argument u must be positive and finite");
  }
}

void check_variant(int variant) {
  if (variant != 0 && variant != 1) {
    throw std::invalid_argument("variant must be 0 or 1");
  }
}

void check_fits(const IncrementSeries& incs, const BlockGeometry& geom) {
  if (incs.n() < geom.used_increments()) {
    throw std::invalid_argument(
        "insufficient data for block geometry: series shorter than blocks");
  }
  if (!(incs.delta > 0.0)) {
    throw std::invalid_argument("block geometry requires a positive step");
  }
}

}  // namespace

double local_cf(const IncrementSeries& incs, const BlockGeometry& geom,
                std::size_t j, double u, int variant) {
  check_u(u);
  check_variant(variant);
  check_fits(incs, geom);
  if (j >= geom.m_n) {
    throw std::invalid_argument("block out of range");
  }
  const std::size_t k_n = geom.k_n;
  const double inv_sqrt_delta = 1.0 / std::sqrt(incs.delta);
  const std::size_t base = 2 * j * k_n;
  // Variant 0 differences the increments at offsets (2l, 2l-1); variant 1
  // shifts one grid point left to (2l-1, 2l-2).
  const std::size_t shift = (variant == 0) ? 0 : 1;
  CompensatedSum acc;
  for (std::size_t l = 1; l < k_n; ++l) {
    const std::size_t hi = base + 2 * l - shift;
    const double d = incs.increments[hi] - incs.increments[hi - 1];
    acc.add(std::cos(u * d * inv_sqrt_delta));
  }
  return acc.value() / static_cast<double>(k_n - 1);
}

SpotEstimate local_spot(double L, double u, std::size_t k_n) {
  check_u(u);
  if (k_n < 2) {
    throw std::invalid_argument("local_spot requires k_n >= 2");
  }
  if (!(L >= -1.0 - 1e-12 && L <= 1.0 + 1e-12)) {
    throw std::invalid_argument("local cf value must lie in [-1, 1]");
  }
  const double floor_value = 1.0 / std::sqrt(static_cast<double>(k_n));
  SpotEstimate out;
  out.floored = (L <= floor_value);
  const double clipped = out.floored ? floor_value : std::min(L, 1.0);
  out.c = -std::log(clipped) / (u * u);
  return out;
}

std::vector<LocalBlockEstimate> block_estimates(const IncrementSeries& incs,
                                                const BlockGeometry& geom,
                                                double u, int variant) {
  check_u(u);
  check_variant(variant);
  check_fits(incs, geom);
  std::vector<LocalBlockEstimate> blocks;
  blocks.reserve(geom.m_n);
  for (std::size_t j = 0; j < geom.m_n; ++j) {
    LocalBlockEstimate b;
    b.j = j;
    b.L = local_cf(incs, geom, j, u, variant);
    const SpotEstimate spot = local_spot(b.L, u, geom.k_n);
    b.c = spot.c;
    b.floored = spot.floored;
    blocks.push_back(b);
  }
  return blocks;
}

double sinh_correction(double c, double u, std::size_t k_n) {
  check_u(u);
  if (k_n < 2) {
    throw std::invalid_argument("sinh_correction requires k_n >= 2");
  }
  const double s = std::sinh(u * u * c);
  return (s * s) / (u * u * static_cast<double>(k_n - 1));
}

IvEstimate integrated_vol(std::vector<LocalBlockEstimate> blocks,
                          const BlockGeometry& geom, double u, int variant) {
  check_u(u);
  check_variant(variant);
  if (blocks.size() != geom.m_n) {
    throw std::invalid_argument("block list does not match geometry");
  }
  IvEstimate out;
  out.variant = variant;
  out.u = u;
  CompensatedSum sum, corr;
  for (const LocalBlockEstimate& b : blocks) {
    const double correction = sinh_correction(b.c, u, geom.k_n);
    sum.add(b.c - correction);
    corr.add(correction);
  }
  out.c_hat = 2.0 * geom.v_n * sum.value();
  out.correction_total = corr.value();
  out.blocks = std::move(blocks);
  return out;
}

IvEstimate integrated_vol(const IncrementSeries& incs,
                          const BlockGeometry& geom, double u, int variant) {
  return integrated_vol(block_estimates(incs, geom, u, variant), geom, u,
                        variant);
}

VarianceEstimate variance_estimate(const std::vector<LocalBlockEstimate>& b0,
                                   const std::vector<LocalBlockEstimate>& b1,
                                   const BlockGeometry& geom, double u) {
  check_u(u);
  if (b0.size() != geom.m_n || b1.size() != geom.m_n) {
    throw std::invalid_argument("block list does not match geometry");
  }
  auto one_variant = [&](const std::vector<LocalBlockEstimate>& blocks) {
    CompensatedSum acc;
    for (const LocalBlockEstimate& b : blocks) {
      const double term = b.c - sinh_correction(b.c, u, geom.k_n);
      acc.add(term * term);
    }
    return 2.0 * geom.v_n * acc.value();
  };
  VarianceEstimate out;
  out.u = u;
  out.i_hat_0 = one_variant(b0);
  out.i_hat_1 = one_variant(b1);
  out.i_hat = 0.5 * (out.i_hat_0 + out.i_hat_1);
  return out;
}

VarianceEstimate variance_estimate(const IncrementSeries& incs,
                                   const BlockGeometry& geom, double u) {
  return variance_estimate(block_estimates(incs, geom, u, 0),
                           block_estimates(incs, geom, u, 1), geom, u);
}

double bipower_variation(const IncrementSeries& incs) {
  if (incs.n() < 2) {
    throw std::invalid_argument("need at least two increments");
  }
  CompensatedSum acc;
  for (std::size_t i = 0; i + 1 < incs.n(); ++i) {
    acc.add(std::abs(incs.increments[i]) * std::abs(incs.increments[i + 1]));
  }
  return (kPi / 2.0) * acc.value();
}

double chi(double beta) {
  if (!(beta > 0.0 && beta < 2.0)) {
    throw std::invalid_argument("chi undefined outside (0, 2)");
  }
  return kPi / (2.0 * std::tgamma(beta) * std::sin(kPi * beta / 2.0));
}

double ratio_diagnostic(const IncrementSeries& incs, const BlockGeometry& geom,
                        double u) {
  check_u(u);
  const double at_u = integrated_vol(incs, geom, u, 0).c_hat;
  if (std::abs(at_u) < kDenomTolerance) {
    throw std::runtime_error("degenerate denominator in ratio diagnostic");
  }
  const double at_2u = integrated_vol(incs, geom, 2.0 * u, 0).c_hat;
  return at_2u / at_u - 1.0;
}

double a0_bias_oracle(double beta, double jump_scale, double u, double delta,
                      double t_end) {
  if (!(beta > 0.0 && beta < 2.0)) {
    throw std::invalid_argument("a0_bias_oracle: beta must lie in (0, 2)");
  }
  check_u(u);
  if (!(delta > 0.0) || !(t_end > 0.0)) {
    throw std::invalid_argument("a0_bias_oracle: delta and t_end must be positive");
  }
  return 2.0 * std::pow(std::abs(jump_scale), beta) * std::pow(u, beta - 2.0) *
         std::pow(delta, 1.0 - beta / 2.0) * t_end;
}

}  // namespace rcf
