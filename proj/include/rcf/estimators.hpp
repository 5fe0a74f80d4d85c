#pragma once

#include <cstddef>
#include <vector>

#include "rcf/paths.hpp"

namespace rcf {

// Everything in this header works on increments *scaled by sqrt(delta)* and
// on differences of consecutive increments, so a linear drift in the path
// cancels exactly and only the diffusion + jump structure is seen.
//
// Two block variants exist: variant 0 differences increments at offsets
// (2l, 2l-1) inside the block, variant 1 shifts the whole stencil one grid
// point left, differencing offsets (2l-1, 2l-2). Comparing the two variants
// at equal u is what isolates a Brownian component.

// Per-block output: the cosine average L, the spot value derived from it,
// and whether the small-sample floor clipped the logarithm.
struct LocalBlockEstimate {
  std::size_t j = 0;
  double L = 0.0;
  double c = 0.0;
  bool floored = false;
};

// Average of cos(u * D_l / sqrt(delta)) over the k_n - 1 increment
// differences D_l inside block j of the given variant.
double local_cf(const IncrementSeries& incs, const BlockGeometry& geom,
                std::size_t j, double u, int variant);

struct SpotEstimate {
  double c = 0.0;
  bool floored = false;
};

// Spot variance implied by a cosine average: c = -log(max(L, k_n^-1/2))/u^2.
// The floor keeps the logarithm finite when a block's average is small or
// negative; `floored` reports that the clip was active (L <= k_n^-1/2).
SpotEstimate local_spot(double L, double u, std::size_t k_n);

// All m_n blocks of one variant at argument u.
std::vector<LocalBlockEstimate> block_estimates(const IncrementSeries& incs,
                                                const BlockGeometry& geom,
                                                double u, int variant);

// Finite-sample bias correction subtracted from each block's spot value:
// sinh(u^2 c)^2 / (u^2 (k_n - 1)).
double sinh_correction(double c, double u, std::size_t k_n);

// Integrated variance over the blocked window:
//   c_hat = 2 v_n * sum_j (c_j - sinh_correction(c_j)).
struct IvEstimate {
  double c_hat = 0.0;
  int variant = 0;
  double u = 0.0;
  double correction_total = 0.0;  // sum of per-block corrections
  std::vector<LocalBlockEstimate> blocks;
};

IvEstimate integrated_vol(const IncrementSeries& incs,
                          const BlockGeometry& geom, double u, int variant);

// Same estimate assembled from precomputed blocks (exact same accumulation
// order, so results are bit-identical to the overload above).
IvEstimate integrated_vol(std::vector<LocalBlockEstimate> blocks,
                          const BlockGeometry& geom, double u, int variant);

// Asymptotic-variance proxy: per variant,
//   i_hat_k = 2 v_n * sum_j (c_j - sinh_correction(c_j))^2,
// averaged across the two variants.
struct VarianceEstimate {
  double i_hat = 0.0;
  double i_hat_0 = 0.0;
  double i_hat_1 = 0.0;
  double u = 0.0;
};

VarianceEstimate variance_estimate(const IncrementSeries& incs,
                                   const BlockGeometry& geom, double u);
VarianceEstimate variance_estimate(const std::vector<LocalBlockEstimate>& b0,
                                   const std::vector<LocalBlockEstimate>& b1,
                                   const BlockGeometry& geom, double u);

// Jump-robust variance proxy (pi/2) * sum |inc_i| * |inc_{i+1}|; feeds the
// data-driven choice of the argument u.
double bipower_variation(const IncrementSeries& incs);

// Fractional sine-integral constant: chi(beta) = integral_0^inf y^-beta
// sin(y) dy for beta in (0, 2). Computed via the reflection-stabilized
// closed form pi / (2 gamma(beta) sin(pi beta / 2)), smooth through beta=1
// where chi(1) = pi/2.
double chi(double beta);

// Relative change of the variant-0 estimate when the argument doubles:
//   (c_hat(2u) - c_hat(u)) / c_hat(u).
// Near 0 when a diffusion dominates; near 2^(beta-2) - 1 for a pure-jump
// path of stability beta.
double ratio_diagnostic(const IncrementSeries& incs, const BlockGeometry& geom,
                        double u);

// Expected additive small-sample bias of the variant-0 estimate on simulated
// pure-jump data: 2 |jump_scale|^beta u^(beta-2) delta^(1-beta/2) t_end.
double a0_bias_oracle(double beta, double jump_scale, double u, double delta,
                      double t_end);

}  // namespace rcf
