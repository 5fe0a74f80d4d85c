#pragma once

#include <cstddef>
#include <vector>

namespace rcf {

// A log-price path sampled on a regular grid: values[i] = X at t_i = i*delta,
// with n = values.size()-1 increments over [0, t_end]. Time is measured in
// trading days (1.0 = one 6.5-hour session).
struct PricePath {
  double t_end = 1.0;
  std::vector<double> values;

  std::size_t n() const { return values.size() - 1; }
  double delta() const { return t_end / static_cast<double>(n()); }
};

// Validating constructor: requires at least two samples ("path too short"),
// finite values ("invalid sample"), and a positive horizon.
PricePath make_path(double t_end, std::vector<double> values);

// First differences of a path. increments[i] = values[i+1] - values[i] is
// the increment over (t_i, t_{i+1}]; delta is carried along because every
// estimator scales by the square root of the step.
struct IncrementSeries {
  std::vector<double> increments;
  double delta = 0.0;

  std::size_t n() const { return increments.size(); }
};

IncrementSeries increments(const PricePath& path);

// Partition of n increments into m_n non-overlapping blocks of 2*k_n
// consecutive increments each. Trailing increments that do not fill a block
// are discarded; estimators read only increments [0, 2*k_n*m_n).
struct BlockGeometry {
  std::size_t k_n = 0;
  std::size_t m_n = 0;
  double v_n = 0.0;  // block time span k_n * delta

  std::size_t used_increments() const { return 2 * k_n * m_n; }
};

// Requires k_n >= 2 and n >= 2*k_n so at least one block exists.
BlockGeometry block_geometry(std::size_t n, std::size_t k_n, double delta);

}  // namespace rcf
