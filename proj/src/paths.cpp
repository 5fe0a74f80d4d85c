#include "rcf/paths.hpp"

#include <cmath>
#include <stdexcept>

namespace rcf {

PricePath make_path(double t_end, std::vector<double> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("path too short: need at least two samples");
  }
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("path horizon must be positive and finite");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("invalid sample: path values must be finite");
    }
  }
  return PricePath{t_end, std::move(values)};
}

IncrementSeries increments(const PricePath& path) {
  if (path.values.size() < 2) {
    throw std::invalid_argument("path too short: need at least two samples");
  }
  IncrementSeries out;
  out.delta = path.delta();
  out.increments.resize(path.n());
  for (std::size_t i = 0; i < out.increments.size(); ++i) {
    out.increments[i] = path.values[i + 1] - path.values[i];
  }
  return out;
}

BlockGeometry block_geometry(std::size_t n, std::size_t k_n, double delta) {
  if (k_n < 2 || n < 2 * k_n) {
    throw std::invalid_argument(
        "insufficient data for block geometry: need k_n >= 2 and n >= 2*k_n");
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("block geometry requires a positive step");
  }
  BlockGeometry geom;
  geom.k_n = k_n;
  geom.m_n = n / (2 * k_n);
  geom.v_n = static_cast<double>(k_n) * delta;
  return geom;
}

}  // namespace rcf
