#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace rcf {

// Neumaier-compensated sum. Used for every block accumulation so that
// results do not drift with optimization level or summation batching.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(std::span<const double> xs);

// Inverse standard-normal CDF (Wichura's PPND16), |error| < 1e-15 on (0,1).
// Throws std::invalid_argument outside (0,1).
double normal_quantile(double p);

// Standard-normal CDF via erfc; used by diagnostics and tests.
double normal_cdf(double x);

// Pearson correlation of two equal-length series; throws on length < 2 or
// zero variance.
double pearson_correlation(std::span<const double> xs,
                           std::span<const double> ys);

}  // namespace rcf
