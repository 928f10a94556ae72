#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace subqchem {

// Compensated (Kahan) accumulator for long positive sums.
class KahanSum {
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

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

// Ordinary least squares y = slope*x + intercept.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

// Least-squares fit of log(y) = slope*log(x) + intercept. All inputs positive.
LinearFit fit_power_law(std::span<const double> x, std::span<const double> y);

}  // namespace subqchem
