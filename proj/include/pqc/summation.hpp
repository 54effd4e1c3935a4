// summation.hpp - compensated (Kahan-Babuska-Neumaier) accumulation.
#pragma once

#include <cmath>

namespace pqc {

/// Error-corrected running sum. Adding terms in a fixed order gives a
/// deterministic, near-exact total regardless of term cancellation.
class CompensatedSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      correction_ += (sum_ - t) + value;
    } else {
      correction_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

}  // namespace pqc
