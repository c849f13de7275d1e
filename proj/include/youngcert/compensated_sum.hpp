#pragma once

#include <cmath>

namespace youngcert {

// Neumaier's variant of Kahan summation. Also tracks sum |x_i|, which bounds
// the accumulated rounding error for certification.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
    magnitude_ += std::fabs(x);
  }

  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }

  double value() const { return sum_ + compensation_; }
  double magnitude() const { return magnitude_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
  double magnitude_ = 0.0;
};

}  // namespace youngcert
