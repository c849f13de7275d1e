#include "youngcert/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace youngcert {

namespace rounding {

double down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

double up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

}  // namespace rounding

using rounding::down;
using rounding::up;

Interval::Interval(double lo, double hi) : lo(lo), hi(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("interval requires finite lo < hi, got [" +
                                std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
}

Enclosure::Enclosure(double point) : lo_(point), hi_(point) {
  if (std::isnan(point)) throw std::invalid_argument("enclosure of NaN");
}

Enclosure::Enclosure(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    throw std::invalid_argument("enclosure requires lo <= hi");
  }
}

double Enclosure::mid() const {
  if (lo_ == hi_) return lo_;
  return lo_ + 0.5 * (hi_ - lo_);
}

Enclosure Enclosure::widened(double r) const {
  if (!(r >= 0.0)) throw std::invalid_argument("widening radius must be >= 0");
  if (r == 0.0) return *this;
  return {down(lo_ - r), up(hi_ + r)};
}

Enclosure Enclosure::hull(double a, double b) {
  return {std::min(a, b), std::max(a, b)};
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
}

std::optional<Enclosure> intersect(const Enclosure& a, const Enclosure& b) {
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi) return std::nullopt;
  return Enclosure(lo, hi);
}

namespace {

// Each bound is computed in round-to-nearest, then stepped one ulp outward
// unless an error-free transformation shows the operation was exact.

double sum_down(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return err < 0.0 ? down(s) : s;
}

double sum_up(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return err > 0.0 ? up(s) : s;
}

double product_down(double a, double b) {
  const double p = a * b;
  return std::fma(a, b, -p) < 0.0 ? down(p) : p;
}

double product_up(double a, double b) {
  const double p = a * b;
  return std::fma(a, b, -p) > 0.0 ? up(p) : p;
}

}  // namespace

Enclosure operator-(const Enclosure& x) { return {-x.hi(), -x.lo()}; }

Enclosure operator+(const Enclosure& x, const Enclosure& y) {
  return {sum_down(x.lo(), y.lo()), sum_up(x.hi(), y.hi())};
}

Enclosure operator-(const Enclosure& x, const Enclosure& y) {
  return {sum_down(x.lo(), -y.hi()), sum_up(x.hi(), -y.lo())};
}

Enclosure operator*(const Enclosure& x, const Enclosure& y) {
  const double xs[] = {x.lo(), x.hi()};
  const double ys[] = {y.lo(), y.hi()};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double a : xs) {
    for (double b : ys) {
      lo = std::min(lo, product_down(a, b));
      hi = std::max(hi, product_up(a, b));
    }
  }
  return {lo, hi};
}

Enclosure operator+(const Enclosure& x, double y) { return x + Enclosure(y); }
Enclosure operator-(const Enclosure& x, double y) { return x - Enclosure(y); }
Enclosure operator-(double x, const Enclosure& y) { return Enclosure(x) - y; }
Enclosure operator*(const Enclosure& x, double y) { return x * Enclosure(y); }
Enclosure operator*(double x, const Enclosure& y) { return Enclosure(x) * y; }

std::ostream& operator<<(std::ostream& os, const Enclosure& e) {
  return os << '[' << e.lo() << ", " << e.hi() << ']';
}

}  // namespace youngcert
