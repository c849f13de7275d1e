#pragma once

#include <optional>
#include <ostream>

namespace youngcert {

// Closed interval with lo < hi. Used for function domains and codomains.
struct Interval {
  double lo;
  double hi;

  Interval(double lo, double hi);

  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(double a, double b) const { return lo <= a && b <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// A closed interval [lo, hi] certified to contain some real quantity.
//
// Arithmetic rounds outward by one ulp per operation, which keeps enclosures
// honest under round-to-nearest without switching the FPU rounding mode.
class Enclosure {
 public:
  constexpr Enclosure() = default;
  explicit Enclosure(double point);
  Enclosure(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double mid() const;

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Enclosure& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool overlaps(const Enclosure& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }
  bool within(double lo, double hi) const { return lo <= lo_ && hi_ <= hi; }

  // Grows the enclosure by r >= 0 on both sides (rounded outward).
  Enclosure widened(double r) const;

  static Enclosure hull(double a, double b);
  static Enclosure hull(const Enclosure& a, const Enclosure& b);

  friend bool operator==(const Enclosure&, const Enclosure&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

std::optional<Enclosure> intersect(const Enclosure& a, const Enclosure& b);

Enclosure operator-(const Enclosure& x);
Enclosure operator+(const Enclosure& x, const Enclosure& y);
Enclosure operator-(const Enclosure& x, const Enclosure& y);
Enclosure operator*(const Enclosure& x, const Enclosure& y);
Enclosure operator+(const Enclosure& x, double y);
Enclosure operator-(const Enclosure& x, double y);
Enclosure operator-(double x, const Enclosure& y);
Enclosure operator*(const Enclosure& x, double y);
Enclosure operator*(double x, const Enclosure& y);

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

namespace rounding {

double down(double x);
double up(double x);

}  // namespace rounding

}  // namespace youngcert
