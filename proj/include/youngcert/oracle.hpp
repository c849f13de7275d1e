#pragma once

#include <optional>

#include "youngcert/legendre.hpp"
#include "youngcert/monotone.hpp"

// Closed-form reference values. Nothing here calls quadrature or invert(), so
// these can be used to check enclosures without circularity.
namespace youngcert::oracle {

// a^alpha/alpha + b^beta/beta - ab.
double power_remainder(const PowerFamily& family, double a, double b);

// -(a^(alpha-1) - b)(b^(beta-1) - a).
double power_upper_bound(const PowerFamily& family, double a, double b);

// max{a^alpha, b^beta} - ab.
double power_merkle_bound(const PowerFamily& family, double a, double b);

struct ClosedFormCase {
  PowerFamily family;
  double a;
  double b;
  double remainder;
  double upper_bound;
  std::optional<double> merkle;

  static ClosedFormCase at(const PowerFamily& family, double a, double b);
};

inline constexpr long kFineReferencePanels = 1L << 22;

// Midpoint rule on 2^22 panels. A reference value, not a bound.
double fine_riemann_reference(const MonotoneFn& f, double lo, double hi);

}  // namespace youngcert::oracle
