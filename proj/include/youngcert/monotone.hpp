#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "youngcert/enclosure.hpp"

namespace youngcert {

inline constexpr double kDefaultInverseTol = 1e-12;
inline constexpr int kDefaultBisectionBudget = 200;

// phi(x) = coefficient * x^exponent on a domain inside [0, inf).
struct PowerLaw {
  double coefficient;
  double exponent;
  friend bool operator==(const PowerLaw&, const PowerLaw&) = default;
};

// phi(x) = slope * x + intercept.
struct AffineMap {
  double slope;
  double intercept;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// phi(x) = e^x - shift.
struct ExpShift {
  double shift;
  friend bool operator==(const ExpShift&, const ExpShift&) = default;
};

// phi(x) = ln(x + shift); the inverse of ExpShift.
struct LogShift {
  double shift;
  friend bool operator==(const LogShift&, const LogShift&) = default;
};

// Piecewise-linear interpolant through strictly increasing samples.
struct SampleTable {
  std::vector<double> xs;
  std::vector<double> ys;
  friend bool operator==(const SampleTable&, const SampleTable&) = default;
};

using FunctionBody =
    std::variant<PowerLaw, AffineMap, ExpShift, LogShift, SampleTable>;

// A continuous, strictly increasing function on a closed interval.
//
// Immutable after construction. The codomain is always [f(lo), f(hi)] as
// computed by eval(), so endpoint anchoring is exact.
class MonotoneFn {
 public:
  static MonotoneFn power(double coefficient, double exponent, Interval domain);
  static MonotoneFn affine(double slope, double intercept, Interval domain);
  static MonotoneFn exp_shift(double shift, Interval domain);
  static MonotoneFn log_shift(double shift, Interval domain);
  // Points must have strictly increasing x and y; at least two of them.
  static MonotoneFn table(std::vector<std::pair<double, double>> points);

  static MonotoneFn identity(Interval domain) {
    return affine(1.0, 0.0, domain);
  }

  const Interval& domain() const { return domain_; }
  const Interval& codomain() const { return codomain_; }
  const FunctionBody& body() const { return body_; }

  // Throws DomainError outside domain().
  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

  // Closed-form (or exact piecewise-linear) inverse, used as a starting guess
  // by invert(). Not itself an enclosure.
  double inverse_guess(double y) const;

  // The inverse as a MonotoneFn on codomain(). Floating-point evaluation of
  // the inverse's endpoints may differ from domain() by a few ulps.
  MonotoneFn inverse() const;

  friend bool operator==(const MonotoneFn&, const MonotoneFn&) = default;

 private:
  MonotoneFn(Interval domain, FunctionBody body);
  double eval_unchecked(double x) const;

  Interval domain_;
  Interval codomain_;
  FunctionBody body_;
};

// phi together with the numerically realized inverse psi.
class ConjugatePair {
 public:
  explicit ConjugatePair(MonotoneFn phi, double inverse_tol = kDefaultInverseTol,
                         bool closed_form_inverse = true,
                         int bisection_budget = kDefaultBisectionBudget);

  const MonotoneFn& phi() const { return phi_; }
  double inverse_tol() const { return inverse_tol_; }
  bool closed_form_inverse() const { return closed_form_inverse_; }
  int bisection_budget() const { return bisection_budget_; }

  // [alpha1, alpha2] and [beta1, beta2].
  const Interval& alphas() const { return phi_.domain(); }
  const Interval& betas() const { return phi_.codomain(); }

  // The pair (psi, phi): roles of the two functions exchanged.
  ConjugatePair swapped() const;

 private:
  MonotoneFn phi_;
  double inverse_tol_;
  bool closed_form_inverse_;
  int bisection_budget_;
};

// Encloses psi(y) = phi^{-1}(y): returns [x_lo, x_hi] of width <= inverse_tol
// with phi(x_lo) <= y <= phi(x_hi).
//
// Throws DomainError when y is outside phi's codomain and ConvergenceError
// when bisection cannot meet its target within the budget. When `trace` is
// given, every bisection bracket is appended to it.
Enclosure invert(const ConjugatePair& pair, double y,
                 std::vector<Enclosure>* trace = nullptr);

struct MonotoneAudit {
  bool pass;
  double min_slope;
  // Left end of the probe panel where min_slope was observed.
  double min_slope_at;
  std::size_t probes;
};

// Difference quotients of f on n_probe uniform panels; passes iff every
// quotient is >= min_slope. Requires n_probe >= 2.
MonotoneAudit verify_monotone(const MonotoneFn& f, int n_probe,
                              double min_slope);

}  // namespace youngcert
