#pragma once

#include <cstdint>
#include <optional>

#include "youngcert/enclosure.hpp"
#include "youngcert/monotone.hpp"

namespace youngcert {

struct QuadratureConfig {
  std::int64_t initial_panels = 16;
  std::int64_t max_panels = std::int64_t{1} << 20;
  double target_width = 1e-9;
  // Use the exact antiderivative of built-in families and tables when
  // available. Off means plain Riemann refinement everywhere.
  bool prefer_closed_form = true;

  // Throws std::invalid_argument unless 1 <= initial <= max and width > 0.
  void validate() const;

  // Riemann sums on exactly n panels, no refinement and no closed form.
  static QuadratureConfig fixed_panels(std::int64_t n);
};

struct QuadratureResult {
  Enclosure value;
  std::int64_t panels = 0;
  bool closed_form = false;
  // False when refinement hit max_panels before reaching target_width.
  bool converged = true;
};

// Left and right Riemann sums of increasing f on a uniform n-panel grid of
// [lo, hi]. Returns [0, 0] when lo == hi. The sums are compensated but not
// widened; see rounding_allowance().
Enclosure riemann_enclosure(const MonotoneFn& f, double lo, double hi,
                            std::int64_t n);

// Same, for psi = phi^{-1} on [lo, hi] inside phi's codomain. Each node value
// is an invert() enclosure; lower sums use its lower end, upper sums its
// upper end.
Enclosure inverse_riemann_enclosure(const ConjugatePair& pair, double lo,
                                    double hi, std::int64_t n);

// Doubles the panel count from cfg.initial_panels until the width is at most
// cfg.target_width. Throws BudgetExceeded (with the best enclosure) once the
// next level would exceed cfg.max_panels.
QuadratureResult refine_to_width(const MonotoneFn& f, double lo, double hi,
                                 const QuadratureConfig& cfg);

// Upper bound on the floating-point error of a Riemann sum of an increasing
// integrand on [lo, hi] with endpoint values f_lo <= f_hi.
double rounding_allowance(double lo, double hi, double f_lo, double f_hi);

// Exact integral from the antiderivative of a built-in family (or the
// trapezoid rule on a table's breakpoints), widened for rounding. nullopt
// when f has no closed form.
std::optional<Enclosure> closed_form_integral(const MonotoneFn& f, double lo,
                                              double hi);

// Certified enclosure of the integral of f over [lo, hi] including rounding
// allowance. Never throws BudgetExceeded; check `converged`.
QuadratureResult integrate(const MonotoneFn& f, double lo, double hi,
                           const QuadratureConfig& cfg);

// Certified enclosure of the integral of psi over [lo, hi] (a sub-range of
// phi's codomain).
QuadratureResult integrate_inverse(const ConjugatePair& pair, double lo,
                                   double hi, const QuadratureConfig& cfg);

}  // namespace youngcert
