#include "youngcert/legendre.hpp"

#include <cmath>
#include <sstream>

#include "youngcert/errors.hpp"

namespace youngcert {

LegendrePair::LegendrePair(MonotoneFn phi, double potential_anchor,
                           double inverse_tol)
    : derivatives_(std::move(phi), inverse_tol),
      potential_anchor_(potential_anchor),
      conjugate_anchor_(derivatives_.alphas().lo * derivatives_.betas().lo -
                        potential_anchor) {
  if (!std::isfinite(potential_anchor)) {
    throw std::invalid_argument("potential anchor must be finite");
  }
}

LegendrePair LegendrePair::dual() const {
  return LegendrePair(phi().inverse(), conjugate_anchor_,
                      derivatives_.inverse_tol());
}

Enclosure potential_from_derivative(const MonotoneFn& phi, double anchor,
                                    double x, const QuadratureConfig& cfg) {
  if (!phi.domain().contains(x)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "potential: x = " << x << " outside [" << phi.domain().lo << ", "
        << phi.domain().hi << "]";
    throw DomainError(msg.str());
  }
  const double alpha1 = phi.domain().lo;
  if (x == alpha1) return Enclosure(anchor);
  const QuadratureResult integral = integrate(phi, alpha1, x, cfg);
  if (!integral.converged) {
    throw BudgetExceeded("potential: quadrature budget exhausted",
                         integral.value + anchor, integral.panels);
  }
  return integral.value + anchor;
}

Enclosure potential_value(const LegendrePair& pair, double a,
                          const QuadratureConfig& cfg) {
  return potential_from_derivative(pair.phi(), pair.potential_anchor(), a, cfg);
}

Enclosure pointwise_conjugate(const LegendrePair& pair, double b,
                              const QuadratureConfig& cfg) {
  const Enclosure psi_b = invert(pair.derivatives(), b);
  // Phi over the enclosure psi_b: Phi is increasing or decreasing there
  // according to the sign of phi, so bound it by both ends plus the slope.
  const Enclosure phi_lo = potential_value(pair, psi_b.lo(), cfg);
  Enclosure phi_range = phi_lo;
  if (psi_b.width() > 0.0) {
    const Enclosure w(0.0, rounding::up(psi_b.hi() - psi_b.lo()));
    const Enclosure slopes(pair.phi().eval(psi_b.lo()),
                           pair.phi().eval(psi_b.hi()));
    phi_range = phi_lo + Enclosure::hull(w * slopes, Enclosure(0.0));
  }
  return b * psi_b - phi_range;
}

Enclosure conjugate_value(const LegendrePair& pair, double b,
                          const QuadratureConfig& cfg) {
  const ConjugatePair& derivatives = pair.derivatives();
  if (!derivatives.betas().contains(b)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "conjugate_value: b = " << b << " outside [" << pair.betas().lo
        << ", " << pair.betas().hi << "]";
    throw DomainError(msg.str());
  }
  const double beta1 = pair.betas().lo;
  if (b == beta1) return Enclosure(pair.conjugate_anchor());
  const QuadratureResult integral = integrate_inverse(derivatives, beta1, b, cfg);
  if (!integral.converged) {
    throw BudgetExceeded("conjugate_value: quadrature budget exhausted",
                         integral.value + pair.conjugate_anchor(),
                         integral.panels);
  }
  const Enclosure value = integral.value + pair.conjugate_anchor();
  const Enclosure check = pointwise_conjugate(pair, b, cfg);
  if (!value.overlaps(check)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "conjugate_value: integral form " << value
        << " disagrees with pointwise Legendre formula " << check;
    throw ConsistencyError(msg.str());
  }
  return value;
}

GapReport theorem31_report(const LegendrePair& pair, double a, double b,
                           const QuadratureConfig& cfg, double cert_tol) {
  const ConjugatePair& derivatives = pair.derivatives();
  if (!pair.alphas().contains(a) || !pair.betas().contains(b)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "theorem31_report: (a, b) = (" << a << ", " << b
        << ") out of range";
    throw DomainError(msg.str());
  }
  GapReport report;
  report.a = a;
  report.b = b;
  report.remainder = potential_value(pair, a, cfg) +
                     conjugate_value(pair, b, cfg) - Enclosure(a) * b;
  report.psi_b = invert(derivatives, b);
  report.phi_a = pair.phi().eval(a);
  report.upper_bound = upper_bound_enclosure(derivatives, a, b);
  if (pair.alphas().lo == 0.0 && pair.betas().lo == 0.0) {
    report.merkle_bound = merkle_bound(derivatives, a, b);
  }
  report.equality_detected =
      detail::judge(report, cert_tol).equality_case == EqualityVerdict::kEquality;
  return report;
}

PowerFamily::PowerFamily(double alpha, double beta, double cap)
    : alpha_(alpha), beta_(beta), cap_(cap) {
  if (!(alpha > 1.0) || !(beta > 1.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    throw std::invalid_argument("power family requires alpha, beta > 1");
  }
  if (std::fabs(1.0 / alpha + 1.0 / beta - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "power family requires 1/alpha + 1/beta = 1 to within 1e-12");
  }
  if (!(cap > 0.0) || !std::isfinite(cap)) {
    throw std::invalid_argument("power family requires a finite cap > 0");
  }
}

PowerFamily PowerFamily::from_alpha(double alpha, double cap) {
  if (!(alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
  return PowerFamily(alpha, alpha / (alpha - 1.0), cap);
}

MonotoneFn PowerFamily::derivative() const {
  return MonotoneFn::power(1.0, alpha_ - 1.0, Interval(0.0, cap_));
}

LegendrePair PowerFamily::legendre_pair() const {
  return LegendrePair(derivative(), 0.0);
}

double holder_gap(const PowerFamily& family, double a, double b) {
  const double alpha = family.alpha();
  const double beta = family.beta();
  // a ranges over phi's domain, b over its codomain.
  const double b_cap = std::pow(family.cap(), alpha - 1.0);
  if (!(a >= 0.0 && a <= family.cap()) || !(b >= 0.0 && b <= b_cap)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "holder_gap: (a, b) = (" << a << ", " << b
        << ") outside [0, " << family.cap() << "] x [0, " << b_cap << "]";
    throw DomainError(msg.str());
  }
  return std::pow(b, beta) / alpha + std::pow(a, alpha) / beta -
         std::pow(b, beta - 1.0) * std::pow(a, alpha - 1.0);
}

}  // namespace youngcert
