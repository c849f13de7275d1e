#pragma once

#include "youngcert/enclosure.hpp"
#include "youngcert/monotone.hpp"
#include "youngcert/quadrature.hpp"
#include "youngcert/young_gap.hpp"

namespace youngcert {

// Convex potentials Phi on [alpha1, alpha2] and Psi on [beta1, beta2] that are
// Legendre transforms of each other, stored as the derivative phi plus the
// anchor Phi(alpha1). Psi(beta1) is fixed by Phi(alpha1) + Psi(beta1) =
// alpha1 * beta1. Values are computed on demand by quadrature.
class LegendrePair {
 public:
  LegendrePair(MonotoneFn phi, double potential_anchor,
               double inverse_tol = kDefaultInverseTol);

  const ConjugatePair& derivatives() const { return derivatives_; }
  const MonotoneFn& phi() const { return derivatives_.phi(); }
  const Interval& alphas() const { return derivatives_.alphas(); }
  const Interval& betas() const { return derivatives_.betas(); }

  // Phi(alpha1) and Psi(beta1).
  double potential_anchor() const { return potential_anchor_; }
  double conjugate_anchor() const { return conjugate_anchor_; }

  // (Psi, Phi): the pair seen from the conjugate side.
  LegendrePair dual() const;

 private:
  ConjugatePair derivatives_;
  double potential_anchor_;
  double conjugate_anchor_;
};

// anchor + int_{alpha1}^{x} phi.
Enclosure potential_from_derivative(const MonotoneFn& phi, double anchor,
                                    double x, const QuadratureConfig& cfg = {});

// Phi(a).
Enclosure potential_value(const LegendrePair& pair, double a,
                          const QuadratureConfig& cfg = {});

// Psi(b) = Psi(beta1) + int_{beta1}^{b} psi. Cross-checked against the
// pointwise formula b psi(b) - Phi(psi(b)); throws ConsistencyError if the two
// enclosures are disjoint.
Enclosure conjugate_value(const LegendrePair& pair, double b,
                          const QuadratureConfig& cfg = {});

// b psi(b) - Phi(psi(b)) with psi(b) from invert(); the cross-check route.
Enclosure pointwise_conjugate(const LegendrePair& pair, double b,
                              const QuadratureConfig& cfg = {});

// Report of 0 <= Phi(a) + Psi(b) - ab <= -(Phi'(a) - b)(Psi'(b) - a).
GapReport theorem31_report(const LegendrePair& pair, double a, double b,
                           const QuadratureConfig& cfg = {},
                           double cert_tol = kDefaultCertTol);

// Conjugate exponents alpha, beta > 1 with 1/alpha + 1/beta = 1, on domains
// capped at `cap`: Phi(a) = a^alpha / alpha, phi(x) = x^(alpha-1) on [0, cap].
class PowerFamily {
 public:
  PowerFamily(double alpha, double beta, double cap = 2.0);
  static PowerFamily from_alpha(double alpha, double cap = 2.0);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double cap() const { return cap_; }

  MonotoneFn derivative() const;
  LegendrePair legendre_pair() const;

 private:
  double alpha_;
  double beta_;
  double cap_;
};

// (1/alpha) b^beta + (1/beta) a^alpha - b^(beta-1) a^(alpha-1) >= 0.
double holder_gap(const PowerFamily& family, double a, double b);

}  // namespace youngcert
