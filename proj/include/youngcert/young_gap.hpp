#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "youngcert/enclosure.hpp"
#include "youngcert/monotone.hpp"
#include "youngcert/quadrature.hpp"

namespace youngcert {

inline constexpr double kDefaultCertTol = 1e-8;

// Everything computed about the Young remainder at one point (a, b).
struct GapReport {
  double a = 0.0;
  double b = 0.0;
  // F(a,b) = int_{alpha1}^{a} phi + int_{beta1}^{b} psi - a b + alpha1 beta1.
  Enclosure remainder;
  // -(psi(b) - a)(phi(a) - b).
  Enclosure upper_bound;
  // max{a phi(a), b psi(b)} - a b; only when alpha1 = beta1 = 0.
  std::optional<double> merkle_bound;
  Enclosure psi_b;
  double phi_a = 0.0;
  bool equality_detected = false;
};

enum class BoundVerdict { kCertified, kInconclusive };
enum class EqualityVerdict { kEquality, kStrictInequality, kInconclusive };

std::string_view to_string(BoundVerdict v);
std::string_view to_string(EqualityVerdict v);

struct Effort {
  std::int64_t phi_panels = 0;
  std::int64_t psi_panels = 0;
  double target_width = 0.0;
  double inverse_tol = 0.0;
  double cert_tol = 0.0;
  bool closed_form = false;
  // Number of times certify() tightened target_width and recomputed.
  int refinements = 0;
  // Quadrature ran out of panels on the final attempt.
  bool budget_exhausted = false;
  // The upper verdict compared F.hi against upper_bound.lo.
  bool upper_cross_checked = false;
};

struct Certificate {
  double a = 0.0;
  double b = 0.0;
  BoundVerdict lower_holds = BoundVerdict::kInconclusive;
  BoundVerdict upper_holds = BoundVerdict::kInconclusive;
  EqualityVerdict equality_case = EqualityVerdict::kInconclusive;
  Effort effort;
};

struct CertifiedGap {
  Certificate certificate;
  GapReport report;
};

// Enclosure of F(a,b). Throws DomainError for points outside the rectangle
// and BudgetExceeded when Riemann refinement cannot reach cfg.target_width.
Enclosure remainder_enclosure(const ConjugatePair& pair, double a, double b,
                              const QuadratureConfig& cfg = {});

// Enclosure of -(psi(b) - a)(phi(a) - b), with phi(a) taken as exact.
Enclosure upper_bound_enclosure(const ConjugatePair& pair, double a, double b);

// Slack F(a,b) + F(a2,b2) + (a2 - a)(b2 - b), nonnegative for every
// quadruple and zero exactly when a2 = psi(b), b2 = phi(a).
Enclosure pair_inequality_gap(const ConjugatePair& pair, double a, double b,
                              double a2, double b2,
                              const QuadratureConfig& cfg = {});

// F(a,b) + F(psi(b), phi(a)) + (psi(b) - a)(phi(a) - b), identically zero.
Enclosure proof_identity_residual(const ConjugatePair& pair, double a, double b,
                                  const QuadratureConfig& cfg = {});

// Merkle's earlier bound, using mid(psi(b)). Throws UnsupportedOrigin unless
// alpha1 = beta1 = 0.
double merkle_bound(const ConjugatePair& pair, double a, double b);

// Verdicts from remainder and upper-bound enclosures. Refines Riemann
// quadrature (when in use) until the verdicts are conclusive or the panel
// budget runs out. Domain errors still throw.
CertifiedGap certify(const ConjugatePair& pair, double a, double b,
                     double cert_tol = kDefaultCertTol,
                     const QuadratureConfig& cfg = {});

// One report per (a, b) in row-major order (a outer). Throws DomainError
// carrying the row-major index of the first out-of-range point.
std::vector<GapReport> sweep(const ConjugatePair& pair,
                             const std::vector<double>& grid_a,
                             const std::vector<double>& grid_b,
                             double cert_tol = kDefaultCertTol,
                             const QuadratureConfig& cfg = {});

// Same, keeping the certificates.
std::vector<CertifiedGap> sweep_certified(const ConjugatePair& pair,
                                          const std::vector<double>& grid_a,
                                          const std::vector<double>& grid_b,
                                          double cert_tol = kDefaultCertTol,
                                          const QuadratureConfig& cfg = {});

namespace detail {

struct RemainderParts {
  Enclosure value;
  std::int64_t phi_panels = 0;
  std::int64_t psi_panels = 0;
  bool closed_form = true;
  bool converged = true;
};

// F(a,b) with an enclosed first argument; never throws BudgetExceeded.
RemainderParts remainder(const ConjugatePair& pair, const Enclosure& a,
                         double b, const QuadratureConfig& cfg);

// Verdict rules shared with the Legendre report.
Certificate judge(const GapReport& report, double cert_tol);

}  // namespace detail

}  // namespace youngcert
