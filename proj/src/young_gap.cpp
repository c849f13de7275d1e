#include "youngcert/young_gap.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <thread>

#include "youngcert/errors.hpp"

namespace youngcert {

namespace {

void check_point(const ConjugatePair& pair, double a, double b,
                 const char* what) {
  if (!pair.alphas().contains(a) || !pair.betas().contains(b)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": (a, b) = (" << a << ", " << b << ") outside ["
        << pair.alphas().lo << ", " << pair.alphas().hi << "] x ["
        << pair.betas().lo << ", " << pair.betas().hi << "]";
    throw DomainError(msg.str());
  }
}

// phi(a) as a codomain point; interpolation may overshoot by an ulp.
double phi_at(const ConjugatePair& pair, double a) {
  return std::clamp(pair.phi().eval(a), pair.betas().lo, pair.betas().hi);
}

bool has_zero_origin(const ConjugatePair& pair) {
  return pair.alphas().lo == 0.0 && pair.betas().lo == 0.0;
}

Enclosure require_converged(const detail::RemainderParts& parts,
                            const char* what) {
  if (!parts.converged) {
    throw BudgetExceeded(std::string(what) +
                             ": quadrature budget exhausted before target width",
                         parts.value, std::max(parts.phi_panels, parts.psi_panels));
  }
  return parts.value;
}

GapReport build_report(const ConjugatePair& pair, double a, double b,
                       const Enclosure& remainder, double cert_tol) {
  GapReport report;
  report.a = a;
  report.b = b;
  report.remainder = remainder;
  report.psi_b = invert(pair, b);
  report.phi_a = pair.phi().eval(a);
  report.upper_bound = upper_bound_enclosure(pair, a, b);
  if (has_zero_origin(pair)) report.merkle_bound = merkle_bound(pair, a, b);
  report.equality_detected = detail::judge(report, cert_tol).equality_case ==
                             EqualityVerdict::kEquality;
  return report;
}

}  // namespace

std::string_view to_string(BoundVerdict v) {
  return v == BoundVerdict::kCertified ? "Certified" : "Inconclusive";
}

std::string_view to_string(EqualityVerdict v) {
  switch (v) {
    case EqualityVerdict::kEquality:
      return "Equality";
    case EqualityVerdict::kStrictInequality:
      return "StrictInequality";
    case EqualityVerdict::kInconclusive:
      break;
  }
  return "Inconclusive";
}

namespace detail {

RemainderParts remainder(const ConjugatePair& pair, const Enclosure& a,
                         double b, const QuadratureConfig& cfg) {
  check_point(pair, a.lo(), b, "remainder");
  check_point(pair, a.hi(), b, "remainder");
  const MonotoneFn& phi = pair.phi();
  const double alpha1 = pair.alphas().lo;
  const double beta1 = pair.betas().lo;

  const QuadratureResult phi_part = integrate(phi, alpha1, a.lo(), cfg);
  Enclosure phi_integral = phi_part.value;
  if (a.width() > 0.0) {
    // int_{a.lo}^{x} phi for x in a lies between width*phi(a.lo) and
    // width*phi(a.hi), and between those and 0.
    const Enclosure w(0.0, rounding::up(a.hi() - a.lo()));
    const Enclosure values(phi.eval(a.lo()), phi.eval(a.hi()));
    phi_integral = phi_integral + Enclosure::hull(w * values, Enclosure(0.0));
  }
  const QuadratureResult psi_part = integrate_inverse(pair, beta1, b, cfg);

  RemainderParts parts;
  parts.value = phi_integral + psi_part.value - a * b +
                Enclosure(alpha1) * Enclosure(beta1);
  parts.phi_panels = phi_part.panels;
  parts.psi_panels = psi_part.panels;
  parts.closed_form = phi_part.closed_form && psi_part.closed_form;
  parts.converged = phi_part.converged && psi_part.converged;
  return parts;
}

Certificate judge(const GapReport& report, double cert_tol) {
  const Enclosure& f = report.remainder;
  const Enclosure& ub = report.upper_bound;
  Certificate cert;
  cert.a = report.a;
  cert.b = report.b;
  cert.lower_holds =
      f.lo() >= -cert_tol ? BoundVerdict::kCertified : BoundVerdict::kInconclusive;

  const bool against_lo = f.hi() <= ub.lo() + cert_tol;
  bool upper = false;
  if (ub.width() <= cert_tol) {
    upper = against_lo;
    cert.effort.upper_cross_checked = true;
  } else {
    upper = f.hi() <= ub.hi() + cert_tol;
    cert.effort.upper_cross_checked = against_lo;
  }
  cert.upper_holds = upper ? BoundVerdict::kCertified : BoundVerdict::kInconclusive;

  if (f.within(-cert_tol, cert_tol) && ub.within(-cert_tol, cert_tol)) {
    cert.equality_case = EqualityVerdict::kEquality;
  } else if (f.lo() > cert_tol && ub.lo() > cert_tol) {
    cert.equality_case = EqualityVerdict::kStrictInequality;
  } else {
    cert.equality_case = EqualityVerdict::kInconclusive;
  }
  cert.effort.cert_tol = cert_tol;
  return cert;
}

}  // namespace detail

Enclosure remainder_enclosure(const ConjugatePair& pair, double a, double b,
                              const QuadratureConfig& cfg) {
  return require_converged(detail::remainder(pair, Enclosure(a), b, cfg),
                           "remainder_enclosure");
}

Enclosure upper_bound_enclosure(const ConjugatePair& pair, double a, double b) {
  check_point(pair, a, b, "upper_bound_enclosure");
  const Enclosure psi_b = invert(pair, b);
  const double phi_a = pair.phi().eval(a);
  return (Enclosure(a) - psi_b) * (Enclosure(phi_a) - b);
}

Enclosure pair_inequality_gap(const ConjugatePair& pair, double a, double b,
                              double a2, double b2,
                              const QuadratureConfig& cfg) {
  check_point(pair, a, b, "pair_inequality_gap");
  check_point(pair, a2, b2, "pair_inequality_gap");
  const Enclosure first = require_converged(
      detail::remainder(pair, Enclosure(a), b, cfg), "pair_inequality_gap");
  const Enclosure second = require_converged(
      detail::remainder(pair, Enclosure(a2), b2, cfg), "pair_inequality_gap");
  return first + second + (Enclosure(a2) - a) * (Enclosure(b2) - b);
}

Enclosure proof_identity_residual(const ConjugatePair& pair, double a, double b,
                                  const QuadratureConfig& cfg) {
  check_point(pair, a, b, "proof_identity_residual");
  const Enclosure psi_b = invert(pair, b);
  const double phi_a = phi_at(pair, a);
  const Enclosure first = require_converged(
      detail::remainder(pair, Enclosure(a), b, cfg), "proof_identity_residual");
  const Enclosure second = require_converged(
      detail::remainder(pair, psi_b, phi_a, cfg), "proof_identity_residual");
  return first + second + (psi_b - a) * (Enclosure(phi_a) - b);
}

double merkle_bound(const ConjugatePair& pair, double a, double b) {
  if (!has_zero_origin(pair)) {
    throw UnsupportedOrigin(
        "merkle_bound: only defined for alpha1 = beta1 = 0");
  }
  check_point(pair, a, b, "merkle_bound");
  const double psi_b = invert(pair, b).mid();
  return std::max(a * pair.phi().eval(a), b * psi_b) - a * b;
}

CertifiedGap certify(const ConjugatePair& pair, double a, double b,
                     double cert_tol, const QuadratureConfig& cfg) {
  if (!(cert_tol > 0.0)) throw std::invalid_argument("cert_tol must be > 0");
  check_point(pair, a, b, "certify");
  QuadratureConfig current = cfg;
  for (int round = 0;; ++round) {
    const auto parts = detail::remainder(pair, Enclosure(a), b, current);
    GapReport report = build_report(pair, a, b, parts.value, cert_tol);
    Certificate cert = detail::judge(report, cert_tol);
    cert.effort.phi_panels = parts.phi_panels;
    cert.effort.psi_panels = parts.psi_panels;
    cert.effort.target_width = current.target_width;
    cert.effort.inverse_tol = pair.inverse_tol();
    cert.effort.closed_form = parts.closed_form;
    cert.effort.refinements = round;
    cert.effort.budget_exhausted = !parts.converged;

    const bool conclusive =
        cert.lower_holds == BoundVerdict::kCertified &&
        cert.upper_holds == BoundVerdict::kCertified &&
        cert.equality_case != EqualityVerdict::kInconclusive;
    // Closed-form enclosures are already at rounding level.
    if (conclusive || parts.closed_form || !parts.converged ||
        current.target_width < 1e-15) {
      return {cert, report};
    }
    current.target_width /= 16;
  }
}

std::vector<CertifiedGap> sweep_certified(const ConjugatePair& pair,
                                          const std::vector<double>& grid_a,
                                          const std::vector<double>& grid_b,
                                          double cert_tol,
                                          const QuadratureConfig& cfg) {
  const std::size_t nb = grid_b.size();
  const std::size_t total = grid_a.size() * nb;
  for (std::size_t k = 0; k < total; ++k) {
    const double a = grid_a[k / nb];
    const double b = grid_b[k % nb];
    if (!pair.alphas().contains(a) || !pair.betas().contains(b)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "sweep: grid point " << k << " (a, b) = (" << a << ", " << b
          << ") is out of range";
      throw DomainError(msg.str(), k);
    }
  }

  std::vector<CertifiedGap> results(total);
  std::vector<std::exception_ptr> errors(total);
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::size_t>(total, 1));
  // Static interleaved partition; each slot is written by exactly one worker.
  auto work = [&](std::size_t first) {
    for (std::size_t k = first; k < total; k += workers) {
      try {
        results[k] = certify(pair, grid_a[k / nb], grid_b[k % nb], cert_tol, cfg);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (workers <= 1 || total < 2) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::vector<GapReport> sweep(const ConjugatePair& pair,
                             const std::vector<double>& grid_a,
                             const std::vector<double>& grid_b,
                             double cert_tol, const QuadratureConfig& cfg) {
  auto certified = sweep_certified(pair, grid_a, grid_b, cert_tol, cfg);
  std::vector<GapReport> reports;
  reports.reserve(certified.size());
  for (auto& c : certified) reports.push_back(std::move(c.report));
  return reports;
}

}  // namespace youngcert
