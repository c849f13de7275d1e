#include "youngcert/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "youngcert/errors.hpp"

namespace youngcert {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Piecewise-linear interpolation; returns sample values exactly at nodes.
double interpolate(const std::vector<double>& xs, const std::vector<double>& ys,
                   double x) {
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.end()) return ys.back();
  const auto i = static_cast<std::size_t>(it - xs.begin()) - 1;
  if (x == xs[i]) return ys[i];
  const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
  return ys[i] + (ys[i + 1] - ys[i]) * t;
}

Interval image(const Interval& domain, double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    std::ostringstream msg;
    msg << "function is not strictly increasing in floating point on ["
        << domain.lo << ", " << domain.hi << "]: endpoint images " << lo
        << ", " << hi;
    throw ValidationError(msg.str());
  }
  return {lo, hi};
}

std::string describe(double x, const Interval& range) {
  std::ostringstream msg;
  msg.precision(17);
  msg << x << " outside [" << range.lo << ", " << range.hi << "]";
  return msg.str();
}

}  // namespace

MonotoneFn::MonotoneFn(Interval domain, FunctionBody body)
    : domain_(domain), codomain_(domain), body_(std::move(body)) {
  codomain_ = image(domain_, eval_unchecked(domain_.lo),
                    eval_unchecked(domain_.hi));
}

MonotoneFn MonotoneFn::power(double coefficient, double exponent,
                             Interval domain) {
  if (!(coefficient > 0.0) || !std::isfinite(coefficient)) {
    throw ValidationError("power: coefficient must be finite and > 0");
  }
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw ValidationError("power: exponent must be finite and > 0");
  }
  if (domain.lo < 0.0) {
    throw ValidationError("power: domain must lie in [0, inf)");
  }
  return {domain, PowerLaw{coefficient, exponent}};
}

MonotoneFn MonotoneFn::affine(double slope, double intercept, Interval domain) {
  if (!(slope > 0.0) || !std::isfinite(slope)) {
    throw ValidationError("affine: slope must be finite and > 0");
  }
  if (!std::isfinite(intercept)) {
    throw ValidationError("affine: intercept must be finite");
  }
  return {domain, AffineMap{slope, intercept}};
}

MonotoneFn MonotoneFn::exp_shift(double shift, Interval domain) {
  if (!std::isfinite(shift)) throw ValidationError("exp: shift must be finite");
  if (domain.hi > 700.0) throw ValidationError("exp: domain overflows");
  return {domain, ExpShift{shift}};
}

MonotoneFn MonotoneFn::log_shift(double shift, Interval domain) {
  if (!std::isfinite(shift)) throw ValidationError("log: shift must be finite");
  if (!(domain.lo + shift > 0.0)) {
    throw ValidationError("log: x + shift must be > 0 on the domain");
  }
  return {domain, LogShift{shift}};
}

MonotoneFn MonotoneFn::table(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) {
    throw ValidationError("table: at least two points are required");
  }
  SampleTable t;
  t.xs.reserve(points.size());
  t.ys.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [x, y] = points[i];
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw ValidationError("table: non-finite value at index " +
                            std::to_string(i));
    }
    if (i > 0 && !(x > t.xs.back())) {
      throw ValidationError("table: x not strictly increasing at index " +
                            std::to_string(i));
    }
    if (i > 0 && !(y > t.ys.back())) {
      throw ValidationError("table: y not strictly increasing at index " +
                            std::to_string(i));
    }
    t.xs.push_back(x);
    t.ys.push_back(y);
  }
  Interval domain(t.xs.front(), t.xs.back());
  return {domain, std::move(t)};
}

double MonotoneFn::eval(double x) const {
  if (!domain_.contains(x)) {
    throw DomainError("eval: x = " + describe(x, domain_));
  }
  return eval_unchecked(x);
}

double MonotoneFn::eval_unchecked(double x) const {
  return std::visit(
      overloaded{
          [x](const PowerLaw& p) {
            return p.coefficient * (p.exponent == 1.0 ? x : std::pow(x, p.exponent));
          },
          [x](const AffineMap& a) { return a.slope * x + a.intercept; },
          [x](const ExpShift& e) { return std::exp(x) - e.shift; },
          [x](const LogShift& l) { return std::log(x + l.shift); },
          [x](const SampleTable& t) { return interpolate(t.xs, t.ys, x); },
      },
      body_);
}

double MonotoneFn::inverse_guess(double y) const {
  const double x = std::visit(
      overloaded{
          [y](const PowerLaw& p) {
            const double r = y / p.coefficient;
            return p.exponent == 1.0 ? r : std::pow(std::max(r, 0.0), 1.0 / p.exponent);
          },
          [y](const AffineMap& a) { return (y - a.intercept) / a.slope; },
          [y](const ExpShift& e) { return std::log(y + e.shift); },
          [y](const LogShift& l) { return std::exp(y) - l.shift; },
          [y](const SampleTable& t) { return interpolate(t.ys, t.xs, y); },
      },
      body_);
  return std::clamp(x, domain_.lo, domain_.hi);
}

MonotoneFn MonotoneFn::inverse() const {
  const Interval dom = codomain_;
  return std::visit(
      overloaded{
          [&](const PowerLaw& p) {
            const double q = 1.0 / p.exponent;
            return MonotoneFn(dom, PowerLaw{std::pow(p.coefficient, -q), q});
          },
          [&](const AffineMap& a) {
            return MonotoneFn(dom, AffineMap{1.0 / a.slope, -a.intercept / a.slope});
          },
          [&](const ExpShift& e) { return MonotoneFn(dom, LogShift{e.shift}); },
          [&](const LogShift& l) { return MonotoneFn(dom, ExpShift{l.shift}); },
          [&](const SampleTable& t) {
            return MonotoneFn(dom, SampleTable{t.ys, t.xs});
          },
      },
      body_);
}

ConjugatePair::ConjugatePair(MonotoneFn phi, double inverse_tol,
                             bool closed_form_inverse, int bisection_budget)
    : phi_(std::move(phi)),
      inverse_tol_(inverse_tol),
      closed_form_inverse_(closed_form_inverse),
      bisection_budget_(bisection_budget) {
  if (!(inverse_tol_ > 0.0)) {
    throw std::invalid_argument("inverse_tol must be > 0");
  }
  if (bisection_budget_ < 1) {
    throw std::invalid_argument("bisection budget must be >= 1");
  }
}

ConjugatePair ConjugatePair::swapped() const {
  return ConjugatePair(phi_.inverse(), inverse_tol_, closed_form_inverse_,
                       bisection_budget_);
}

Enclosure invert(const ConjugatePair& pair, double y,
                 std::vector<Enclosure>* trace) {
  const MonotoneFn& f = pair.phi();
  const Interval& dom = f.domain();
  if (!f.codomain().contains(y)) {
    throw DomainError("invert: y = " + describe(y, f.codomain()));
  }
  const double tol = pair.inverse_tol();
  const double pad = tol / 4;
  auto padded = [&](double lo, double hi) {
    return Enclosure(std::max(dom.lo, lo - pad), std::min(dom.hi, hi + pad));
  };

  if (pair.closed_form_inverse()) {
    const double guess = f.inverse_guess(y);
    const Enclosure candidate = padded(guess, guess);
    if (f.eval(candidate.lo()) <= y && y <= f.eval(candidate.hi())) {
      if (trace) trace->push_back(candidate);
      return candidate;
    }
  }

  // Invariant: f(lo) <= y <= f(hi).
  double lo = dom.lo;
  double hi = dom.hi;
  bool done = false;
  for (int step = 0; step < pair.bisection_budget(); ++step) {
    if (trace) trace->emplace_back(lo, hi);
    const double mid = lo + 0.5 * (hi - lo);
    if (hi - lo <= tol / 2 || mid <= lo || mid >= hi) {
      done = true;
      break;
    }
    if (f.eval(mid) <= y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (!done) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "invert: bracket [" << lo << ", " << hi << "] for y = " << y
        << " still wider than " << tol << " after " << pair.bisection_budget()
        << " bisection steps";
    throw ConvergenceError(msg.str());
  }
  const Enclosure result = padded(lo, hi);
  if (!(f.eval(result.lo()) <= y && y <= f.eval(result.hi()))) {
    throw ConvergenceError("invert: bracket lost its sign condition; "
                           "function is not increasing");
  }
  return result;
}

MonotoneAudit verify_monotone(const MonotoneFn& f, int n_probe,
                              double min_slope) {
  if (n_probe < 2) throw std::invalid_argument("verify_monotone: n_probe < 2");
  const Interval& dom = f.domain();
  const double h = dom.width() / n_probe;
  MonotoneAudit audit{true, std::numeric_limits<double>::infinity(), dom.lo,
                      static_cast<std::size_t>(n_probe) + 1};
  double x0 = dom.lo;
  double y0 = f.eval(x0);
  for (int i = 1; i <= n_probe; ++i) {
    const double x1 = (i == n_probe) ? dom.hi : dom.lo + i * h;
    const double y1 = f.eval(x1);
    const double slope = (y1 - y0) / (x1 - x0);
    if (slope < audit.min_slope) {
      audit.min_slope = slope;
      audit.min_slope_at = x0;
    }
    x0 = x1;
    y0 = y1;
  }
  audit.pass = audit.min_slope >= min_slope;
  return audit;
}

}  // namespace youngcert
