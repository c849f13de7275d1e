#include "youngcert/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <variant>
#include <vector>

#include "youngcert/compensated_sum.hpp"
#include "youngcert/errors.hpp"

namespace youngcert {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_range(const Interval& dom, double lo, double hi, const char* what) {
  if (!(lo <= hi) || !dom.contains(lo, hi)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": [" << lo << ", " << hi << "] not inside [" << dom.lo
        << ", " << dom.hi << "]";
    throw DomainError(msg.str());
  }
}

void check_panels(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("panel count must be >= 1");
}

double node(double lo, double hi, double h, std::int64_t i, std::int64_t n) {
  return i == n ? hi : lo + static_cast<double>(i) * h;
}

// Shared refinement loop over any n -> Enclosure sum rule.
template <class Rule>
QuadratureResult refine(Rule&& rule, double lo, double hi,
                        const QuadratureConfig& cfg) {
  cfg.validate();
  std::int64_t n = cfg.initial_panels;
  for (;;) {
    const Enclosure e = rule(n);
    if (lo == hi || e.width() <= cfg.target_width) return {e, n, false, true};
    if (n > cfg.max_panels / 2) return {e, n, false, false};
    n *= 2;
  }
}

struct Integral {
  double value;
  double magnitude;
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Integral exact_integral(const MonotoneFn& f, double lo, double hi) {
  auto from_antiderivative = [](double g_hi, double g_lo) {
    return Integral{g_hi - g_lo, std::fabs(g_hi) + std::fabs(g_lo)};
  };
  return std::visit(
      overloaded{
          [&](const PowerLaw& p) {
            const double e = p.exponent + 1.0;
            auto g = [&](double x) { return p.coefficient * std::pow(x, e) / e; };
            return from_antiderivative(g(hi), g(lo));
          },
          [&](const AffineMap& a) {
            const double f_lo = a.slope * lo + a.intercept;
            const double f_hi = a.slope * hi + a.intercept;
            return Integral{(hi - lo) * (0.5 * (f_lo + f_hi)),
                            (hi - lo) * std::max(std::fabs(f_lo), std::fabs(f_hi))};
          },
          [&](const ExpShift& e) {
            const double growth = std::exp(lo) * std::expm1(hi - lo);
            const double linear = e.shift * (hi - lo);
            return Integral{growth - linear,
                            std::exp(hi) + std::fabs(linear)};
          },
          [&](const LogShift& l) {
            auto g = [&](double x) {
              const double u = x + l.shift;
              return u * std::log(u) - u;
            };
            return from_antiderivative(g(hi), g(lo));
          },
          [&](const SampleTable& t) {
            // Trapezoids between breakpoints are exact for the interpolant.
            CompensatedSum sum;
            double x0 = lo;
            double y0 = f.eval(lo);
            auto it = std::upper_bound(t.xs.begin(), t.xs.end(), lo);
            for (; it != t.xs.end() && *it < hi; ++it) {
              const auto i = static_cast<std::size_t>(it - t.xs.begin());
              sum += (t.xs[i] - x0) * (0.5 * (y0 + t.ys[i]));
              x0 = t.xs[i];
              y0 = t.ys[i];
            }
            sum += (hi - x0) * (0.5 * (y0 + f.eval(hi)));
            return Integral{sum.value(), sum.magnitude()};
          },
      },
      f.body());
}

}  // namespace

void QuadratureConfig::validate() const {
  if (initial_panels < 1 || initial_panels > max_panels) {
    throw std::invalid_argument(
        "quadrature config requires 1 <= initial_panels <= max_panels");
  }
  if (!(target_width > 0.0)) {
    throw std::invalid_argument("quadrature config requires target_width > 0");
  }
}

QuadratureConfig QuadratureConfig::fixed_panels(std::int64_t n) {
  check_panels(n);
  return {n, n, std::numeric_limits<double>::infinity(), false};
}

Enclosure riemann_enclosure(const MonotoneFn& f, double lo, double hi,
                            std::int64_t n) {
  check_range(f.domain(), lo, hi, "riemann_enclosure");
  check_panels(n);
  if (lo == hi) return Enclosure(0.0);
  const double h = (hi - lo) / static_cast<double>(n);
  // Left and right sums share the interior nodes, so they are formed from one
  // interior sum and differ only in the end terms.
  CompensatedSum interior;
  for (std::int64_t i = 1; i < n; ++i) interior += f.eval(node(lo, hi, h, i, n));
  CompensatedSum lower = interior;
  CompensatedSum upper = interior;
  lower += f.eval(lo);
  upper += f.eval(hi);
  return {lower.value() * h, upper.value() * h};
}

Enclosure inverse_riemann_enclosure(const ConjugatePair& pair, double lo,
                                    double hi, std::int64_t n) {
  check_range(pair.betas(), lo, hi, "inverse_riemann_enclosure");
  check_panels(n);
  if (lo == hi) return Enclosure(0.0);
  const double h = (hi - lo) / static_cast<double>(n);
  CompensatedSum lower;
  CompensatedSum upper;
  Enclosure prev = invert(pair, lo);
  for (std::int64_t i = 1; i <= n; ++i) {
    const Enclosure next = invert(pair, node(lo, hi, h, i, n));
    lower += prev.lo();
    upper += next.hi();
    prev = next;
  }
  return {lower.value() * h, upper.value() * h};
}

QuadratureResult refine_to_width(const MonotoneFn& f, double lo, double hi,
                                 const QuadratureConfig& cfg) {
  check_range(f.domain(), lo, hi, "refine_to_width");
  auto result = refine(
      [&](std::int64_t n) { return riemann_enclosure(f, lo, hi, n); }, lo, hi,
      cfg);
  if (!result.converged) {
    std::ostringstream msg;
    msg << "refine_to_width: width " << result.value.width() << " > target "
        << cfg.target_width << " at " << result.panels << " panels";
    throw BudgetExceeded(msg.str(), result.value, result.panels);
  }
  return result;
}

double rounding_allowance(double lo, double hi, double f_lo, double f_hi) {
  const double span = hi - lo;
  const double scale = std::max(std::fabs(f_lo), std::fabs(f_hi));
  return 4 * kEps *
             (span * scale + (std::fabs(lo) + std::fabs(hi)) * (f_hi - f_lo)) +
         std::numeric_limits<double>::denorm_min();
}

std::optional<Enclosure> closed_form_integral(const MonotoneFn& f, double lo,
                                              double hi) {
  check_range(f.domain(), lo, hi, "closed_form_integral");
  if (lo == hi) return Enclosure(0.0);
  const Integral exact = exact_integral(f, lo, hi);
  if (!std::isfinite(exact.value)) return std::nullopt;
  // libm results are within a couple of ulps; the second term covers the
  // difference between eval() and the true function.
  const double slack = 16 * kEps * exact.magnitude +
                       rounding_allowance(lo, hi, f.eval(lo), f.eval(hi));
  return Enclosure(exact.value).widened(slack);
}

namespace {

QuadratureResult with_closed_form(const std::optional<Enclosure>& exact,
                                  const Enclosure& coarse, std::int64_t panels,
                                  const char* what) {
  const auto both = intersect(*exact, coarse);
  if (!both) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": closed form " << *exact
        << " disagrees with Riemann enclosure " << coarse;
    throw ConsistencyError(msg.str());
  }
  return {*both, panels, true, true};
}

}  // namespace

QuadratureResult integrate(const MonotoneFn& f, double lo, double hi,
                           const QuadratureConfig& cfg) {
  check_range(f.domain(), lo, hi, "integrate");
  cfg.validate();
  if (lo == hi) {
    return {Enclosure(0.0), cfg.initial_panels, cfg.prefer_closed_form, true};
  }
  const double slack = rounding_allowance(lo, hi, f.eval(lo), f.eval(hi));
  if (cfg.prefer_closed_form) {
    if (auto exact = closed_form_integral(f, lo, hi)) {
      const Enclosure coarse =
          riemann_enclosure(f, lo, hi, cfg.initial_panels).widened(slack);
      return with_closed_form(exact, coarse, cfg.initial_panels, "integrate");
    }
  }
  auto result = refine(
      [&](std::int64_t n) { return riemann_enclosure(f, lo, hi, n); }, lo, hi,
      cfg);
  result.value = result.value.widened(slack);
  return result;
}

QuadratureResult integrate_inverse(const ConjugatePair& pair, double lo,
                                   double hi, const QuadratureConfig& cfg) {
  check_range(pair.betas(), lo, hi, "integrate_inverse");
  cfg.validate();
  if (lo == hi) {
    return {Enclosure(0.0), cfg.initial_panels, cfg.prefer_closed_form, true};
  }
  const double slack =
      rounding_allowance(lo, hi, invert(pair, lo).lo(), invert(pair, hi).hi());
  if (cfg.prefer_closed_form) {
    const MonotoneFn psi = pair.phi().inverse();
    if (psi.domain().contains(lo, hi)) {
      if (auto exact = closed_form_integral(psi, lo, hi)) {
        const Enclosure coarse =
            inverse_riemann_enclosure(pair, lo, hi, cfg.initial_panels)
                .widened(slack);
        return with_closed_form(exact, coarse, cfg.initial_panels,
                                "integrate_inverse");
      }
    }
  }
  auto result = refine(
      [&](std::int64_t n) {
        return inverse_riemann_enclosure(pair, lo, hi, n);
      },
      lo, hi, cfg);
  result.value = result.value.widened(slack);
  return result;
}

}  // namespace youngcert
