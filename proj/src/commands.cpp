#include "youngcert/commands.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "youngcert/errors.hpp"
#include "youngcert/legendre.hpp"

namespace youngcert::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Runs a command body, mapping exceptions onto exit statuses.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const UnsupportedOrigin& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

ordered_json enclosure_fields(const GapReport& r) {
  ordered_json doc;
  doc["a"] = r.a;
  doc["b"] = r.b;
  doc["F_lo"] = r.remainder.lo();
  doc["F_hi"] = r.remainder.hi();
  doc["ub_lo"] = r.upper_bound.lo();
  doc["ub_hi"] = r.upper_bound.hi();
  doc["merkle"] = r.merkle_bound ? ordered_json(*r.merkle_bound) : ordered_json(nullptr);
  doc["phi_a"] = r.phi_a;
  doc["psi_b_lo"] = r.psi_b.lo();
  doc["psi_b_hi"] = r.psi_b.hi();
  doc["equality_detected"] = r.equality_detected;
  return doc;
}

ordered_json certificate_json(const CertifiedGap& gap) {
  ordered_json doc = enclosure_fields(gap.report);
  const Certificate& c = gap.certificate;
  doc["verdicts"] = {{"lower", std::string(to_string(c.lower_holds))},
                     {"upper", std::string(to_string(c.upper_holds))},
                     {"equality", std::string(to_string(c.equality_case))}};
  const Effort& e = c.effort;
  doc["effort"] = {{"phi_panels", e.phi_panels},
                   {"psi_panels", e.psi_panels},
                   {"target_width", e.target_width},
                   {"inverse_tol", e.inverse_tol},
                   {"cert_tol", e.cert_tol},
                   {"closed_form", e.closed_form},
                   {"refinements", e.refinements},
                   {"budget_exhausted", e.budget_exhausted},
                   {"upper_cross_checked", e.upper_cross_checked}};
  return doc;
}

std::string show(const Enclosure& e) {
  return "[" + format_number(e.lo()) + ", " + format_number(e.hi()) + "]";
}

void print_report(std::ostream& out, const GapReport& r) {
  out << "a               = " << format_number(r.a) << '\n'
      << "b               = " << format_number(r.b) << '\n'
      << "phi(a)          = " << format_number(r.phi_a) << '\n'
      << "psi(b)          in " << show(r.psi_b) << '\n'
      << "F(a,b)          in " << show(r.remainder) << '\n'
      << "upper bound     in " << show(r.upper_bound) << '\n'
      << "merkle bound    = "
      << (r.merkle_bound ? format_number(*r.merkle_bound) : std::string("n/a"))
      << '\n';
}

bool bounds_certified(const Certificate& c) {
  return c.lower_holds == BoundVerdict::kCertified &&
         c.upper_holds == BoundVerdict::kCertified;
}

}  // namespace

QuadratureConfig CommonOptions::quadrature() const {
  QuadratureConfig cfg;
  cfg.target_width = target_width;
  cfg.max_panels = max_panels;
  cfg.initial_panels = std::min<std::int64_t>(cfg.initial_panels, max_panels);
  cfg.prefer_closed_form = !riemann_only;
  cfg.validate();
  if (!(cert_tol > 0.0)) throw std::invalid_argument("--tol must be > 0");
  return cfg;
}

std::vector<double> GridAxis::points(const char* name) const {
  if (steps < 1) {
    throw ValidationError(std::string("grid: --") + name +
                          "-steps must be >= 1");
  }
  if (!(min <= max)) {
    throw ValidationError(std::string("grid: --") + name + "-min must be <= --" +
                          name + "-max");
  }
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) return {min};
  const double h = (max - min) / (steps - 1);
  for (int i = 0; i < steps; ++i) {
    pts.push_back(i == steps - 1 ? max : min + i * h);
  }
  return pts;
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string sweep_csv_header() {
  return "a,b,F_lo,F_hi,ub_lo,ub_hi,merkle,equality";
}

std::string sweep_csv_row(const GapReport& r) {
  std::string row;
  for (double v : {r.a, r.b, r.remainder.lo(), r.remainder.hi(),
                   r.upper_bound.lo(), r.upper_bound.hi()}) {
    row += format_number(v);
    row += ',';
  }
  if (r.merkle_bound) row += format_number(*r.merkle_bound);
  row += ',';
  row += r.equality_detected ? "true" : "false";
  return row;
}

int run_certify(const FunctionSpec& spec, double a, double b,
                const CommonOptions& opts, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const QuadratureConfig cfg = opts.quadrature();
    const ConjugatePair pair(build_function(spec));
    const CertifiedGap gap = certify(pair, a, b, opts.cert_tol, cfg);
    if (opts.machine) {
      out << certificate_json(gap).dump() << '\n';
    } else {
      const Certificate& c = gap.certificate;
      print_report(out, gap.report);
      out << "lower bound     " << to_string(c.lower_holds) << '\n'
          << "upper bound     " << to_string(c.upper_holds)
          << (c.effort.upper_cross_checked ? " (cross-checked against lower end)" : "")
          << '\n'
          << "equality case   " << to_string(c.equality_case) << '\n'
          << "effort          "
          << (c.effort.closed_form ? "closed form" : "riemann")
          << ", panels phi=" << c.effort.phi_panels
          << " psi=" << c.effort.psi_panels
          << ", refinements=" << c.effort.refinements
          << (c.effort.budget_exhausted ? ", budget exhausted" : "") << '\n';
    }
    return bounds_certified(gap.certificate) ? kExitOk : kExitInconclusive;
  });
}

int run_sweep(const FunctionSpec& spec, const GridAxis& a_axis,
              const GridAxis& b_axis, const CommonOptions& opts,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const QuadratureConfig cfg = opts.quadrature();
    const auto grid_a = a_axis.points("a");
    const auto grid_b = b_axis.points("b");
    const ConjugatePair pair(build_function(spec));
    const auto gaps = sweep_certified(pair, grid_a, grid_b, opts.cert_tol, cfg);
    out << sweep_csv_header() << '\n';
    bool all_certified = true;
    for (const auto& g : gaps) {
      out << sweep_csv_row(g.report) << '\n';
      all_certified = all_certified && bounds_certified(g.certificate);
    }
    return all_certified ? kExitOk : kExitInconclusive;
  });
}

int run_sweep(const FunctionSpec& spec, const GridAxis& a_axis,
              const GridAxis& b_axis, const CommonOptions& opts,
              const std::string& path, std::ostream& err) {
  std::ostringstream buffer;
  const int status = run_sweep(spec, a_axis, b_axis, opts, buffer, err);
  if (status == kExitInvalid || status == kExitFailure) return status;
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << buffer.str();
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return kExitFailure;
  }
  return status;
}

int run_conjugate(const FunctionSpec& spec, const std::vector<double>& b_values,
                  std::optional<std::pair<double, double>> theorem31_point,
                  double potential_anchor, const CommonOptions& opts,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const QuadratureConfig cfg = opts.quadrature();
    const LegendrePair pair(build_function(spec), potential_anchor);
    ordered_json doc;
    doc["potential_anchor"] = pair.potential_anchor();
    doc["conjugate_anchor"] = pair.conjugate_anchor();
    doc["values"] = ordered_json::array();
    if (!opts.machine) {
      out << "Phi(alpha1)     = " << format_number(pair.potential_anchor()) << '\n'
          << "Psi(beta1)      = " << format_number(pair.conjugate_anchor()) << '\n';
    }
    for (double b : b_values) {
      const Enclosure psi = conjugate_value(pair, b, cfg);
      if (opts.machine) {
        doc["values"].push_back({{"b", b}, {"lo", psi.lo()}, {"hi", psi.hi()}});
      } else {
        out << "Psi(" << format_number(b) << ") in " << show(psi) << '\n';
      }
    }
    int status = kExitOk;
    if (theorem31_point) {
      const auto [a, b] = *theorem31_point;
      const GapReport report = theorem31_report(pair, a, b, cfg, opts.cert_tol);
      const Certificate c = detail::judge(report, opts.cert_tol);
      if (!bounds_certified(c)) status = kExitInconclusive;
      if (opts.machine) {
        ordered_json t = enclosure_fields(report);
        t["verdicts"] = {{"lower", std::string(to_string(c.lower_holds))},
                         {"upper", std::string(to_string(c.upper_holds))},
                         {"equality", std::string(to_string(c.equality_case))}};
        doc["legendre_report"] = t;
      } else {
        out << "-- Phi(a) + Psi(b) - ab against -(Phi'(a) - b)(Psi'(b) - a)\n";
        print_report(out, report);
        out << "lower bound     " << to_string(c.lower_holds) << '\n'
            << "upper bound     " << to_string(c.upper_holds) << '\n'
            << "equality case   " << to_string(c.equality_case) << '\n';
      }
    }
    if (opts.machine) out << doc.dump() << '\n';
    return status;
  });
}

int run_holder(double alpha, double a, double b, double cap,
               const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PowerFamily family = PowerFamily::from_alpha(alpha, cap);
    const double gap = holder_gap(family, a, b);
    const bool holds = gap >= -1e-12;
    if (opts.machine) {
      ordered_json doc;
      doc["alpha"] = family.alpha();
      doc["beta"] = family.beta();
      doc["a"] = a;
      doc["b"] = b;
      doc["gap"] = gap;
      doc["holds"] = holds;
      out << doc.dump() << '\n';
    } else {
      out << "alpha = " << format_number(family.alpha())
          << ", beta = " << format_number(family.beta()) << '\n'
          << "(1/alpha) b^beta + (1/beta) a^alpha - b^(beta-1) a^(alpha-1) = "
          << format_number(gap) << '\n';
    }
    return holds ? kExitOk : kExitInconclusive;
  });
}

}  // namespace youngcert::cli
