#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "youngcert/function_spec.hpp"
#include "youngcert/young_gap.hpp"

namespace youngcert::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInconclusive = 3;

struct CommonOptions {
  double cert_tol = kDefaultCertTol;
  double target_width = 1e-9;
  std::int64_t max_panels = std::int64_t{1} << 20;
  bool machine = false;
  // Disable closed-form antiderivatives; Riemann refinement only.
  bool riemann_only = false;

  QuadratureConfig quadrature() const;
};

struct GridAxis {
  double min = 0.0;
  double max = 0.0;
  int steps = 0;

  // steps uniformly spaced points from min to max; steps == 1 gives {min}.
  // Throws ValidationError for steps < 1 or max < min.
  std::vector<double> points(const char* name) const;
};

int run_certify(const FunctionSpec& spec, double a, double b,
                const CommonOptions& opts, std::ostream& out,
                std::ostream& err);

// Writes the CSV to `out`.
int run_sweep(const FunctionSpec& spec, const GridAxis& a_axis,
              const GridAxis& b_axis, const CommonOptions& opts,
              std::ostream& out, std::ostream& err);

// Writes the CSV to the file at `path`.
int run_sweep(const FunctionSpec& spec, const GridAxis& a_axis,
              const GridAxis& b_axis, const CommonOptions& opts,
              const std::string& path, std::ostream& err);

int run_conjugate(const FunctionSpec& spec, const std::vector<double>& b_values,
                  std::optional<std::pair<double, double>> theorem31_point,
                  double potential_anchor, const CommonOptions& opts,
                  std::ostream& out, std::ostream& err);

int run_holder(double alpha, double a, double b, double cap,
               const CommonOptions& opts, std::ostream& out, std::ostream& err);

// Header row and row formatting of sweep files.
std::string sweep_csv_header();
std::string sweep_csv_row(const GapReport& report);

// Shortest decimal with 17 significant digits ("%.17g").
std::string format_number(double x);

}  // namespace youngcert::cli
