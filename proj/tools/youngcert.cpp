// youngcert: certify Young's inequality and its upper bound from the command
// line. Run `youngcert --help` for the subcommands.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "youngcert/commands.hpp"
#include "youngcert/errors.hpp"
#include "youngcert/function_spec.hpp"

namespace {

using namespace youngcert::cli;

// "-" reads stdin, "@path" reads a file, anything else is the JSON itself.
std::string read_spec_text(const std::string& arg) {
  if (arg == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw youngcert::ParseError("cannot open spec file " + arg.substr(1));
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  }
  return arg;
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--tol", opts.cert_tol, "Certification tolerance")
      ->capture_default_str();
  cmd->add_option("--target-width", opts.target_width,
                  "Target width of each Riemann enclosure")
      ->capture_default_str();
  cmd->add_option("--max-panels", opts.max_panels, "Riemann panel budget")
      ->capture_default_str();
  cmd->add_flag("--machine", opts.machine, "Emit a JSON document");
  cmd->add_flag("--riemann", opts.riemann_only,
                "Riemann refinement only (no closed-form antiderivatives)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified enclosures for the Young remainder and its bounds"};
  app.require_subcommand(1);

  std::string spec_arg;
  CommonOptions opts;

  double a = 0.0;
  double b = 0.0;
  auto* certify_cmd = app.add_subcommand("certify", "Certify 0 <= F(a,b) <= UB at one point");
  certify_cmd->add_option("--spec", spec_arg, "Function spec (JSON, @file or -)")->required();
  certify_cmd->add_option("-a,--a", a, "Point a")->required();
  certify_cmd->add_option("-b,--b", b, "Point b")->required();
  add_common(certify_cmd, opts);

  GridAxis a_axis;
  GridAxis b_axis;
  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Certify a grid of points and write CSV");
  sweep_cmd->add_option("--spec", spec_arg, "Function spec (JSON, @file or -)")->required();
  sweep_cmd->add_option("--a-min", a_axis.min)->required();
  sweep_cmd->add_option("--a-max", a_axis.max)->required();
  sweep_cmd->add_option("--a-steps", a_axis.steps)->required();
  sweep_cmd->add_option("--b-min", b_axis.min)->required();
  sweep_cmd->add_option("--b-max", b_axis.max)->required();
  sweep_cmd->add_option("--b-steps", b_axis.steps)->required();
  sweep_cmd->add_option("-o,--out", out_path, "CSV path (default stdout)");
  add_common(sweep_cmd, opts);

  std::vector<double> b_values;
  std::vector<double> theorem31;
  double anchor = 0.0;
  auto* conj_cmd = app.add_subcommand("conjugate", "Legendre conjugate values Psi(b)");
  conj_cmd->add_option("--spec", spec_arg, "Derivative phi as a function spec")->required();
  conj_cmd->add_option("-b,--b", b_values, "Points b (repeatable)");
  conj_cmd->add_option("--check-theorem31", theorem31, "Report at point A B")
      ->expected(2);
  conj_cmd->add_option("--anchor", anchor, "Phi(alpha1)")->capture_default_str();
  add_common(conj_cmd, opts);

  double alpha = 2.0;
  double cap = 2.0;
  auto* holder_cmd = app.add_subcommand("holder", "Holder-form gap for conjugate exponents");
  holder_cmd->add_option("--alpha", alpha)->required();
  holder_cmd->add_option("-a,--a", a)->required();
  holder_cmd->add_option("-b,--b", b)->required();
  holder_cmd->add_option("--cap", cap, "Domain cap M")->capture_default_str();
  holder_cmd->add_flag("--machine", opts.machine, "Emit a JSON document");

  std::string canon_arg;
  auto* spec_cmd = app.add_subcommand("spec", "Validate a spec and print its canonical form");
  spec_cmd->add_option("--spec", canon_arg, "Function spec (JSON, @file or -)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  if (holder_cmd->parsed()) {
    return run_holder(alpha, a, b, cap, opts, std::cout, std::cerr);
  }

  FunctionSpec spec;
  try {
    spec = parse_spec(read_spec_text(spec_cmd->parsed() ? canon_arg : spec_arg));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (spec_cmd->parsed()) {
    std::cout << to_json(spec) << '\n';
    return kExitOk;
  }
  if (certify_cmd->parsed()) {
    return run_certify(spec, a, b, opts, std::cout, std::cerr);
  }
  if (sweep_cmd->parsed()) {
    if (out_path.empty()) {
      return run_sweep(spec, a_axis, b_axis, opts, std::cout, std::cerr);
    }
    return run_sweep(spec, a_axis, b_axis, opts, out_path, std::cerr);
  }
  std::optional<std::pair<double, double>> point;
  if (theorem31.size() == 2) point = std::pair{theorem31[0], theorem31[1]};
  return run_conjugate(spec, b_values, point, anchor, opts, std::cout, std::cerr);
}
