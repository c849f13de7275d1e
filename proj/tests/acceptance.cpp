// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance <youngcert-binary> <golden-sweep-csv>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "youngcert/legendre.hpp"
#include "youngcert/oracle.hpp"
#include "youngcert/quadrature.hpp"
#include "youngcert/young_gap.hpp"

namespace {

using namespace youngcert;
using testing::random_function;
using testing::random_in;
using testing::uniform;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_failures = 0;

void report(const std::string& id, const std::string& title,
            const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++g_failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (o.pass ? "PASS " : "FAIL ") << id << ' ' << title << " (" << timing
            << ")" << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Counts failures and keeps the first message.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  Outcome outcome(const std::string& summary = {}) const {
    std::string d = std::to_string(failures) + "/" + std::to_string(checks) + " violations";
    if (!summary.empty()) d += ", " + summary;
    if (failures) d += "; first: " + first;
    return {failures == 0, d};
  }
};

std::string at(double a, double b) { return "(" + fmt(a) + ", " + fmt(b) + ")"; }

const std::vector<std::pair<double, double>> kExponentPairs{{2.0, 2.0}, {3.0, 1.5}, {4.0, 4.0 / 3.0}};

Outcome closed_form_agreement() {
  Tally t;
  double max_width = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [alpha, beta] : kExponentPairs) {
    const PowerFamily fam(alpha, beta);
    const ConjugatePair pair(fam.derivative());
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        const double a = 0.1 * i, b = 0.1 * j;
        const Enclosure f = remainder_enclosure(pair, a, b);
        const Enclosure ub = upper_bound_enclosure(pair, a, b);
        const double f_ref = oracle::power_remainder(fam, a, b);
        const double ub_ref = oracle::power_upper_bound(fam, a, b);
        max_width = std::max({max_width, f.width(), ub.width()});
        t.check(f.contains(f_ref), [&] { return "F misses oracle at alpha=" + fmt(alpha) + " " + at(a, b); });
        t.check(ub.contains(ub_ref), [&] { return "UB misses oracle at alpha=" + fmt(alpha) + " " + at(a, b); });
        t.check(f.width() <= 2e-9 && ub.width() <= 2e-9,
                [&] { return "width > 2e-9 at alpha=" + fmt(alpha) + " " + at(a, b); });
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  t.check(secs <= 10.0, [&] { return "runtime " + fmt(secs) + "s > 10s"; });
  return t.outcome("max width " + fmt(max_width));
}

Outcome sandwich() {
  std::mt19937_64 rng(1001);
  Tally t;
  for (int i = 0; i < 1000; ++i) {
    const ConjugatePair pair(random_function(rng));
    const double a = random_in(rng, pair.alphas()), b = random_in(rng, pair.betas());
    const Certificate c = certify(pair, a, b, 1e-8).certificate;
    t.check(c.lower_holds == BoundVerdict::kCertified && c.upper_holds == BoundVerdict::kCertified,
            [&] { return "instance " + std::to_string(i) + " at " + at(a, b); });
  }
  return t.outcome();
}

Outcome equality_iff() {
  std::mt19937_64 rng(1002);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const ConjugatePair pair(random_function(rng));
    const double a = random_in(rng, pair.alphas());
    const double b = std::clamp(pair.phi().eval(a), pair.betas().lo, pair.betas().hi);
    const CertifiedGap g = certify(pair, a, b, 1e-8);
    t.check(g.certificate.equality_case == EqualityVerdict::kEquality &&
                g.report.remainder.within(-1e-8, 1e-8) && g.report.upper_bound.within(-1e-8, 1e-8),
            [&] { return "equality missed at " + at(a, b); });
  }
  int strict = 0;
  while (strict < 200) {
    const ConjugatePair pair(random_function(rng));
    const double a = random_in(rng, pair.alphas()), b = random_in(rng, pair.betas());
    const double phi_a = pair.phi().eval(a);
    if (std::abs(phi_a - b) < 0.1) continue;
    const double psi_b = invert(pair, b).mid();
    if (testing::min_slope_on(pair.phi(), std::min(a, psi_b), std::max(a, psi_b)) < 0.1) continue;
    ++strict;
    const CertifiedGap g = certify(pair, a, b, 1e-8);
    t.check(g.certificate.equality_case == EqualityVerdict::kStrictInequality &&
                g.report.remainder.lo() > 1e-8,
            [&] { return "strict inequality missed at " + at(a, b); });
  }
  return t.outcome();
}

Outcome pair_inequality() {
  std::mt19937_64 rng(1004);
  Tally t;
  for (int i = 0; i < 1000; ++i) {
    const ConjugatePair pair(random_function(rng));
    const double a = random_in(rng, pair.alphas()), b = random_in(rng, pair.betas());
    const double a2 = random_in(rng, pair.alphas()), b2 = random_in(rng, pair.betas());
    t.check(pair_inequality_gap(pair, a, b, a2, b2).lo() >= -1e-8,
            [&] { return "negative gap at " + at(a, b) + " " + at(a2, b2); });
    const double at_ = invert(pair, b).mid();
    const double bt = std::clamp(pair.phi().eval(a), pair.betas().lo, pair.betas().hi);
    t.check(pair_inequality_gap(pair, a, b, at_, bt).within(-1e-8, 1e-8),
            [&] { return "slack not zero at " + at(a, b); });
  }
  return t.outcome();
}

Outcome proof_identity() {
  std::mt19937_64 rng(1005);
  Tally t;
  double lo_ratio = INFINITY, hi_ratio = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ConjugatePair pair(random_function(rng));
    const double a = random_in(rng, pair.alphas()), b = random_in(rng, pair.betas());
    t.check(proof_identity_residual(pair, a, b).contains(0.0),
            [&] { return "residual excludes 0 at " + at(a, b); });
    double prev = proof_identity_residual(pair, a, b, QuadratureConfig::fixed_panels(64)).width();
    for (std::int64_t n = 128; n <= 512; n *= 2) {
      const Enclosure r = proof_identity_residual(pair, a, b, QuadratureConfig::fixed_panels(n));
      const double ratio = prev / r.width();
      lo_ratio = std::min(lo_ratio, ratio);
      hi_ratio = std::max(hi_ratio, ratio);
      t.check(r.contains(0.0), [&] { return "residual excludes 0 at " + at(a, b) + " n=" + std::to_string(n); });
      t.check(ratio >= 1.8 && ratio <= 2.2,
              [&] { return "ratio " + fmt(ratio) + " at " + at(a, b) + " n=" + std::to_string(n); });
      prev = r.width();
    }
  }
  return t.outcome("ratios in [" + fmt(lo_ratio) + ", " + fmt(hi_ratio) + "]");
}

std::vector<ConjugatePair> zero_origin_families() {
  std::vector<ConjugatePair> out;
  out.emplace_back(MonotoneFn::identity(Interval(0.0, 2.0)));
  out.emplace_back(MonotoneFn::power(1.0, 2.0, Interval(0.0, 2.0)));
  out.emplace_back(MonotoneFn::power(1.0, 0.5, Interval(0.0, 2.0)));
  out.emplace_back(MonotoneFn::power(2.0, 3.0, Interval(0.0, 1.5)));
  out.emplace_back(MonotoneFn::table({{0, 0}, {0.5, 0.2}, {1, 0.9}, {1.5, 1.3}, {2, 2.5}}));
  return out;
}

// interior_only restricts the gap requirement to a > 0 and b > 0.
Outcome merkle_dominance(bool interior_only) {
  Tally t;
  double min_gap = INFINITY;
  for (const ConjugatePair& pair : zero_origin_families()) {
    const Interval& al = pair.alphas();
    const Interval& be = pair.betas();
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        const double a = i == 20 ? al.hi : al.lo + al.width() * i / 20;
        const double b = j == 20 ? be.hi : be.lo + be.width() * j / 20;
        const double ub = upper_bound_enclosure(pair, a, b).mid();
        const double merkle = merkle_bound(pair, a, b);
        t.check(ub <= merkle + 1e-9, [&] { return "UB above Merkle at " + at(a, b); });
        if (std::abs(pair.phi().eval(a) - b) < 0.1) continue;
        if (interior_only && (a == 0.0 || b == 0.0)) continue;
        min_gap = std::min(min_gap, merkle - ub);
        t.check(merkle - ub > 1e-6, [&] {
          return "Merkle - UB = " + fmt(merkle - ub) + " at " + at(a, b) + " (UB " + fmt(ub) +
                 ", Merkle " + fmt(merkle) + ")";
        });
      }
    }
  }
  const ConjugatePair id(MonotoneFn::identity(Interval(0.0, 2.0)));
  const Enclosure ub = upper_bound_enclosure(id, 2.0, 1.0);
  const double merkle = merkle_bound(id, 2.0, 1.0);
  t.check(ub.contains(1.0) && merkle == 2.0,
          [&] { return "identity at (2, 1): UB " + fmt(ub.mid()) + ", Merkle " + fmt(merkle); });
  return t.outcome("min gap " + fmt(min_gap) + "; identity (2,1): UB " + fmt(ub.mid()) +
                   " vs Merkle " + fmt(merkle));
}

Outcome width_law() {
  std::vector<MonotoneFn> fns{
      MonotoneFn::power(1.5, 2.5, Interval(0.0, 2.0)),
      MonotoneFn::power(1.0, 0.5, Interval(0.25, 3.0)),
      MonotoneFn::affine(2.0, -1.0, Interval(-1.0, 1.0)),
      MonotoneFn::exp_shift(1.0, Interval(-1.0, 1.5)),
      MonotoneFn::log_shift(0.5, Interval(0.0, 2.0)),
      MonotoneFn::table({{0, 0}, {0.3, 0.1}, {1, 1.2}, {1.7, 1.3}, {2.5, 3.0}}),
  };
  std::mt19937_64 rng(1007);
  for (int i = 0; i < 20; ++i) fns.push_back(random_function(rng));
  Tally t;
  double worst = 0.0;
  for (const MonotoneFn& f : fns) {
    const Interval& d = f.domain();
    for (std::int64_t n : {1, 16, 1024}) {
      const double expected = (f.eval(d.hi) - f.eval(d.lo)) * (d.hi - d.lo) / static_cast<double>(n);
      const double got = riemann_enclosure(f, d.lo, d.hi, n).width();
      const double rel = std::abs(got - expected) / expected;
      worst = std::max(worst, rel);
      t.check(rel <= 1e-12, [&] { return "relative error " + fmt(rel) + " at n=" + std::to_string(n); });
    }
  }
  return t.outcome("worst relative error " + fmt(worst));
}

Outcome legendre_layer() {
  using testing::Kind;
  std::mt19937_64 rng(1008);
  Tally t;
  const auto family = [&](int k) -> MonotoneFn {
    if (k == 4) {
      const double lo = uniform(rng, 0.0, 1.0);
      return MonotoneFn::log_shift(uniform(rng, 0.2, 1.0), Interval(lo, lo + uniform(rng, 0.5, 2.0)));
    }
    return random_function(rng, static_cast<Kind>(k));
  };
  double worst_anchor = 0.0;
  for (int k = 0; k < 5; ++k) {
    for (int i = 0; i < 100; ++i) {
      const LegendrePair pair(family(k), uniform(rng, -1.0, 1.0));
      const double a = random_in(rng, pair.alphas()), b = random_in(rng, pair.betas());
      const Enclosure legendre = theorem31_report(pair, a, b).remainder;
      const Enclosure young = remainder_enclosure(pair.derivatives(), a, b);
      t.check(legendre.overlaps(young), [&] {
        std::ostringstream s;
        s << "family " << k << " at " << at(a, b) << ": " << legendre << " vs " << young;
        return s.str();
      });
      const double a1 = pair.alphas().lo, b1 = pair.betas().lo;
      const double lhs = potential_value(pair, a1).mid() + conjugate_value(pair, b1).mid();
      const double err = std::abs(lhs - a1 * b1);
      worst_anchor = std::max(worst_anchor, err);
      t.check(err <= 1e-10, [&] { return "anchor identity off by " + fmt(err); });
    }
  }
  double min_holder = INFINITY;
  for (auto [alpha, beta] : kExponentPairs) {
    const PowerFamily fam(alpha, beta);
    const double b_cap = std::pow(fam.cap(), alpha - 1.0);
    for (int i = 0; i < 50; ++i) {
      for (int j = 0; j < 50; ++j) {
        const double a = fam.cap() * i / 49, b = b_cap * j / 49;
        const double g = holder_gap(fam, a, b);
        min_holder = std::min(min_holder, g);
        t.check(g >= -1e-12, [&] { return "holder gap " + fmt(g) + " at " + at(a, b); });
      }
    }
  }
  return t.outcome("worst anchor error " + fmt(worst_anchor) + ", min holder gap " + fmt(min_holder));
}

int run(const std::string& command) {
  const int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli_contract(const std::string& tool, const std::string& golden) {
  namespace fs = std::filesystem;
  Tally t;
  const fs::path dir = fs::temp_directory_path() / ("youngcert_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string spec = R"('{"kind":"power","exponent":1,"domain":[0,2]}')";
  const std::string sweep = "'" + tool + "' sweep --spec " + spec +
                            " --a-min 0 --a-max 2 --a-steps 3 --b-min 0 --b-max 2 --b-steps 3 -o ";
  const fs::path first = dir / "first.csv", second = dir / "second.csv";
  t.check(run(sweep + "'" + first.string() + "'") == 0, [] { return "first sweep failed"; });
  t.check(run(sweep + "'" + second.string() + "'") == 0, [] { return "second sweep failed"; });
  const std::string a = slurp(first), b = slurp(second), g = slurp(golden);
  t.check(!a.empty() && a == b, [] { return "sweep outputs differ across runs"; });
  t.check(!g.empty() && a == g, [] { return "sweep output differs from golden file"; });

  const std::string certify = "'" + tool + "' certify --spec " + spec + " ";
  const std::string quiet = " >/dev/null 2>&1";
  const std::vector<std::pair<std::string, int>> cases{
      {"-a 1 -b 0", 0}, {"-a 1 -b 1", 0}, {"-a 3 -b 0", 2}};
  for (const auto& [args, expected] : cases) {
    const int status = run(certify + args + quiet);
    t.check(status == expected, [&] {
      return "certify " + args + " exited " + std::to_string(status) + ", expected " +
             std::to_string(expected);
    });
  }
  fs::remove_all(dir);
  return t.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <youngcert-binary> <golden-sweep-csv>\n";
    return 2;
  }
  report("1", "closed-form agreement on power families", closed_form_agreement);
  report("2", "sandwich property on 1000 random instances", sandwich);
  report("3", "equality iff b = phi(a)", equality_iff);
  report("4", "pair inequality nonnegative with zero slack at (psi(b), phi(a))", pair_inequality);
  report("5", "proof identity residual and halving law", proof_identity);
  report("6", "Merkle dominance on zero-origin families",
         [] { return merkle_dominance(false); });
  report("6-interior", "Merkle dominance, gap requirement restricted to a > 0, b > 0 (supplementary)",
         [] { return merkle_dominance(true); });
  report("7", "Riemann width law", width_law);
  report("8", "Legendre layer: overlap, anchor identity, Holder gap", legendre_layer);
  report("9", "CLI golden sweep and exit statuses",
         [&] { return cli_contract(argv[1], argv[2]); });
  std::cout << (g_failures ? std::to_string(g_failures) + " criteria failed" : "all criteria passed")
            << std::endl;
  return g_failures ? 1 : 0;
}
