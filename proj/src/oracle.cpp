#include "youngcert/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "youngcert/errors.hpp"

namespace youngcert::oracle {

namespace {

void require_nonnegative(double a, double b, const char* what) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw DomainError(std::string(what) + ": a and b must be >= 0");
  }
}

}  // namespace

double power_remainder(const PowerFamily& family, double a, double b) {
  require_nonnegative(a, b, "power_remainder");
  const double alpha = family.alpha();
  const double beta = family.beta();
  return std::pow(a, alpha) / alpha + std::pow(b, beta) / beta - a * b;
}

double power_upper_bound(const PowerFamily& family, double a, double b) {
  require_nonnegative(a, b, "power_upper_bound");
  const double alpha = family.alpha();
  const double beta = family.beta();
  return -(std::pow(a, alpha - 1.0) - b) * (std::pow(b, beta - 1.0) - a);
}

double power_merkle_bound(const PowerFamily& family, double a, double b) {
  require_nonnegative(a, b, "power_merkle_bound");
  return std::max(std::pow(a, family.alpha()), std::pow(b, family.beta())) -
         a * b;
}

ClosedFormCase ClosedFormCase::at(const PowerFamily& family, double a,
                                  double b) {
  return {family,
          a,
          b,
          power_remainder(family, a, b),
          power_upper_bound(family, a, b),
          power_merkle_bound(family, a, b)};
}

double fine_riemann_reference(const MonotoneFn& f, double lo, double hi) {
  if (!(lo <= hi) || !f.domain().contains(lo, hi)) {
    throw DomainError("fine_riemann_reference: range outside domain");
  }
  if (lo == hi) return 0.0;
  const double h = (hi - lo) / static_cast<double>(kFineReferencePanels);
  // Pairwise blocks keep the plain sum accurate enough for a reference.
  double total = 0.0;
  constexpr long kBlock = 4096;
  for (long start = 0; start < kFineReferencePanels; start += kBlock) {
    double block = 0.0;
    for (long i = start; i < start + kBlock; ++i) {
      block += f.eval(lo + (static_cast<double>(i) + 0.5) * h);
    }
    total += block;
  }
  return total * h;
}

}  // namespace youngcert::oracle
