#include "charp/hsl.hpp"

#include "charp/groebner.hpp"
#include "charp/resource.hpp"

namespace charp {

Ideal cartier_step(const PowerLadder& f, const Ideal& ideal) {
  return root_step(f, f.base().ring().p() - 1, ideal);
}

Ideal cartier_step(const Polynomial& f, const Ideal& ideal) { return cartier_step(PowerLadder(f), ideal); }

HslReport hsl_number(const Polynomial& f, unsigned l_max) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "HSL number of the zero polynomial is undefined");
  if (l_max == 0) fail(ErrorCode::InvalidArgument, "l_max must be >= 1");
  const Ring& R = f.ring();
  PowerLadder ladder(f);
  HslReport report{1, {Ideal::unit(R)}, Ideal::unit(R)};
  if (f.is_constant()) {
    // a unit gives the constant chain (1), (1)
    report.chain.push_back(Ideal::unit(R));
    return report;
  }
  for (unsigned l = 0; l <= l_max; ++l) {
    check_deadline();
    Ideal next = cartier_step(ladder, report.chain.back());
    bool repeat = ideal_equal(next, report.chain.back());
    report.chain.push_back(std::move(next));
    if (repeat) {
      report.hsl = l == 0 ? 1 : l;
      report.stabilized = report.chain.back();
      return report;
    }
  }
  report.hsl = l_max;
  report.stabilized = report.chain.back();
  throw HslLimitExceeded("HSL chain still descending after " + std::to_string(l_max) + " steps", std::move(report));
}

Integer hsl_upper_bound(unsigned n, unsigned M) {
  if (n == 0 || M == 0) fail(ErrorCode::InvalidArgument, "hsl_upper_bound needs n, M >= 1");
  return binomial(Integer(n + M), n) + 1;
}

}  // namespace charp
