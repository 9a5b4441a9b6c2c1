#include "charp/testideal.hpp"

#include "charp/error.hpp"
#include "charp/groebner.hpp"
#include "charp/resource.hpp"

#include <algorithm>

namespace charp {

namespace {

/// Simplest r/(p^a (p^s - 1)) strictly inside (lo, hi): smallest denominator,
/// then smallest value.
std::optional<Rational> simplest_candidate(const Rational& lo, const Rational& hi, std::uint64_t p,
                                           unsigned a_max, unsigned s_max) {
  std::optional<Rational> best;
  Integer best_den;
  for (unsigned s = 1; s <= s_max; ++s) {
    Integer ps1 = ipow(p, s) - 1;
    for (unsigned a = 0; a <= a_max; ++a) {
      Integer den = ipow(p, a) * ps1;
      if (best && den > best_den) break;
      Integer r = (lo * Rational(den)).floor() + 1;
      Rational c(r, den);
      if (!(c < hi)) continue;
      if (!best || c.den() < best_den || (c.den() == best_den && c < *best)) {
        best = c;
        best_den = c.den();
      }
    }
  }
  return best;
}

}  // namespace

const char* to_string(JumpStatus status) {
  switch (status) {
    case JumpStatus::CertifiedJump: return "certified-jump";
    case JumpStatus::CertifiedNotJump: return "certified-not-jump";
    case JumpStatus::Candidate: return "candidate";
  }
  return "candidate";
}

PFracForm pfrac_form(const Rational& lam, std::uint64_t p) {
  if (lam.sign() <= 0) fail(ErrorCode::InvalidArgument, "pfrac_form needs lambda > 0");
  Integer den = lam.den();
  const Integer P = from_u64(p);
  PFracForm out;
  while (den % P == 0) {
    den /= P;
    ++out.a;
  }
  // multiplicative order of p modulo the prime-to-p part
  if (den != 1) {
    Integer pw = P % den;
    Integer acc = pw;
    out.s = 1;
    while (acc != 1) {
      acc = (acc * pw) % den;
      if (++out.s > 1'000'000) throw ResourceLimit("multiplicative order of p exceeds 10^6");
    }
  }
  out.r = lam.num() * (ipow(P, out.s) - 1) / den;
  return out;
}

Rational pfrac_value(const PFracForm& form, std::uint64_t p) {
  return Rational(form.r, ipow(p, form.a) * (ipow(p, form.s) - 1));
}

TestIdeals::TestIdeals(Polynomial f) : ladder_(std::move(f)) {}

void TestIdeals::require_usable() const {
  if (f().is_zero()) fail(ErrorCode::ZeroPolynomial, "test ideals of the zero polynomial are undefined");
}

void TestIdeals::require_nonunit() const {
  require_usable();
  if (f().is_constant()) fail(ErrorCode::UnitPolynomial, "f is a unit");
}

Ideal TestIdeals::tau_ppower(const Integer& m, unsigned e) const {
  require_usable();
  return mixed_root(ladder_, m, Ideal::unit(ring()), e);
}

Ideal TestIdeals::cartier_chain(const Integer& r, unsigned s, const Ideal& seed) const {
  Ideal current = seed;
  int direction = 0;  // +1 ascending, -1 descending
  const unsigned bound = limits().chain_bound;
  for (unsigned k = 0; k < bound; ++k) {
    check_deadline();
    Ideal next = mixed_root(ladder_, r, current, s);
    if (ideal_equal(next, current)) return current;
    if (direction == 0) {
      if (ideal_subset(current, next)) direction = 1;
      else if (ideal_subset(next, current)) direction = -1;
      else fail(ErrorCode::InvariantViolation, "Cartier chain is not monotone at its first step");
    }
    current = std::move(next);
  }
  throw ResourceLimit("Cartier chain did not stabilize within " + std::to_string(bound) + " steps");
}

Ideal TestIdeals::tau_fractional(const Rational& lam) const {
  const std::uint64_t p = ring().p();
  PFracForm form = pfrac_form(lam, p);
  Integer ps1 = ipow(p, form.s) - 1;
  Integer whole = form.r / ps1;      // floor(p^a lam)
  Integer rho = form.r - whole * ps1;  // numerator of the part below 1
  if (rho == 0) return tau_ppower(whole, form.a);
  // ascending chain B_e = (f^(rho sigma_e + 1))^[1/p^(s e)]
  Ideal seed = tau_ppower(rho + 1, form.s);
  Ideal stable = cartier_chain(rho, form.s, seed);
  return mixed_root(ladder_, whole, stable, form.a);
}

Ideal TestIdeals::tau_left_fractional(const Rational& lam) const {
  const std::uint64_t p = ring().p();
  PFracForm form = pfrac_form(lam, p);
  Integer ps1 = ipow(p, form.s) - 1;
  Integer whole = (form.r - 1) / ps1;  // ceil(p^a lam) - 1
  Integer rho = form.r - whole * ps1;  // in (0, p^s - 1]
  // descending chain K_e = (f^(rho sigma_e))^[1/p^(s e)]
  Ideal seed = tau_ppower(rho, form.s);
  Ideal stable = cartier_chain(rho, form.s, seed);
  return mixed_root(ladder_, whole, stable, form.a);
}

Ideal TestIdeals::tau(const Rational& lam) const {
  require_usable();
  if (lam.sign() < 0) fail(ErrorCode::InvalidArgument, "tau needs lambda >= 0");
  if (lam.sign() == 0 || f().is_constant()) return Ideal::unit(ring());
  const std::string key = lam.fraction();
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    if (auto it = tau_memo_.find(key); it != tau_memo_.end()) return it->second;
  }
  Integer whole = lam.floor();
  Rational frac = lam - Rational(whole, 1);
  Ideal result = frac.sign() == 0 ? Ideal(ring(), {pow_base_p(f(), whole)}) : tau_fractional(frac);
  if (frac.sign() != 0 && whole > 0) result = scale_ideal(pow_base_p(f(), whole), result);
  std::lock_guard<std::mutex> lock(memo_mu_);
  return tau_memo_.emplace(key, result).first->second;
}

Ideal TestIdeals::tau_left(const Rational& lam) const {
  require_usable();
  if (lam.sign() <= 0) fail(ErrorCode::InvalidArgument, "tau_left needs lambda > 0");
  if (f().is_constant()) return Ideal::unit(ring());
  const std::string key = lam.fraction();
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    if (auto it = left_memo_.find(key); it != left_memo_.end()) return it->second;
  }
  Integer whole = lam.ceil() - 1;
  Rational frac = lam - Rational(whole, 1);  // in (0, 1]
  Ideal result = tau_left_fractional(frac);
  if (whole > 0) result = scale_ideal(pow_base_p(f(), whole), result);
  std::lock_guard<std::mutex> lock(memo_mu_);
  return left_memo_.emplace(key, result).first->second;
}

JumpCertificate TestIdeals::is_fjumping(const Rational& lam) const {
  if (lam.sign() <= 0) fail(ErrorCode::InvalidArgument, "jumping numbers are positive");
  Ideal at = tau(lam);
  Ideal left = tau_left(lam);
  JumpStatus status = ideal_equal(at, left) ? JumpStatus::CertifiedNotJump : JumpStatus::CertifiedJump;
  return JumpCertificate{lam, at, left, status, std::nullopt};
}

NuValue TestIdeals::nu(unsigned e) const {
  require_nonunit();
  if (e == 0) fail(ErrorCode::InvalidArgument, "nu needs e >= 1");
  // tau(f^0) = (1) and tau(f^1) = (f) is proper, so nu lies in [0, p^e)
  Integer lo = 0;
  Integer hi = ipow(ring().p(), e);
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (tau_ppower(mid, e).is_unit()) lo = mid;
    else hi = mid;
  }
  return NuValue{e, lo};
}

FptResult TestIdeals::fpt(unsigned e_max, unsigned s_max) const {
  require_nonunit();
  if (e_max == 0 || s_max == 0) fail(ErrorCode::InvalidArgument, "fpt needs e_max, s_max >= 1");
  const std::uint64_t p = ring().p();
  NuValue v{};
  for (unsigned e = 1; e <= e_max; ++e) v = nu(e);
  FptResult out;
  out.lo = Rational(v.nu, ipow(p, e_max));
  out.hi = Rational(v.nu + 1, ipow(p, e_max));

  auto certify = [&](const Rational& c) -> bool {
    auto cert = is_fjumping(c);
    if (!cert.tau_left.is_unit() || cert.tau_at.is_unit()) return false;
    out.certified = true;
    out.certificate = std::move(cert);
    return true;
  };
  if (certify(out.hi)) return out;
  // the threshold now lies in the open interval (lo, hi)
  Rational lo = out.lo, hi = out.hi;
  for (unsigned steps = 0; steps < limits().max_certify_steps; ++steps) {
    auto c = simplest_candidate(lo, hi, p, e_max, s_max);
    if (!c) break;
    if (tau(*c).is_unit()) {
      lo = *c;
      continue;
    }
    if (certify(*c)) return out;
    hi = *c;
  }
  return out;
}

void TestIdeals::resolve_open(const Rational& lo, const Ideal& tau_lo, const Rational& hi, const Ideal& left_hi,
                              unsigned a_max, unsigned s_max, std::vector<JumpCertificate>& out) const {
  struct Task {
    Rational lo;
    Ideal tau_lo;
    Rational hi;
    Ideal left_hi;
  };
  std::vector<Task> stack{{lo, tau_lo, hi, left_hi}};
  unsigned steps = 0;
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    if (ideal_equal(t.tau_lo, t.left_hi)) continue;
    std::optional<Rational> c;
    if (steps < limits().max_certify_steps) c = simplest_candidate(t.lo, t.hi, ring().p(), a_max, s_max);
    if (!c) {
      out.push_back(JumpCertificate{t.hi, t.left_hi, t.tau_lo, JumpStatus::Candidate, t.lo});
      continue;
    }
    ++steps;
    auto cert = is_fjumping(*c);
    stack.push_back(Task{*c, cert.tau_at, t.hi, t.left_hi});
    stack.push_back(Task{t.lo, t.tau_lo, *c, cert.tau_left});
    if (cert.status == JumpStatus::CertifiedJump) out.push_back(std::move(cert));
  }
}

std::vector<JumpCertificate> TestIdeals::jumps_in_interval(const Rational& lo, const Rational& hi, unsigned a_max,
                                                           unsigned s_max) const {
  require_nonunit();
  if (!(lo < hi) || lo.sign() < 0) fail(ErrorCode::InvalidArgument, "jumps_in_interval needs 0 <= lo < hi");
  std::vector<JumpCertificate> out;
  auto top = is_fjumping(hi);
  if (top.status == JumpStatus::CertifiedJump) out.push_back(top);
  resolve_open(lo, tau(lo), hi, top.tau_left, a_max, s_max, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

std::vector<JumpCertificate> TestIdeals::jumps_in_unit_interval(unsigned e_res, unsigned s_max) const {
  require_nonunit();
  if (e_res == 0) fail(ErrorCode::InvalidArgument, "resolution must be >= 1");
  const std::uint64_t p = ring().p();
  Integer grid_size = ipow(p, e_res);
  if (!fits_u64(grid_size) || to_u64(grid_size) > limits().max_grid)
    throw ResourceLimit("grid p^" + std::to_string(e_res) + " exceeds the configured cap");
  const std::uint64_t q = to_u64(grid_size);

  // grid[m] = (f^m)^[1/p^e] for m < p^e, built digit by digit: every prefix
  // of low-order digits is shared between all m that start with it
  std::vector<Ideal> level{Ideal::unit(ring())};
  std::uint64_t width = 1;
  for (unsigned k = 0; k < e_res; ++k) {
    std::vector<Ideal> next;
    next.reserve(width * p);
    for (std::uint64_t d = 0; d < p; ++d)
      for (std::uint64_t idx = 0; idx < width; ++idx) next.push_back(root_step(ladder_, d, level[idx]));
    level = std::move(next);
    width *= p;
  }
  const std::vector<Ideal>& grid = level;

  const unsigned a_max = e_res + 2;
  std::vector<JumpCertificate> out;
  for (std::uint64_t m = 1; m < q; ++m) {
    if (ideal_equal(grid[m - 1], grid[m])) continue;
    Rational lo(from_u64(m - 1), grid_size);
    Rational hi(from_u64(m), grid_size);
    Ideal left = tau_left(hi);
    if (!ideal_equal(left, grid[m])) out.push_back(JumpCertificate{hi, grid[m], left, JumpStatus::CertifiedJump, {}});
    resolve_open(lo, grid[m - 1], hi, left, a_max, s_max, out);
  }
  Rational last(from_u64(q - 1), grid_size);
  resolve_open(last, grid[q - 1], Rational(1), tau_left(Rational(1)), a_max, s_max, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

bool TestIdeals::verify_gap(const GapClaim& gap) const { return ideal_equal(tau(gap.lo), tau_left(gap.hi)); }

Ideal tau_ppower(const Polynomial& f, const Integer& m, unsigned e) { return TestIdeals(f).tau_ppower(m, e); }
Ideal cartier_chain(const Polynomial& f, const Integer& r, unsigned s, const Ideal& seed) {
  return TestIdeals(f).cartier_chain(r, s, seed);
}
Ideal tau(const Polynomial& f, const Rational& lam) { return TestIdeals(f).tau(lam); }
Ideal tau_left(const Polynomial& f, const Rational& lam) { return TestIdeals(f).tau_left(lam); }
JumpCertificate is_fjumping(const Polynomial& f, const Rational& lam) { return TestIdeals(f).is_fjumping(lam); }
NuValue nu(const Polynomial& f, unsigned e) { return TestIdeals(f).nu(e); }
FptResult fpt(const Polynomial& f, unsigned e_max, unsigned s_max) { return TestIdeals(f).fpt(e_max, s_max); }
std::vector<JumpCertificate> jumps_in_unit_interval(const Polynomial& f, unsigned e_res, unsigned s_max) {
  return TestIdeals(f).jumps_in_unit_interval(e_res, s_max);
}

Rational transport_jump(const Rational& mu, const Integer& r, unsigned e, std::uint64_t p) {
  if (e == 0 || r <= 0) fail(ErrorCode::InvalidArgument, "transport_jump needs r, e >= 1");
  const Integer pe = ipow(p, e);
  const Rational lam(r, pe - 1);
  auto lambda_m = [&](unsigned m) { return (Rational(1) - Rational(Integer(1), ipow(pe, m))) * lam; };
  if (!(lambda_m(1) < mu) || !(mu < lam))
    fail(ErrorCode::OutOfInterval, mu.str() + " is not in any (lambda_m, lambda_m+1] with m >= 1");
  // mu < lam guarantees termination
  unsigned m = 1;
  while (lambda_m(m + 1) < mu) ++m;
  return Rational(pe, 1) * mu - Rational(r, 1);
}

GapClaim gap_certificate(const Polynomial& f, const Integer& r, unsigned e, unsigned d) {
  if (e == 0 || r <= 0) fail(ErrorCode::InvalidArgument, "gap_certificate needs r, e >= 1");
  const Integer pe = ipow(f.ring().p(), e);
  const Rational lam(r, pe - 1);
  const Rational lam_d = (Rational(1) - Rational(Integer(1), ipow(pe, d))) * lam;
  return GapClaim{lam_d, lam};
}

Integer jump_count_bound(unsigned n, unsigned M, const Rational& lam) {
  if (n == 0 || M == 0) fail(ErrorCode::InvalidArgument, "jump_count_bound needs n, M >= 1");
  Integer top = (Rational(static_cast<long>(M)) * lam).floor();
  if (top < 0) return 0;
  return binomial(Integer(n) + top, n);
}

}  // namespace charp
