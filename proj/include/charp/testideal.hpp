#pragma once

#include "charp/frobenius.hpp"
#include "charp/rational.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace charp {

/// lambda = r / (p^a (p^s - 1)) with s minimal.
struct PFracForm {
  Integer r;
  unsigned a = 0;
  unsigned s = 1;
};

PFracForm pfrac_form(const Rational& lam, std::uint64_t p);
Rational pfrac_value(const PFracForm& form, std::uint64_t p);

enum class JumpStatus { CertifiedJump, CertifiedNotJump, Candidate };
const char* to_string(JumpStatus status);

/// Verified comparison of tau at a point with tau just to its left.
///
/// A Candidate entry describes an unresolved open cell (cell_lo, value): it
/// contains at least one jump that no candidate in the searched denominator
/// family pinned down. For those, tau_left holds tau(cell_lo) and tau_at the
/// value just below `value`.
struct JumpCertificate {
  Rational value;
  Ideal tau_at;
  Ideal tau_left;
  JumpStatus status;
  std::optional<Rational> cell_lo;
};

struct NuValue {
  unsigned e = 1;
  Integer nu;
};

struct FptResult {
  bool certified = false;
  std::optional<JumpCertificate> certificate;
  /// Always set: (lo, hi] bracketing the threshold.
  Rational lo, hi;
};

struct GapClaim {
  Rational lo, hi;  // open interval free of jumps
};

/// Test ideals tau(f^lambda) of one hypersurface, with memoized chains.
///
/// All lambda-chains run the Cartier step J -> (f^r J)^[1/p^s] through
/// mixed_root, so no power of f beyond f^(p-1) is ever multiplied out. Safe
/// to share between threads.
class TestIdeals {
 public:
  explicit TestIdeals(Polynomial f);

  const Polynomial& f() const { return ladder_.base(); }
  const Ring& ring() const { return ladder_.base().ring(); }
  const PowerLadder& ladder() const { return ladder_; }

  /// tau(f^(m/p^e)) = (f^m)^[1/p^e].
  Ideal tau_ppower(const Integer& m, unsigned e) const;
  /// Iterates J -> (f^r J)^[1/p^s] from seed to its first fixed point.
  Ideal cartier_chain(const Integer& r, unsigned s, const Ideal& seed) const;
  Ideal tau(const Rational& lam) const;
  /// tau(f^mu) for mu < lam close enough to lam.
  Ideal tau_left(const Rational& lam) const;
  JumpCertificate is_fjumping(const Rational& lam) const;
  NuValue nu(unsigned e) const;
  FptResult fpt(unsigned e_max, unsigned s_max) const;
  /// Jumps in (0, 1), localized on the grid m/p^e_res and certified inside
  /// each flagged cell. Sorted ascending; unresolved cells come back as
  /// Candidate entries.
  std::vector<JumpCertificate> jumps_in_unit_interval(unsigned e_res, unsigned s_max) const;
  /// Jumps in the half-open interval (lo, hi], certified against candidates
  /// r/(p^a(p^s-1)) with a <= a_max, s <= s_max.
  std::vector<JumpCertificate> jumps_in_interval(const Rational& lo, const Rational& hi, unsigned a_max,
                                                 unsigned s_max) const;
  /// Direct check of a gap claim: tau(lo) equals tau just below hi.
  bool verify_gap(const GapClaim& gap) const;

 private:
  void require_usable() const;
  void require_nonunit() const;
  Ideal tau_fractional(const Rational& lam) const;
  Ideal tau_left_fractional(const Rational& lam) const;
  void resolve_open(const Rational& lo, const Ideal& tau_lo, const Rational& hi, const Ideal& left_hi,
                    unsigned a_max, unsigned s_max, std::vector<JumpCertificate>& out) const;

  PowerLadder ladder_;
  mutable std::mutex memo_mu_;
  mutable std::map<std::string, Ideal> tau_memo_;
  mutable std::map<std::string, Ideal> left_memo_;
};

Ideal tau_ppower(const Polynomial& f, const Integer& m, unsigned e);
Ideal cartier_chain(const Polynomial& f, const Integer& r, unsigned s, const Ideal& seed);
Ideal tau(const Polynomial& f, const Rational& lam);
Ideal tau_left(const Polynomial& f, const Rational& lam);
JumpCertificate is_fjumping(const Polynomial& f, const Rational& lam);
NuValue nu(const Polynomial& f, unsigned e);
FptResult fpt(const Polynomial& f, unsigned e_max, unsigned s_max);
std::vector<JumpCertificate> jumps_in_unit_interval(const Polynomial& f, unsigned e_res, unsigned s_max);

/// p^e mu - r, for mu in (lambda_m, lambda_{m+1}] with lambda = r/(p^e-1),
/// lambda_m = (1 - p^(-me)) lambda and m >= 1. Throws OutOfInterval.
Rational transport_jump(const Rational& mu, const Integer& r, unsigned e, std::uint64_t p);

/// With at most d jumps below lambda = r/(p^e-1), none lie in
/// (lambda_d, lambda). Pure arithmetic; validity rests on d.
GapClaim gap_certificate(const Polynomial& f, const Integer& r, unsigned e, unsigned d);

/// binomial(n + floor(M lam), n): bound on the number of jumps below lam of
/// a polynomial of degree <= M in n variables.
Integer jump_count_bound(unsigned n, unsigned M, const Rational& lam);

}  // namespace charp
