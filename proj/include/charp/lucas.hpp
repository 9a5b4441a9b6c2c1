#pragma once

#include "charp/ring.hpp"

#include <cstdint>
#include <vector>

namespace charp {

/// Base-p digits, least significant first; zero has no digits.
struct DigitVector {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;

  Integer value() const;
  std::uint64_t at(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
};

DigitVector digits_base_p(const Integer& m, std::uint64_t p);

/// binomial(m, n) mod p by Lucas: the product of digitwise binomials.
/// n > m gives 0.
std::uint64_t binom_mod_p(const Integer& m, const Integer& n, std::uint64_t p);

/// p does not divide binomial(m, n) iff every digit of n is at most the
/// matching digit of m.
bool binom_nonzero(const Integer& m, const Integer& n, std::uint64_t p);

/// Nonvanishing of the multinomial m! / prod(k_i!) mod p: the parts must add
/// up in base p without a single carry. Throws PartsMismatch if the parts do
/// not sum to m.
bool multinomial_nonzero(const Integer& m, const std::vector<Integer>& parts, std::uint64_t p);

/// The multinomial residue itself, as a telescoping product of binomials.
std::uint64_t multinomial_mod_p(const Integer& m, const std::vector<Integer>& parts, std::uint64_t p);

/// Whether target lies in ((x_1^a + ... + x_n^a)^N)^[1/p^e], decided by
/// expanding the multinomial theorem term by term.
///
/// Coefficients are aggregated per residue class, so tuples that land in the
/// same basis class and cancel mod p are handled exactly. When a class keeps
/// several surviving terms the root ideal is not monomial and divisibility
/// cannot decide: that case throws Error(Undecidable).
bool diagonal_root_membership(const Integer& a, const Monomial& target, const Integer& N, unsigned e,
                              const Ring& ring);

}  // namespace charp
