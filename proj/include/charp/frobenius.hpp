#pragma once

#include "charp/ideal.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace charp {

/// Decomposition h = sum_r a_r^(p^e) x^r over the monomial basis with
/// exponents < p^e. Keys are the residue vectors r; values the a_r.
struct RootBasisIndex {
  unsigned e = 0;
  std::map<std::vector<Exponent>, Polynomial> classes;
};

RootBasisIndex root_decomposition(const Polynomial& h, unsigned e);

/// J^[p^e]: generators raised to the p^e-th power. Generator count preserved.
Ideal bracket_power(const Ideal& ideal, unsigned e);

/// b^[1/p^e]: the smallest ideal J with b ⊆ J^[p^e], generated by every
/// coefficient a_r of every generator's basis decomposition.
Ideal frob_root(const Ideal& b, unsigned e);

/// Cached powers f^0 .. f^(p-1) for the digit steps of mixed_root.
class PowerLadder {
 public:
  explicit PowerLadder(Polynomial f);
  const Polynomial& base() const { return f_; }
  /// f^r for r < p.
  const Polynomial& power(std::uint64_t r) const;

 private:
  Polynomial f_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<Polynomial>> cache_;
};

/// (f^m · I)^[1/p^e] without ever forming f^m.
///
/// With m = q p + r, (f^m I)^[1/p] = f^q (f^r I)^[1/p]; the recursion runs e
/// times on the base-p digits of m, so intermediate degrees stay below
/// deg(f)(p-1) plus the generator degrees. e = 0 returns f^m · I.
Ideal mixed_root(const PowerLadder& f, const Integer& m, const Ideal& ideal, unsigned e);
Ideal mixed_root(const Polynomial& f, const Integer& m, const Ideal& ideal, unsigned e);

/// One digit step: (f^r · J)^[1/p] for r < p.
Ideal root_step(const PowerLadder& f, std::uint64_t r, const Ideal& ideal);

}  // namespace charp
