#pragma once

#include "charp/ring.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace charp {

/// Sparse polynomial over F_p.
///
/// Terms live in two flat arrays (row-major exponents, coefficients) sorted
/// strictly descending in the ring order. No zero coefficients are stored, so
/// two polynomials are equal exactly when their arrays are equal.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  /// Takes already-canonical storage: sorted descending, no duplicates, no
  /// zero coefficients. Checked in debug builds only.
  Polynomial(Ring ring, std::vector<Exponent> exps, std::vector<Coeff> coeffs);

  static Polynomial constant(const Ring& ring, Coeff c);
  static Polynomial constant(const Ring& ring, const Integer& c);
  static Polynomial one(const Ring& ring) { return constant(ring, Coeff{1}); }
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial term(const Ring& ring, std::span<const Exponent> exps, Coeff c = 1);
  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static Polynomial from_terms(const Ring& ring, std::vector<std::pair<Monomial, Coeff>> terms);

  const Ring& ring() const { return ring_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return coeffs_.size() == 1; }

  std::span<const Exponent> exponents(std::size_t i) const {
    const auto n = ring_.nvars();
    return {exps_.data() + i * n, n};
  }
  Coeff coeff(std::size_t i) const { return coeffs_[i]; }
  Monomial monomial(std::size_t i) const { return Monomial(exponents(i)); }
  std::span<const Exponent> lead_exponents() const { return exponents(0); }
  Coeff lead_coeff() const { return coeffs_.front(); }
  const std::vector<Exponent>& raw_exponents() const { return exps_; }
  const std::vector<Coeff>& raw_coeffs() const { return coeffs_; }

  /// Total degree; zero polynomial reports 0.
  Exponent degree() const;

  Polynomial monic() const;
  Polynomial scaled(Coeff c) const;
  /// c * x^shift * this
  Polynomial mul_term(std::span<const Exponent> shift, Coeff c) const;
  /// this - c * x^shift * g, one merge pass.
  Polynomial sub_mul_term(const Polynomial& g, std::span<const Exponent> shift, Coeff c) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical text, e.g. "x^2 + 6*x*y + 3"; zero prints "0".
  std::string str() const;

  /// Descending ring-order comparison of term sequences, used to sort
  /// generator lists deterministically.
  friend int compare(const Polynomial& a, const Polynomial& b);

 private:
  Ring ring_;
  std::vector<Exponent> exps_;
  std::vector<Coeff> coeffs_;
};

void require_same_ring(const Ring& a, const Ring& b);

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// Binary exponentiation.
Polynomial poly_pow(const Polynomial& a, const Integer& m);
/// f^(p^e): every exponent scaled by p^e, coefficients fixed by Frobenius.
Polynomial frob_power(const Polynomial& f, unsigned e);
/// f^m as the product of Frobenius powers of f^(digit) over base-p digits.
Polynomial pow_base_p(const Polynomial& f, const Integer& m);

}  // namespace charp
