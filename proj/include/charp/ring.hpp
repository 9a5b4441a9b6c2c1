#pragma once

#include "charp/rational.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace charp {

using Exponent = std::uint64_t;
using Coeff = std::uint64_t;

/// Hard ceiling on a single exponent; keeps degree sums inside 128 bits and
/// leaves headroom for the Frobenius guard in Limits.
inline constexpr Exponent kMaxExponent = Exponent{1} << 62;

enum class MonomialOrder { GRevLex, Lex };

const char* to_string(MonomialOrder order);
MonomialOrder parse_order(const std::string& name);

/// The ambient ring F_p[x_1..x_n] with a fixed monomial order.
///
/// A Ring is a cheap handle to immutable shared data. Two rings are equal
/// when prime, variable names and order all agree.
class Ring {
 public:
  std::uint64_t p() const { return d_->p; }
  const Integer& characteristic() const { return d_->p_big; }
  std::size_t nvars() const { return d_->vars.size(); }
  const std::vector<std::string>& vars() const { return d_->vars; }
  MonomialOrder order() const { return d_->order; }

  /// Three-way comparison of exponent vectors in the ring order.
  int compare(const Exponent* a, const Exponent* b) const;

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= d_->p ? s - d_->p : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + d_->p - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : d_->p - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<unsigned __int128>(a) * b) % d_->p);
  }
  Coeff inv(Coeff a) const;
  Coeff reduce(const Integer& v) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Data {
    std::uint64_t p;
    Integer p_big;
    std::vector<std::string> vars;
    MonomialOrder order;
  };
  explicit Ring(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend Ring make_ring(const Integer& p, std::vector<std::string> vars, MonomialOrder order);
};

/// Validates p (deterministic primality) and the variable list.
Ring make_ring(const Integer& p, std::vector<std::string> vars,
               MonomialOrder order = MonomialOrder::GRevLex);

bool is_prime(const Integer& n);

/// Exponent vector, independent of any ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {}  // NOLINT

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> span() const { return exps_; }
  const Exponent* data() const { return exps_.data(); }
  unsigned __int128 degree() const;

  bool divides(const Monomial& other) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

bool divides(std::span<const Exponent> a, std::span<const Exponent> b);

}  // namespace charp
