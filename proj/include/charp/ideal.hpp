#pragma once

#include "charp/polynomial.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace charp {

/// Finitely generated ideal of a polynomial ring.
///
/// Immutable value; the reduced Groebner basis is computed on first request
/// and then shared by all copies. Monomial ideals (every generator a single
/// term) get their canonical form by divisibility minimalization alone.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> gens);

  static Ideal unit(const Ring& ring);
  static Ideal zero(const Ring& ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return state_->gens; }
  bool is_monomial() const { return state_->monomial; }

  /// Unique reduced Groebner basis: monic, sorted by descending lead term.
  /// (1) for the unit ideal, empty for the zero ideal.
  const std::vector<Polynomial>& canonical() const;

  bool is_unit() const;
  bool is_zero() const { return state_->gens.empty(); }

  /// "(g1, g2, ...)" over the canonical basis.
  std::string str() const;
  std::vector<std::string> generator_strings() const;

 private:
  struct State {
    std::vector<Polynomial> gens;
    bool monomial = true;
    mutable std::once_flag once;
    mutable std::vector<Polynomial> canon;
  };
  Ring ring_;
  std::shared_ptr<const State> state_;
};

}  // namespace charp
