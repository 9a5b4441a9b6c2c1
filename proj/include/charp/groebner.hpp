#pragma once

#include "charp/ideal.hpp"

#include <vector>

namespace charp {

/// Remainder of multivariate division of f by basis. Every remainder term is
/// irreducible by every basis lead; divisors are tried in listed order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

/// Reduced Groebner basis of the ideal generated by gens.
///
/// Pairs are taken by the normal strategy (smallest lcm first). Pairs with
/// coprime leads and pairs covered by the chain criterion are skipped.
std::vector<Polynomial> buchberger(const Ring& ring, const std::vector<Polynomial>& gens);
std::vector<Polynomial> buchberger(const Ideal& ideal);

/// Minimal generators of the monomial ideal spanned by the given exponent
/// vectors, as monic terms sorted descending.
std::vector<Polynomial> minimalize_monomials(const Ring& ring, std::vector<Monomial> monomials);

bool ideal_contains(const Ideal& ideal, const Polynomial& f);
/// a ⊆ b
bool ideal_subset(const Ideal& a, const Ideal& b);
bool ideal_equal(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal scale_ideal(const Polynomial& f, const Ideal& ideal);
/// Ideal generated by all monomials of total degree d (the power m^d of the
/// homogeneous maximal ideal).
Ideal maximal_ideal_power(const Ring& ring, unsigned d);

inline bool operator==(const Ideal& a, const Ideal& b) { return ideal_equal(a, b); }

}  // namespace charp
