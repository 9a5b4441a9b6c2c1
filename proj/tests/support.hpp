#pragma once

// Generators and independent reference implementations shared by the tests.

#include "charp/error.hpp"
#include "charp/groebner.hpp"
#include "charp/parser.hpp"
#include "charp/polynomial.hpp"

#include <map>
#include <random>
#include <vector>

namespace testing {

using namespace charp;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eedc0ffeeULL);
  return gen;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

inline std::vector<std::string> var_names(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w"};
  return {names, names + n};
}

/// Random polynomial with up to max_terms terms of total degree <= max_deg.
inline Polynomial random_poly(const Ring& R, unsigned max_deg, unsigned max_terms, bool allow_zero = true) {
  std::vector<std::pair<Monomial, Coeff>> terms;
  const unsigned t = static_cast<unsigned>(uniform(allow_zero ? 0 : 1, max_terms));
  for (unsigned i = 0; i < t; ++i) {
    Monomial m(R.nvars());
    unsigned budget = static_cast<unsigned>(uniform(0, max_deg));
    for (std::size_t v = 0; v < R.nvars(); ++v) {
      unsigned d = static_cast<unsigned>(uniform(0, budget));
      m[v] = d;
      budget -= d;
    }
    terms.emplace_back(m, uniform(1, R.p() - 1));
  }
  auto f = Polynomial::from_terms(R, std::move(terms));
  if (!allow_zero && f.is_zero()) return Polynomial::variable(R, 0);
  return f;
}

inline Polynomial random_monomial(const Ring& R, unsigned max_exp) {
  std::vector<Exponent> e(R.nvars());
  for (auto& x : e) x = uniform(0, max_exp);
  return Polynomial::term(R, e);
}

inline Ideal random_monomial_ideal(const Ring& R, unsigned gens, unsigned max_exp) {
  std::vector<Polynomial> g;
  for (unsigned i = 0; i < gens; ++i) g.push_back(random_monomial(R, max_exp));
  return Ideal(R, g);
}

inline Ideal random_ideal(const Ring& R, unsigned gens, unsigned max_deg, unsigned max_terms) {
  std::vector<Polynomial> g;
  for (unsigned i = 0; i < gens; ++i) g.push_back(random_poly(R, max_deg, max_terms, false));
  return Ideal(R, g);
}

// reference arithmetic on plain term maps --------------------------------------

using TermMap = std::map<std::vector<Exponent>, std::uint64_t>;

inline TermMap to_map(const Polynomial& f) {
  TermMap m;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto e = f.exponents(i);
    m[{e.begin(), e.end()}] = f.coeff(i);
  }
  return m;
}

inline Polynomial from_map(const Ring& R, const TermMap& m) {
  std::vector<std::pair<Monomial, Coeff>> terms;
  for (const auto& [e, c] : m)
    if (c % R.p()) terms.emplace_back(Monomial(e), c % R.p());
  return Polynomial::from_terms(R, std::move(terms));
}

/// Schoolbook product over all term pairs.
inline Polynomial naive_mul(const Polynomial& a, const Polynomial& b) {
  const auto p = a.ring().p();
  TermMap out;
  for (const auto& [ea, ca] : to_map(a))
    for (const auto& [eb, cb] : to_map(b)) {
      std::vector<Exponent> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& slot = out[e];
      slot = static_cast<std::uint64_t>((slot + static_cast<unsigned __int128>(ca) * cb) % p);
    }
  return from_map(a.ring(), out);
}

inline Polynomial naive_pow(const Polynomial& a, unsigned m) {
  Polynomial r = Polynomial::one(a.ring());
  for (unsigned i = 0; i < m; ++i) r = naive_mul(r, a);
  return r;
}

/// Root of a monomial ideal by the floor rule, independent of the basis
/// decomposition code.
inline Ideal monomial_root(const Ideal& I, unsigned e) {
  const auto& R = I.ring();
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= R.p();
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<Exponent> ex(g.lead_exponents().begin(), g.lead_exponents().end());
    for (auto& x : ex) x /= q;
    gens.push_back(Polynomial::term(R, ex));
  }
  return Ideal(R, gens);
}

/// Binomials mod p from Pascal's rule, rows 0..n.
inline std::vector<std::vector<unsigned>> pascal_mod(unsigned n, unsigned p) {
  std::vector<std::vector<unsigned>> t(n + 1, std::vector<unsigned>(n + 1, 0));
  for (unsigned i = 0; i <= n; ++i) {
    t[i][0] = 1 % p;
    for (unsigned j = 1; j <= i; ++j) t[i][j] = (t[i - 1][j - 1] + t[i - 1][j]) % p;
  }
  return t;
}

inline Ideal ideal_of(const Ring& R, const std::string& text) { return Ideal(R, parse_poly_list(R, text)); }

inline Polynomial quintic(const Ring& R) { return parse_poly(R, "x^5+y^5+z^5"); }

}  // namespace testing
