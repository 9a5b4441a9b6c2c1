#include "charp/frobenius.hpp"

#include "charp/error.hpp"
#include "charp/groebner.hpp"
#include "charp/resource.hpp"

#include <algorithm>
#include <numeric>

namespace charp {

namespace {

/// p^e, or 0 when it exceeds every representable exponent (then every
/// exponent is its own residue and all quotients vanish).
Exponent saturated_power(std::uint64_t p, unsigned e) {
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxExponent) return 0;
  }
  return static_cast<Exponent>(q);
}

/// Appends the nonzero coefficient polynomials of h's decomposition to out.
void append_root_generators(const Polynomial& h, unsigned e, std::vector<Polynomial>& out) {
  const Ring& R = h.ring();
  const auto n = R.nvars();
  const Exponent q = saturated_power(R.p(), e);
  const std::size_t terms = h.size();
  std::vector<Exponent> residue(terms * n), quotient(terms * n);
  const auto& exps = h.raw_exponents();
  for (std::size_t i = 0; i < terms * n; ++i) {
    if (q == 0) {
      residue[i] = exps[i];
      quotient[i] = 0;
    } else {
      residue[i] = exps[i] % q;
      quotient[i] = exps[i] / q;
    }
  }
  std::vector<std::size_t> order(terms);
  std::iota(order.begin(), order.end(), 0);
  // stable: within one class the quotients keep the descending term order
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(residue.begin() + a * n, residue.begin() + (a + 1) * n,
                                        residue.begin() + b * n, residue.begin() + (b + 1) * n);
  });
  for (std::size_t start = 0; start < terms;) {
    std::size_t stop = start + 1;
    while (stop < terms && std::equal(residue.begin() + order[start] * n, residue.begin() + (order[start] + 1) * n,
                                      residue.begin() + order[stop] * n))
      ++stop;
    std::vector<Exponent> cexps;
    std::vector<Coeff> ccoeffs;
    cexps.reserve((stop - start) * n);
    for (std::size_t k = start; k < stop; ++k) {
      cexps.insert(cexps.end(), quotient.begin() + order[k] * n, quotient.begin() + (order[k] + 1) * n);
      ccoeffs.push_back(h.coeff(order[k]));
    }
    out.emplace_back(R, std::move(cexps), std::move(ccoeffs));
    start = stop;
  }
}

Ideal ideal_from_sorted(const Ring& R, std::vector<Polynomial> gens) {
  for (auto& g : gens) g = g.monic();
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) { return compare(a, b) > 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Ideal(R, std::move(gens));
}

/// Generators worth carrying into the next step: minimal ones for monomial
/// ideals, the reduced basis otherwise.
const std::vector<Polynomial>& working_generators(const Ideal& ideal) { return ideal.canonical(); }

}  // namespace

RootBasisIndex root_decomposition(const Polynomial& h, unsigned e) {
  RootBasisIndex index;
  index.e = e;
  const Ring& R = h.ring();
  const auto n = R.nvars();
  const Exponent q = saturated_power(R.p(), e);
  std::map<std::vector<Exponent>, std::vector<std::pair<Monomial, Coeff>>> buckets;
  for (std::size_t t = 0; t < h.size(); ++t) {
    auto v = h.exponents(t);
    std::vector<Exponent> r(n);
    Monomial quo(n);
    for (std::size_t k = 0; k < n; ++k) {
      r[k] = q == 0 ? v[k] : v[k] % q;
      quo[k] = q == 0 ? 0 : v[k] / q;
    }
    buckets[r].emplace_back(std::move(quo), h.coeff(t));
  }
  for (auto& [r, terms] : buckets) index.classes.emplace(r, Polynomial::from_terms(R, std::move(terms)));
  return index;
}

Ideal bracket_power(const Ideal& ideal, unsigned e) {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(frob_power(g, e));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal frob_root(const Ideal& b, unsigned e) {
  if (e == 0) return b;
  std::vector<Polynomial> gens;
  for (const auto& h : b.generators()) append_root_generators(h, e, gens);
  return ideal_from_sorted(b.ring(), std::move(gens));
}

PowerLadder::PowerLadder(Polynomial f) : f_(std::move(f)) {}

const Polynomial& PowerLadder::power(std::uint64_t r) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (cache_.size() <= r) cache_.resize(r + 1);
  if (!cache_[r]) {
    if (r == 0) {
      cache_[r] = std::make_unique<Polynomial>(Polynomial::one(f_.ring()));
    } else {
      // walk up from the largest cached power below r
      std::uint64_t k = r;
      while (k > 0 && !cache_[k]) --k;
      Polynomial acc = k == 0 ? Polynomial::one(f_.ring()) : *cache_[k];
      for (std::uint64_t j = k + 1; j <= r; ++j) {
        acc = poly_mul(acc, f_);
        if (!cache_[j]) cache_[j] = std::make_unique<Polynomial>(acc);
      }
    }
  }
  return *cache_[r];
}

Ideal root_step(const PowerLadder& f, std::uint64_t r, const Ideal& ideal) {
  check_deadline();
  const Ring& R = ideal.ring();
  if (ideal.is_zero()) return ideal;
  const Polynomial& fr = f.power(r);
  std::vector<Polynomial> gens;
  for (const auto& g : working_generators(ideal)) append_root_generators(poly_mul(fr, g), 1, gens);
  return ideal_from_sorted(R, std::move(gens));
}

Ideal mixed_root(const PowerLadder& f, const Integer& m, const Ideal& ideal, unsigned e) {
  require_same_ring(f.base().ring(), ideal.ring());
  if (m < 0) fail(ErrorCode::InvalidArgument, "mixed_root needs m >= 0");
  const Ring& R = ideal.ring();
  const Integer p = R.characteristic();
  Integer rest = m;
  Ideal current = ideal;
  for (unsigned step = 0; step < e; ++step) {
    std::uint64_t digit = to_u64(Integer(rest % p));
    rest /= p;
    if (digit == 0 && current.is_unit()) continue;  // (1)^[1/p] = (1)
    current = root_step(f, digit, current);
  }
  if (rest == 0) return current;
  return scale_ideal(pow_base_p(f.base(), rest), current);
}

Ideal mixed_root(const Polynomial& f, const Integer& m, const Ideal& ideal, unsigned e) {
  return mixed_root(PowerLadder(f), m, ideal, e);
}

}  // namespace charp
