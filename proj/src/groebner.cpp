#include "charp/groebner.hpp"

#include "charp/error.hpp"
#include "charp/resource.hpp"

#include <algorithm>
#include <set>

namespace charp {

namespace {

/// Working copy of a polynomial whose leading terms can be retired in O(1).
struct LiveTerms {
  std::vector<Exponent> exps;
  std::vector<Coeff> coeffs;
  std::size_t head = 0;
  bool empty() const { return head == coeffs.size(); }
};

/// live[head..] - c * x^shift * g, written back into live with head reset.
void subtract_shifted(const Ring& R, LiveTerms& live, const Polynomial& g,
                      std::span<const Exponent> shift, Coeff c, std::vector<Exponent>& scratch) {
  const auto n = R.nvars();
  std::vector<Exponent> exps;
  std::vector<Coeff> coeffs;
  exps.reserve(live.exps.size() - live.head * n + g.size() * n);
  coeffs.reserve(live.coeffs.size() - live.head + g.size());
  scratch.resize(n);
  std::size_t i = live.head, j = 0;
  auto load = [&](std::size_t idx) {
    auto e = g.exponents(idx);
    for (std::size_t k = 0; k < n; ++k) scratch[k] = checked_add(e[k], shift[k]);
  };
  if (j < g.size()) load(j);
  const std::size_t len = live.coeffs.size();
  while (i < len || j < g.size()) {
    int cmp;
    if (i == len) cmp = -1;
    else if (j == g.size()) cmp = 1;
    else cmp = R.compare(live.exps.data() + i * n, scratch.data());
    if (cmp > 0) {
      exps.insert(exps.end(), live.exps.begin() + i * n, live.exps.begin() + (i + 1) * n);
      coeffs.push_back(live.coeffs[i]);
      ++i;
    } else {
      Coeff v = R.neg(R.mul(c, g.coeff(j)));
      if (cmp == 0) {
        v = R.add(live.coeffs[i], v);
        ++i;
      }
      if (v != 0) {
        exps.insert(exps.end(), scratch.begin(), scratch.end());
        coeffs.push_back(v);
      }
      if (++j < g.size()) load(j);
    }
  }
  live.exps = std::move(exps);
  live.coeffs = std::move(coeffs);
  live.head = 0;
}

struct Pair {
  std::size_t i, j;
  std::vector<Exponent> lcm;
  unsigned __int128 degree;
};

std::vector<Exponent> lcm_of(std::span<const Exponent> a, std::span<const Exponent> b) {
  std::vector<Exponent> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

bool coprime(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) return false;
  return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const std::vector<Exponent>& lcm) {
  const auto n = f.ring().nvars();
  std::vector<Exponent> sf(n), sg(n);
  auto lf = f.lead_exponents();
  auto lg = g.lead_exponents();
  for (std::size_t k = 0; k < n; ++k) {
    sf[k] = lcm[k] - lf[k];
    sg[k] = lcm[k] - lg[k];
  }
  // both inputs are monic
  return f.mul_term(sf, 1).sub_mul_term(g, sg, 1);
}

std::vector<Polynomial> sort_descending(std::vector<Polynomial> basis) {
  std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) { return compare(a, b) > 0; });
  return basis;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  const Ring& R = f.ring();
  for (const auto& g : basis) {
    require_same_ring(R, g.ring());
    if (g.is_zero()) fail(ErrorCode::InvalidArgument, "normal_form divisor is zero");
  }
  const auto n = R.nvars();
  LiveTerms live{f.raw_exponents(), f.raw_coeffs(), 0};
  std::vector<Exponent> rem_exps;
  std::vector<Coeff> rem_coeffs;
  std::vector<Exponent> shift(n), scratch;
  std::vector<Coeff> lead_inv(basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) lead_inv[b] = R.inv(basis[b].lead_coeff());
  std::size_t steps = 0;
  while (!live.empty()) {
    if ((++steps & 0xff) == 0) check_deadline();
    std::span<const Exponent> lead(live.exps.data() + live.head * n, n);
    const Polynomial* divisor = nullptr;
    std::size_t which = 0;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (divides(basis[b].lead_exponents(), lead)) {
        divisor = &basis[b];
        which = b;
        break;
      }
    }
    if (divisor == nullptr) {
      rem_exps.insert(rem_exps.end(), lead.begin(), lead.end());
      rem_coeffs.push_back(live.coeffs[live.head]);
      ++live.head;
      continue;
    }
    auto dl = divisor->lead_exponents();
    for (std::size_t k = 0; k < n; ++k) shift[k] = lead[k] - dl[k];
    Coeff c = R.mul(live.coeffs[live.head], lead_inv[which]);
    subtract_shifted(R, live, *divisor, shift, c, scratch);
  }
  return Polynomial(R, std::move(rem_exps), std::move(rem_coeffs));
}

std::vector<Polynomial> minimalize_monomials(const Ring& ring, std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), [&](const Monomial& a, const Monomial& b) {
    return ring.compare(a.data(), b.data()) < 0;
  });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  // in ascending order a divisor always precedes its multiples
  std::vector<Monomial> kept;
  for (auto& m : monomials) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(m));
  }
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) out.push_back(Polynomial::term(ring, it->span(), 1));
  return out;
}

std::vector<Polynomial> buchberger(const Ring& ring, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) continue;
    if (g.is_constant()) return {Polynomial::one(ring)};
    basis.push_back(g.monic());
  }
  if (basis.empty()) return {};

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto l = lcm_of(basis[i].lead_exponents(), basis[j].lead_exponents());
      unsigned __int128 d = 0;
      for (auto e : l) d += e;
      pending.push_back(Pair{i, j, std::move(l), d});
      open.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto is_open = [&](std::size_t a, std::size_t b) { return open.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    check_deadline();
    // normal strategy: smallest lcm, ties by ring order then indices
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      int c = ring.compare(a.lcm.data(), b.lcm.data());
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pair = std::move(*best);
    *best = std::move(pending.back());
    pending.pop_back();
    open.erase({pair.i, pair.j});

    const auto& fi = basis[pair.i];
    const auto& fj = basis[pair.j];
    if (coprime(fi.lead_exponents(), fj.lead_exponents())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (divides(basis[k].lead_exponents(), pair.lcm) && !is_open(pair.i, k) && !is_open(pair.j, k)) chain = true;
    }
    if (chain) continue;

    Polynomial h = normal_form(s_polynomial(fi, fj, pair.lcm), basis);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial::one(ring)};
    basis.push_back(h.monic());
    add_pairs_for(basis.size() - 1);
  }

  // minimalize leads, then inter-reduce tails
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      auto lk = basis[k].lead_exponents();
      auto li = basis[i].lead_exponents();
      if (divides(lk, li) && (!std::equal(lk.begin(), lk.end(), li.begin()) || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  return sort_descending(std::move(reduced));
}

std::vector<Polynomial> buchberger(const Ideal& ideal) { return buchberger(ideal.ring(), ideal.generators()); }

bool ideal_contains(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) return true;
  const auto& canon = ideal.canonical();
  if (ideal.is_monomial()) {
    for (std::size_t t = 0; t < f.size(); ++t) {
      auto e = f.exponents(t);
      bool hit = std::any_of(canon.begin(), canon.end(),
                             [&](const Polynomial& g) { return divides(g.lead_exponents(), e); });
      if (!hit) return false;
    }
    return true;
  }
  return normal_form(f, canon).is_zero();
}

bool ideal_subset(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_unit()) return true;
  const auto& gens = a.is_monomial() ? a.canonical() : a.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return ideal_contains(b, g); });
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  return a.canonical() == b.canonical();
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(poly_mul(f, g));
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal scale_ideal(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(poly_mul(f, g));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal maximal_ideal_power(const Ring& ring, unsigned d) {
  const auto n = ring.nvars();
  std::vector<Polynomial> gens;
  std::vector<Exponent> e(n, 0);
  // enumerate compositions of d into n parts
  auto rec = [&](auto&& self, std::size_t k, Exponent left) -> void {
    if (k + 1 == n) {
      e[k] = left;
      gens.push_back(Polynomial::term(ring, e, 1));
      return;
    }
    for (Exponent v = 0; v <= left; ++v) {
      e[k] = v;
      self(self, k + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return Ideal(ring, std::move(gens));
}

}  // namespace charp
