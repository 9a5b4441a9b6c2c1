#include "charp/polynomial.hpp"

#include "charp/error.hpp"
#include "charp/resource.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace charp {

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) fail(ErrorCode::RingMismatch, "operands live in different rings");
}

Polynomial::Polynomial(Ring ring, std::vector<Exponent> exps, std::vector<Coeff> coeffs)
    : ring_(std::move(ring)), exps_(std::move(exps)), coeffs_(std::move(coeffs)) {
#ifndef NDEBUG
  const auto n = ring_.nvars();
  assert(exps_.size() == coeffs_.size() * n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    assert(coeffs_[i] != 0 && coeffs_[i] < ring_.p());
    if (i > 0) assert(ring_.compare(exps_.data() + (i - 1) * n, exps_.data() + i * n) > 0);
  }
#endif
}

Polynomial Polynomial::constant(const Ring& ring, Coeff c) {
  c %= ring.p();
  if (c == 0) return Polynomial(ring);
  return Polynomial(ring, std::vector<Exponent>(ring.nvars(), 0), {c});
}

Polynomial Polynomial::constant(const Ring& ring, const Integer& c) {
  return constant(ring, ring.reduce(c));
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  if (index >= ring.nvars()) fail(ErrorCode::InvalidArgument, "variable index out of range");
  std::vector<Exponent> e(ring.nvars(), 0);
  e[index] = 1;
  return Polynomial(ring, std::move(e), {1});
}

Polynomial Polynomial::term(const Ring& ring, std::span<const Exponent> exps, Coeff c) {
  if (exps.size() != ring.nvars()) fail(ErrorCode::InvalidArgument, "monomial length does not match ring");
  c %= ring.p();
  if (c == 0) return Polynomial(ring);
  return Polynomial(ring, std::vector<Exponent>(exps.begin(), exps.end()), {c});
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<std::pair<Monomial, Coeff>> terms) {
  const auto n = ring.nvars();
  for (const auto& t : terms)
    if (t.first.size() != n) fail(ErrorCode::InvalidArgument, "monomial length does not match ring");
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return ring.compare(a.first.data(), b.first.data()) > 0;
  });
  std::vector<Exponent> exps;
  std::vector<Coeff> coeffs;
  for (std::size_t i = 0; i < terms.size();) {
    Coeff acc = 0;
    std::size_t j = i;
    for (; j < terms.size() && terms[j].first == terms[i].first; ++j)
      acc = ring.add(acc, terms[j].second % ring.p());
    if (acc != 0) {
      exps.insert(exps.end(), terms[i].first.span().begin(), terms[i].first.span().end());
      coeffs.push_back(acc);
    }
    i = j;
  }
  return Polynomial(ring, std::move(exps), std::move(coeffs));
}

bool Polynomial::is_constant() const {
  if (coeffs_.empty()) return true;
  if (coeffs_.size() > 1) return false;
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Exponent Polynomial::degree() const {
  Exponent best = 0;
  const auto n = ring_.nvars();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Exponent d = 0;
    for (std::size_t k = 0; k < n; ++k) d = checked_add(d, exps_[i * n + k]);
    best = std::max(best, d);
  }
  return best;
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_.p();
  if (c == 0) return Polynomial(ring_);
  Polynomial out = *this;
  for (auto& x : out.coeffs_) x = ring_.mul(x, c);
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || coeffs_.front() == 1) return *this;
  return scaled(ring_.inv(coeffs_.front()));
}

Polynomial Polynomial::mul_term(std::span<const Exponent> shift, Coeff c) const {
  c %= ring_.p();
  if (c == 0 || is_zero()) return Polynomial(ring_);
  const auto n = ring_.nvars();
  std::vector<Exponent> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = checked_add(exps_[i], shift[i % n]);
  std::vector<Coeff> coeffs(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs[i] = ring_.mul(coeffs_[i], c);
  return Polynomial(ring_, std::move(exps), std::move(coeffs));
}

Polynomial Polynomial::sub_mul_term(const Polynomial& g, std::span<const Exponent> shift, Coeff c) const {
  const auto n = ring_.nvars();
  const Ring& R = ring_;
  std::vector<Exponent> exps;
  std::vector<Coeff> coeffs;
  exps.reserve(exps_.size() + g.exps_.size());
  coeffs.reserve(coeffs_.size() + g.coeffs_.size());
  std::vector<Exponent> shifted(n);
  auto load = [&](std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) shifted[k] = checked_add(g.exps_[j * n + k], shift[k]);
  };
  std::size_t i = 0, j = 0;
  if (j < g.size()) load(j);
  while (i < size() || j < g.size()) {
    int cmp;
    if (i == size()) cmp = -1;
    else if (j == g.size()) cmp = 1;
    else cmp = R.compare(exps_.data() + i * n, shifted.data());
    if (cmp > 0) {
      exps.insert(exps.end(), exps_.begin() + i * n, exps_.begin() + (i + 1) * n);
      coeffs.push_back(coeffs_[i]);
      ++i;
    } else if (cmp < 0) {
      Coeff v = R.neg(R.mul(c, g.coeffs_[j]));
      if (v != 0) {
        exps.insert(exps.end(), shifted.begin(), shifted.end());
        coeffs.push_back(v);
      }
      if (++j < g.size()) load(j);
    } else {
      Coeff v = R.sub(coeffs_[i], R.mul(c, g.coeffs_[j]));
      if (v != 0) {
        exps.insert(exps.end(), shifted.begin(), shifted.end());
        coeffs.push_back(v);
      }
      ++i;
      if (++j < g.size()) load(j);
    }
  }
  return Polynomial(ring_, std::move(exps), std::move(coeffs));
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Exponent> zero(a.ring().nvars(), 0);
  return a.sub_mul_term(b, zero, subtract ? 1 : a.ring().p() - 1);
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
Polynomial operator-(const Polynomial& a) { return a.scaled(a.ring().p() - 1); }
Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_ && a.exps_ == b.exps_;
}

int compare(const Polynomial& a, const Polynomial& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    int c = a.ring_.compare(a.exps_.data() + i * a.ring_.nvars(), b.exps_.data() + i * b.ring_.nvars());
    if (c != 0) return c;
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] > b.coeffs_[i] ? 1 : -1;
  }
  if (a.size() != b.size()) return a.size() > b.size() ? 1 : -1;
  return 0;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const auto n = ring_.nvars();
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) os << " + ";
    bool wrote = false;
    if (coeffs_[i] != 1) {
      os << coeffs_[i];
      wrote = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      Exponent e = exps_[i * n + k];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << ring_.vars()[k];
      if (e != 1) os << '^' << e;
      wrote = true;
    }
    if (!wrote) os << coeffs_[i];
  }
  return os.str();
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  const Ring& R = a.ring();
  if (a.is_zero() || b.is_zero()) return Polynomial(R);
  const Polynomial& s = a.size() <= b.size() ? a : b;
  const Polynomial& l = a.size() <= b.size() ? b : a;
  const auto n = R.nvars();

  // Johnson-style merge: one heap entry per term of the shorter factor,
  // each walking down the longer factor.
  std::vector<Exponent> slot(s.size() * n);
  std::vector<std::size_t> next(s.size(), 0);
  auto fill = [&](std::size_t i) {
    auto si = s.exponents(i);
    auto lj = l.exponents(next[i]);
    for (std::size_t k = 0; k < n; ++k) slot[i * n + k] = checked_add(si[k], lj[k]);
  };
  auto heap_less = [&](std::size_t x, std::size_t y) {
    return R.compare(slot.data() + x * n, slot.data() + y * n) < 0;
  };
  std::vector<std::size_t> heap(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    fill(i);
    heap[i] = i;
  }
  std::make_heap(heap.begin(), heap.end(), heap_less);

  std::vector<Exponent> exps;
  std::vector<Coeff> coeffs;
  std::vector<Exponent> current(n);
  auto pop = [&]() {
    std::pop_heap(heap.begin(), heap.end(), heap_less);
    std::size_t i = heap.back();
    heap.pop_back();
    Coeff c = R.mul(s.coeff(i), l.coeff(next[i]));
    if (++next[i] < l.size()) {
      fill(i);
      heap.push_back(i);
      std::push_heap(heap.begin(), heap.end(), heap_less);
    }
    return c;
  };
  while (!heap.empty()) {
    std::copy_n(slot.begin() + heap.front() * n, n, current.begin());
    Coeff acc = pop();
    while (!heap.empty() && R.compare(slot.data() + heap.front() * n, current.data()) == 0)
      acc = R.add(acc, pop());
    if (acc != 0) {
      exps.insert(exps.end(), current.begin(), current.end());
      coeffs.push_back(acc);
    }
  }
  return Polynomial(R, std::move(exps), std::move(coeffs));
}

Polynomial poly_pow(const Polynomial& a, const Integer& m) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  Polynomial result = Polynomial::one(a.ring());
  if (m == 0) return result;
  if (a.is_zero()) return a;
  Polynomial base = a;
  Integer k = m;
  while (true) {
    check_deadline();
    if (mpz_odd_p(k.get_mpz_t())) result = poly_mul(result, base);
    k >>= 1;
    if (k == 0) break;
    base = poly_mul(base, base);
  }
  return result;
}

Polynomial frob_power(const Polynomial& f, unsigned e) {
  const Ring& R = f.ring();
  if (f.is_zero()) return f;
  Integer q = ipow(R.p(), e);
  const Exponent cap = limits().max_frobenius_exponent;
  Exponent top = 0;
  for (auto x : f.raw_exponents()) top = std::max(top, x);
  if (top == 0) return f;
  if (!fits_u64(q) || to_u64(q) > cap || checked_mul(top, to_u64(q)) > cap)
    throw ResourceLimit("Frobenius power p^" + std::to_string(e) + " exceeds the exponent guard");
  const Exponent qq = to_u64(q);
  std::vector<Exponent> exps = f.raw_exponents();
  for (auto& x : exps) x *= qq;
  return Polynomial(R, std::move(exps), f.raw_coeffs());
}

Polynomial pow_base_p(const Polynomial& f, const Integer& m) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  const Ring& R = f.ring();
  Polynomial result = Polynomial::one(R);
  Integer rest = m;
  const Integer p = R.characteristic();
  unsigned position = 0;
  while (rest > 0) {
    Integer digit = rest % p;
    rest /= p;
    if (digit != 0) {
      Polynomial piece = poly_pow(f, digit);
      if (position > 0) piece = frob_power(piece, position);
      result = poly_mul(result, piece);
    }
    ++position;
  }
  return result;
}

}  // namespace charp
