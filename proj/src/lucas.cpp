#include "charp/lucas.hpp"

#include "charp/error.hpp"
#include "charp/resource.hpp"

#include <algorithm>
#include <map>

namespace charp {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

/// binomial(m, k) mod p for digits m, k < p; every factor is a unit.
std::uint64_t small_binom(std::uint64_t m, std::uint64_t k, std::uint64_t p) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t j = 0; j < k; ++j) {
    num = mulmod(num, m - j, p);
    den = mulmod(den, j + 1, p);
  }
  return mulmod(num, powmod(den, p - 2, p), p);
}

void require_prime_base(std::uint64_t p) {
  if (p < 2) fail(ErrorCode::InvalidArgument, "base must be a prime >= 2");
}

}  // namespace

Integer DigitVector::value() const {
  Integer v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * from_u64(base) + from_u64(*it);
  return v;
}

DigitVector digits_base_p(const Integer& m, std::uint64_t p) {
  require_prime_base(p);
  if (m < 0) fail(ErrorCode::InvalidArgument, "digits of a negative integer");
  DigitVector out{p, {}};
  Integer rest = m;
  const Integer P = from_u64(p);
  while (rest > 0) {
    out.digits.push_back(to_u64(Integer(rest % P)));
    rest /= P;
  }
  return out;
}

std::uint64_t binom_mod_p(const Integer& m, const Integer& n, std::uint64_t p) {
  if (n < 0 || m < 0) fail(ErrorCode::InvalidArgument, "binom_mod_p needs m, n >= 0");
  if (n > m) return 0;
  auto dm = digits_base_p(m, p);
  auto dn = digits_base_p(n, p);
  std::uint64_t r = 1 % p;
  for (std::size_t i = 0; i < dm.digits.size(); ++i) {
    r = mulmod(r, small_binom(dm.at(i), dn.at(i), p), p);
    if (r == 0) break;
  }
  return r;
}

bool binom_nonzero(const Integer& m, const Integer& n, std::uint64_t p) {
  if (n < 0 || m < 0) fail(ErrorCode::InvalidArgument, "binom_nonzero needs m, n >= 0");
  if (n > m) return false;
  auto dm = digits_base_p(m, p);
  auto dn = digits_base_p(n, p);
  for (std::size_t i = 0; i < dn.digits.size(); ++i)
    if (dn.digits[i] > dm.at(i)) return false;
  return true;
}

bool multinomial_nonzero(const Integer& m, const std::vector<Integer>& parts, std::uint64_t p) {
  require_prime_base(p);
  Integer total = 0;
  for (const auto& k : parts) {
    if (k < 0) fail(ErrorCode::PartsMismatch, "negative part");
    total += k;
  }
  if (total != m) fail(ErrorCode::PartsMismatch, "parts sum to " + total.get_str() + ", expected " + m.get_str());
  std::vector<std::uint64_t> column;
  for (const auto& k : parts) {
    auto d = digits_base_p(k, p);
    if (column.size() < d.digits.size()) column.resize(d.digits.size(), 0);
    for (std::size_t i = 0; i < d.digits.size(); ++i) {
      // column sums stay below 2p before the check fires
      column[i] += d.digits[i];
      if (column[i] >= p) return false;
    }
  }
  return true;
}

std::uint64_t multinomial_mod_p(const Integer& m, const std::vector<Integer>& parts, std::uint64_t p) {
  require_prime_base(p);
  Integer total = 0;
  for (const auto& k : parts) total += k;
  if (total != m) fail(ErrorCode::PartsMismatch, "parts sum to " + total.get_str() + ", expected " + m.get_str());
  std::uint64_t r = 1 % p;
  Integer rest = m;
  for (const auto& k : parts) {
    r = mulmod(r, binom_mod_p(rest, k, p), p);
    if (r == 0) return 0;
    rest -= k;
  }
  return r;
}

bool diagonal_root_membership(const Integer& a, const Monomial& target, const Integer& N, unsigned e,
                              const Ring& ring) {
  const std::size_t n = ring.nvars();
  const std::uint64_t p = ring.p();
  if (target.size() != n) fail(ErrorCode::InvalidArgument, "target length does not match ring");
  if (a <= 0 || N < 0 || e == 0) fail(ErrorCode::InvalidArgument, "diagonal oracle needs a >= 1, N >= 0, e >= 1");
  const Integer q = ipow(p, e);
  if (N >= q * q) throw ResourceLimit("diagonal oracle needs N < p^(2e)");
  const Integer unshared = q / Integer(gcd(a, q));

  auto quotient_of = [&](const Integer& k) { return Integer(a * k / q); };
  auto residue_of = [&](const Integer& k) { return Integer(a * k % q); };

  std::vector<Integer> k(n);
  if (N < unshared) {
    // every exponent tuple is alone in its residue class, so the root ideal
    // is monomial and generated by x^floor(a k / q) for nonzero multinomials
    std::vector<Integer> bound(n);
    for (std::size_t i = 0; i < n; ++i) bound[i] = ((from_u64(target[i]) + 1) * q - 1) / a;
    auto search = [&](auto&& self, std::size_t i, const Integer& left) -> bool {
      if (i + 1 == n) {
        if (left > bound[i]) return false;
        k[i] = left;
        return multinomial_nonzero(N, k, p);
      }
      Integer top = std::min(left, bound[i]);
      for (Integer v = 0; v <= top; ++v) {
        k[i] = v;
        if (self(self, i + 1, left - v)) return true;
      }
      return false;
    };
    return search(search, 0, N);
  }

  // shared classes: aggregate exactly
  Integer tuples = binomial(N + Integer(static_cast<unsigned long>(n - 1)), n - 1);
  if (tuples > 50'000'000) throw ResourceLimit("diagonal oracle search space too large");
  std::map<std::vector<Integer>, std::map<std::vector<Integer>, std::uint64_t>> classes;
  auto collect = [&](auto&& self, std::size_t i, const Integer& left) -> void {
    if (i + 1 == n) {
      k[i] = left;
      std::uint64_t c = multinomial_mod_p(N, k, p);
      if (c == 0) return;
      std::vector<Integer> r(n), quo(n);
      for (std::size_t j = 0; j < n; ++j) {
        r[j] = residue_of(k[j]);
        quo[j] = quotient_of(k[j]);
      }
      auto& slot = classes[r][quo];
      slot = (slot + c) % p;
      return;
    }
    for (Integer v = 0; v <= left; ++v) {
      k[i] = v;
      self(self, i + 1, left - v);
    }
  };
  collect(collect, 0, N);

  bool member = false;
  for (const auto& [r, poly] : classes) {
    std::vector<const std::vector<Integer>*> live;
    for (const auto& [quo, c] : poly)
      if (c != 0) live.push_back(&quo);
    if (live.empty()) continue;
    if (live.size() > 1)
      fail(ErrorCode::Undecidable, "root ideal has a non-monomial generator; divisibility cannot decide");
    const auto& quo = *live.front();
    bool divides_target = true;
    for (std::size_t j = 0; j < n; ++j)
      if (quo[j] > from_u64(target[j])) divides_target = false;
    member = member || divides_target;
  }
  return member;
}

}  // namespace charp
