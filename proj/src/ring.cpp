#include "charp/ring.hpp"

#include "charp/error.hpp"

#include <cctype>
#include <set>

namespace charp {

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

}  // namespace

const char* to_string(MonomialOrder order) {
  return order == MonomialOrder::GRevLex ? "grevlex" : "lex";
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::GRevLex;
  if (name == "lex") return MonomialOrder::Lex;
  fail(ErrorCode::InvalidArgument, "unknown monomial order '" + name + "'");
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  // GMP's test is BPSW followed by Miller-Rabin rounds; BPSW has no
  // counterexamples below 2^64, which covers every usable characteristic.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Ring make_ring(const Integer& p, std::vector<std::string> vars, MonomialOrder order) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, p.get_str() + " is not prime");
  if (mpz_sizeinbase(p.get_mpz_t(), 2) > 62)
    throw ResourceLimit("characteristic " + p.get_str() + " exceeds the 62-bit coefficient limit");
  if (vars.empty()) fail(ErrorCode::EmptyVariableList, "a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_identifier(v)) fail(ErrorCode::InvalidVariable, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) fail(ErrorCode::DuplicateVariable, "duplicate variable '" + v + "'");
  }
  auto data = std::make_shared<Ring::Data>(Ring::Data{to_u64(p), p, std::move(vars), order});
  return Ring(std::move(data));
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->p == b.d_->p && a.d_->order == b.d_->order && a.d_->vars == b.d_->vars;
}

int Ring::compare(const Exponent* a, const Exponent* b) const {
  const std::size_t n = d_->vars.size();
  if (d_->order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  unsigned __int128 da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

Coeff Ring::inv(Coeff a) const {
  if (a % d_->p == 0) fail(ErrorCode::InvalidArgument, "zero has no inverse");
  // extended Euclid on signed 128-bit to stay clear of overflow
  __int128 t = 0, new_t = 1;
  __int128 r = d_->p, new_r = a % d_->p;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += d_->p;
  return static_cast<Coeff>(t);
}

Coeff Ring::reduce(const Integer& v) const {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), d_->p_big.get_mpz_t());
  return to_u64(r);
}

unsigned __int128 Monomial::degree() const {
  unsigned __int128 d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const { return charp::divides(span(), other.span()); }

bool divides(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent checked_add(Exponent a, Exponent b) {
  if (a > kMaxExponent - b) throw ResourceLimit("exponent overflow");
  return a + b;
}

Exponent checked_mul(Exponent a, Exponent b) {
  if (a != 0 && b > kMaxExponent / a) throw ResourceLimit("exponent overflow");
  return a * b;
}

}  // namespace charp
