#include "support.hpp"

#include "charp/error.hpp"

#include <doctest.h>

using namespace charp;
using namespace testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST_CASE("make_ring validation") {
  auto R = make_ring(7, {"x", "y", "z"});
  CHECK(R.p() == 7);
  CHECK(R.nvars() == 3);
  CHECK(R.order() == MonomialOrder::GRevLex);
  CHECK(code_of([] { make_ring(4, {"x"}); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_ring(1, {"x"}); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_ring(2, {"x", "x"}); }) == ErrorCode::DuplicateVariable);
  CHECK(code_of([] { make_ring(2, {}); }) == ErrorCode::EmptyVariableList);
  CHECK(code_of([] { make_ring(2, {"1x"}); }) == ErrorCode::InvalidVariable);
  CHECK(make_ring(7, {"x", "y"}) == make_ring(7, {"x", "y"}));
  CHECK_FALSE(make_ring(7, {"x", "y"}) == make_ring(7, {"x", "y"}, MonomialOrder::Lex));
  // 2^61 - 1 is prime and fits
  CHECK(make_ring(Integer("2305843009213693951"), {"x"}).p() == 2305843009213693951ull);
}

TEST_CASE("parser") {
  auto R = make_ring(7, {"x", "y", "z"});
  auto f = parse_poly(R, "x^5+y^5+z^5");
  CHECK(f.size() == 3);
  CHECK(f.str() == "x^5 + y^5 + z^5");
  CHECK(parse_poly(R, "7*x + y").str() == "y");
  CHECK(parse_poly(R, "2 x y - 3").str() == "2*x*y + 4");
  CHECK(parse_poly(R, "-(x+1)^2").str() == "6*x^2 + 5*x + 6");
  CHECK(parse_poly(R, "100000000000000000000000000000 * x").str() == "5*x");
  CHECK(parse_poly(R, "0").is_zero());

  try {
    parse_poly(R, "x^");
    FAIL("no throw");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK(code_of([&] { parse_poly(R, "x + w"); }) == ErrorCode::UnknownVariable);
  CHECK(code_of([&] { parse_poly(R, "x + "); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_poly(R, "(x"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_poly(R, "x^-1"); }) == ErrorCode::SyntaxError);

  auto gens = parse_poly_list(R, "(x^2, y + 1)");
  REQUIRE(gens.size() == 2);
  CHECK(gens[1].str() == "y + 1");
}

TEST_CASE("printer order and coefficients") {
  auto R = make_ring(7, {"x", "y"});
  CHECK(parse_poly(R, "3 + 6*x*y + x^2").str() == "x^2 + 6*x*y + 3");
  auto L = make_ring(7, {"x", "y"}, MonomialOrder::Lex);
  CHECK(parse_poly(L, "y^3 + x").str() == "x + y^3");
  CHECK(parse_poly(R, "y^3 + x").str() == "y^3 + x");
}

TEST_CASE("arithmetic examples") {
  auto R2 = make_ring(2, {"x", "y"});
  CHECK(poly_pow(parse_poly(R2, "x+y"), 2).str() == "x^2 + y^2");
  CHECK(poly_pow(parse_poly(R2, "x+y"), 0).str() == "1");
  auto R3 = make_ring(3, {"x"});
  CHECK((parse_poly(R3, "x+1") * parse_poly(R3, "x+2")).str() == "x^2 + 2");
  auto R5 = make_ring(5, {"x", "y"});
  CHECK(frob_power(parse_poly(R5, "x+y"), 1).str() == "x^5 + y^5");
  CHECK(frob_power(parse_poly(R3, "2*x"), 2).str() == "2*x^9");

  auto R7 = make_ring(7, {"x", "y", "z"});
  auto x = parse_poly(R7, "x");
  CHECK(pow_base_p(x, 8).str() == "x^8");
  auto f = quintic(R7);
  CHECK(pow_base_p(f, 6) == poly_pow(f, 6));
  CHECK(pow_base_p(f, 0).str() == "1");
}

TEST_CASE("ring mismatch") {
  auto A = make_ring(7, {"x"});
  auto B = make_ring(5, {"x"});
  CHECK(code_of([&] { (void)(parse_poly(A, "x") * parse_poly(B, "x")); }) == ErrorCode::RingMismatch);
  CHECK(code_of([&] { (void)(parse_poly(A, "x") + parse_poly(B, "x")); }) == ErrorCode::RingMismatch);
}

TEST_CASE("exponent overflow is a resource limit") {
  auto R = make_ring(2, {"x"});
  auto x = parse_poly(R, "x");
  CHECK(code_of([&] { frob_power(x, 50); }) == ErrorCode::ResourceLimit);
}

TEST_CASE("property: ring axioms") {
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto R = make_ring(p, var_names(n));
      for (int trial = 0; trial < 30; ++trial) {
        auto a = random_poly(R, 4, 5), b = random_poly(R, 4, 5), c = random_poly(R, 4, 5);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        CHECK(a * Polynomial::one(R) == a);
        CHECK(a * b == naive_mul(a, b));
      }
    }
  }
}

TEST_CASE("property: Frobenius and digit powers match repeated multiplication") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    auto R = make_ring(p, var_names(2));
    for (int trial = 0; trial < 15; ++trial) {
      auto f = random_poly(R, 3, 4);
      unsigned e = static_cast<unsigned>(uniform(1, p <= 3 ? 3 : 2));
      unsigned q = 1;
      for (unsigned i = 0; i < e; ++i) q *= static_cast<unsigned>(p);
      CHECK(frob_power(f, e) == poly_pow(f, q));
      if (q <= 9) CHECK(frob_power(f, e) == naive_pow(f, q));
      unsigned m = static_cast<unsigned>(uniform(0, 40));
      CHECK(pow_base_p(f, m) == poly_pow(f, m));
      if (m <= 12) CHECK(poly_pow(f, m) == naive_pow(f, m));
    }
  }
}

TEST_CASE("property: parser round trip and canonical form") {
  for (std::uint64_t p : {2, 5, 101}) {
    for (auto order : {MonomialOrder::GRevLex, MonomialOrder::Lex}) {
      auto R = make_ring(p, var_names(3), order);
      for (int trial = 0; trial < 50; ++trial) {
        auto f = random_poly(R, 6, 7);
        auto g = parse_poly(R, f.str());
        CHECK(g == f);
        CHECK(g.raw_exponents() == f.raw_exponents());
        CHECK(g.raw_coeffs() == f.raw_coeffs());
        // equal values built differently share their term arrays
        auto h = (f + Polynomial::one(R)) - Polynomial::one(R);
        CHECK(h.raw_exponents() == f.raw_exponents());
      }
    }
  }
}
