#include "support.hpp"

#include "charp/lucas.hpp"

#include <doctest.h>

using namespace charp;
using namespace testing;

TEST_CASE("digits") {
  CHECK(digits_base_p(10, 3).digits == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(digits_base_p(0, 5).digits.empty());
  CHECK(digits_base_p(6, 7).digits == std::vector<std::uint64_t>{6});
  CHECK(digits_base_p(Integer("123456789012345678901234567890"), 13).value() ==
        Integer("123456789012345678901234567890"));
}

TEST_CASE("binomials") {
  CHECK(binom_mod_p(10, 2, 3) == 0);
  CHECK(binom_mod_p(7, 3, 2) == 1);
  CHECK(binom_mod_p(3, 5, 7) == 0);
  CHECK_FALSE(binom_nonzero(10, 2, 3));
  for (std::uint64_t p : {2, 3, 5, 7, 13})
    for (unsigned i = 0; i < p; ++i) CHECK(binom_mod_p(p - 1, i, p) != 0);
  for (std::uint64_t p : {2, 3, 7})
    for (unsigned e = 1; e <= 3; ++e) {
      Integer top = ipow(p, e) - 1;
      for (Integer k = 0; k <= top; ++k) CHECK(binom_nonzero(top, k, p));
    }
  CHECK(binom_nonzero(12345, 0, 7));
}

TEST_CASE("multinomials") {
  CHECK(multinomial_nonzero(6, {4, 1, 1}, 7));
  CHECK_FALSE(multinomial_nonzero(3, {1, 1, 1}, 3));
  CHECK(multinomial_nonzero(9, {9}, 5));
  CHECK(multinomial_mod_p(3, {1, 1, 1}, 3) == 0);
  CHECK(multinomial_mod_p(6, {4, 1, 1}, 7) == 30 % 7);
  try {
    multinomial_nonzero(5, {1, 1}, 3);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PartsMismatch);
  }
}

TEST_CASE("property: exhaustive agreement with Pascal's triangle") {
  for (unsigned p : {2u, 3u, 5u, 7u, 13u}) {
    auto t = pascal_mod(300, p);
    for (unsigned m = 0; m <= 300; ++m)
      for (unsigned n = 0; n <= 300; ++n) {
        unsigned want = n <= m ? t[m][n] : 0;
        auto got = binom_mod_p(m, n, p);
        if (got != want) FAIL_CHECK("binom(" << m << ", " << n << ") mod " << p);
        if (binom_nonzero(m, n, p) != (want != 0)) FAIL_CHECK("nonzero(" << m << ", " << n << ") mod " << p);
      }
  }
}

TEST_CASE("property: multinomial digit test agrees with residues") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<Integer> parts;
      Integer m = 0;
      for (int i = 0; i < 3; ++i) {
        parts.push_back(static_cast<unsigned>(uniform(0, 40)));
        m += parts.back();
      }
      CHECK(multinomial_nonzero(m, parts, p) == (multinomial_mod_p(m, parts, p) != 0));
    }
  }
}

TEST_CASE("diagonal oracle") {
  auto R7 = make_ring(7, {"x", "y", "z"});
  CHECK(diagonal_root_membership(5, Monomial(std::vector<Exponent>{2, 0, 0}), 6, 1, R7));
  CHECK_FALSE(diagonal_root_membership(5, Monomial(std::vector<Exponent>{1, 1, 0}), 6, 1, R7));
  CHECK(diagonal_root_membership(5, Monomial(std::vector<Exponent>{1, 1, 1}), 6, 1, R7));
  CHECK_THROWS_AS(diagonal_root_membership(5, Monomial(std::vector<Exponent>{0, 0, 0}), 49, 1, R7), ResourceLimit);
  // shared classes with cancellation are refused rather than guessed
  auto R5 = make_ring(5, {"x", "y"});
  CHECK_THROWS_AS(diagonal_root_membership(5, Monomial(std::vector<Exponent>{1, 0}), 4, 1, R5), Error);
}
