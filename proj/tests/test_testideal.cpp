#include "support.hpp"

#include "charp/lucas.hpp"
#include "charp/testideal.hpp"

#include <doctest.h>

using namespace charp;
using namespace testing;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

std::vector<std::string> values(const std::vector<JumpCertificate>& js) {
  std::vector<std::string> out;
  for (const auto& j : js) out.push_back(j.value.str());
  return out;
}

bool all_certified(const std::vector<JumpCertificate>& js) {
  for (const auto& j : js)
    if (j.status != JumpStatus::CertifiedJump) return false;
  return true;
}

/// nu by linear search over the direct root of f^m.
Integer nu_oracle(const Polynomial& f, unsigned e) {
  const auto& R = f.ring();
  unsigned q = 1;
  for (unsigned i = 0; i < e; ++i) q *= static_cast<unsigned>(R.p());
  Integer best = -1;
  for (unsigned m = 0; m <= q; ++m)
    if (!frob_root(Ideal(R, {poly_pow(f, m)}), e).is_unit()) return m - 1;
  return best;
}

}  // namespace

TEST_CASE("pfrac forms") {
  auto a = pfrac_form(Q("4/7"), 7);
  CHECK(a.r == 24);
  CHECK(a.a == 1);
  CHECK(a.s == 1);
  auto b = pfrac_form(Q("3/5"), 7);
  CHECK(b.r == 1440);
  CHECK(b.a == 0);
  CHECK(b.s == 4);
  auto c = pfrac_form(Q("1/3"), 3);
  CHECK(c.r == 2);
  CHECK(c.a == 1);
  CHECK(c.s == 1);
  for (const char* s : {"4/7", "3/5", "1/3", "48/49", "10/17", "5/3", "7/13", "2"})
    for (std::uint64_t p : {2, 3, 7, 11, 13, 17})
      CHECK(pfrac_value(pfrac_form(Q(s), p), p) == Q(s));
  CHECK_THROWS_AS(pfrac_form(Q("0"), 7), Error);
}

TEST_CASE("tau at p-power denominators") {
  auto R = make_ring(7, {"x", "y", "z"});
  TestIdeals T(quintic(R));
  auto x = parse_poly(R, "x");
  CHECK(TestIdeals(x).tau_ppower(30, 1).str() == "(x^4)");
  CHECK(ideal_equal(T.tau_ppower(6, 1), ideal_of(R, "x^2, y^2, z^2, x*y*z")));
  CHECK(ideal_equal(T.tau_ppower(48, 2), maximal_ideal_power(R, 3)));
}

TEST_CASE("cartier chains") {
  auto R = make_ring(7, {"x", "y", "z"});
  auto x = parse_poly(R, "x");
  CHECK(TestIdeals(x).cartier_chain(6, 1, Ideal::unit(R)).str() == "(1)");
  TestIdeals T(quintic(R));
  auto seed = T.tau_ppower(6, 1);
  auto fixed = T.cartier_chain(6, 1, seed);
  CHECK(ideal_equal(fixed, maximal_ideal_power(R, 3)));
  CHECK(ideal_equal(T.cartier_chain(6, 1, fixed), fixed));
}

TEST_CASE("tau values for the quintic at p = 7") {
  auto R = make_ring(7, {"x", "y", "z"});
  TestIdeals T(quintic(R));
  CHECK(ideal_equal(T.tau(Q("4/7")), ideal_of(R, "x, y, z")));
  CHECK(ideal_equal(T.tau(Q("5/7")), maximal_ideal_power(R, 2)));
  CHECK(ideal_equal(T.tau(Q("6/7")), ideal_of(R, "x^2, y^2, z^2, x*y*z")));
  CHECK(ideal_equal(T.tau(Q("48/49")), maximal_ideal_power(R, 3)));
  CHECK(T.tau(Q("0")).is_unit());
  CHECK(T.tau(Q("1/2")).is_unit());
  CHECK(T.tau_left(Q("4/7")).is_unit());
  CHECK(ideal_equal(T.tau_left(Q("1")), maximal_ideal_power(R, 3)));
  CHECK(ideal_equal(T.tau(Q("1")), Ideal(R, {quintic(R)})));
  // 3/5 is not a p-power fraction: the periodic chain path
  CHECK(ideal_equal(T.tau(Q("3/5")), ideal_of(R, "x, y, z")));
}

TEST_CASE("tau of simple inputs") {
  auto R = make_ring(5, {"x", "y"});
  auto x = parse_poly(R, "x");
  CHECK(tau(x, Q("3/2")).str() == "(x)");
  CHECK(tau_left(x, Q("1")).str() == "(1)");
  CHECK(tau(x, Q("1")).str() == "(x)");
  CHECK(tau(x, Q("7/3")).str() == "(x^2)");
  CHECK(tau(Polynomial::constant(R, Coeff{3}), Q("5/2")).str() == "(1)");
  CHECK_THROWS_AS(tau(Polynomial(R), Q("1/2")), Error);
  CHECK_THROWS_AS(tau(x, Q("-1/2")), Error);
}

TEST_CASE("jump certificates") {
  auto R = make_ring(7, {"x", "y", "z"});
  TestIdeals T(quintic(R));
  CHECK(T.is_fjumping(Q("4/7")).status == JumpStatus::CertifiedJump);
  CHECK(T.is_fjumping(Q("1/2")).status == JumpStatus::CertifiedNotJump);
  CHECK(T.is_fjumping(Q("48/49")).status == JumpStatus::CertifiedJump);
  CHECK(T.is_fjumping(Q("34/49")).status == JumpStatus::CertifiedNotJump);
  auto x = parse_poly(R, "x");
  CHECK(is_fjumping(x, Q("1")).status == JumpStatus::CertifiedJump);
  CHECK(is_fjumping(x, Q("1/2")).status == JumpStatus::CertifiedNotJump);
  CHECK(std::string(to_string(JumpStatus::CertifiedJump)) == "certified-jump");
}

TEST_CASE("nu and fpt") {
  auto R7 = make_ring(7, {"x", "y", "z"});
  auto x = parse_poly(R7, "x");
  for (unsigned e = 1; e <= 3; ++e) CHECK(nu(x, e).nu == ipow(7, e) - 1);
  CHECK(nu(quintic(R7), 1).nu == 3);
  auto R11 = make_ring(11, {"x", "y", "z"});
  CHECK(nu(quintic(R11), 1).nu == 6);
  CHECK_THROWS_AS(nu(Polynomial::one(R7), 1), Error);

  struct Row {
    std::uint64_t p;
    const char* fpt;
  };
  for (auto [p, want] : {Row{2, "1/4"}, Row{3, "1/3"}, Row{5, "1/5"}, Row{7, "4/7"}, Row{11, "3/5"},
                          Row{13, "7/13"}, Row{17, "10/17"}, Row{19, "10/19"}}) {
    auto R = make_ring(p, {"x", "y", "z"});
    auto r = fpt(quintic(R), 3, 4);
    CAPTURE(p);
    CHECK(r.certified);
    REQUIRE(r.certificate);
    CHECK(r.certificate->value == Q(want));
    // the threshold is where tau first drops
    TestIdeals T(quintic(R));
    CHECK(T.tau_left(Q(want)).is_unit());
    CHECK_FALSE(T.tau(Q(want)).is_unit());
  }
}

TEST_CASE("jumping numbers of the quintic") {
  struct Row {
    std::uint64_t p;
    unsigned e;
    std::vector<std::string> jumps;
  };
  const Row rows[] = {
      {2, 4, {"1/4", "1/2", "3/4"}},
      {3, 4, {"1/3", "2/3", "8/9"}},
      {5, 3, {"1/5", "2/5", "3/5", "4/5"}},
      {7, 3, {"4/7", "5/7", "6/7", "48/49"}},
      {11, 3, {"3/5", "4/5"}},
  };
  for (const auto& row : rows) {
    auto R = make_ring(row.p, {"x", "y", "z"});
    auto js = jumps_in_unit_interval(quintic(R), row.e, 4);
    CAPTURE(row.p);
    CHECK(values(js) == row.jumps);
    CHECK(all_certified(js));
  }
  auto R = make_ring(7, {"x", "y"});
  CHECK(jumps_in_unit_interval(parse_poly(R, "x"), 2, 2).empty());
}

TEST_CASE("jumps certified on the grid agree with a brute-force grid scan") {
  // every grid cell where the direct roots change must contain a reported jump
  for (std::uint64_t p : {2, 3}) {
    auto R = make_ring(p, {"x", "y"});
    for (const char* text : {"x^2 + y^3", "x^3 + y^3", "x*y*(x + y)", "x^2*y + y^4"}) {
      auto f = parse_poly(R, text);
      auto js = jumps_in_unit_interval(f, 3, 4);
      unsigned q = static_cast<unsigned>(p * p * p);
      Ideal prev = Ideal::unit(R);
      for (unsigned m = 1; m < q; ++m) {
        auto cur = frob_root(Ideal(R, {poly_pow(f, m)}), 3);
        if (!ideal_equal(cur, prev)) {
          Rational lo{Integer(m - 1), Integer(q)}, hi{Integer(m), Integer(q)};
          bool found = false;
          for (const auto& j : js) found = found || (lo < j.value && j.value <= hi);
          CAPTURE(text);
          CAPTURE(m);
          CHECK(found);
        }
        prev = cur;
      }
      for (const auto& j : js) {
        CHECK(j.status == JumpStatus::CertifiedJump);
        CHECK(is_fjumping(f, j.value).status == JumpStatus::CertifiedJump);
      }
    }
  }
}

TEST_CASE("transport and gap arithmetic") {
  CHECK(transport_jump(Q("48/49"), 6, 1, 7) == Q("6/7"));
  CHECK(transport_jump(Q("8/9"), 2, 1, 3) == Q("2/3"));
  // boundary lambda_m maps to lambda_(m-1)
  Rational lam = Q("1");
  Rational l2 = (Rational(1) - Rational(Integer(1), Integer(49))) * lam;
  Rational l1 = (Rational(1) - Rational(Integer(1), Integer(7))) * lam;
  CHECK(transport_jump(l2, 6, 1, 7) == l1);
  CHECK_THROWS_AS(transport_jump(Q("1/2"), 6, 1, 7), Error);

  auto R = make_ring(7, {"x", "y", "z"});
  TestIdeals T(quintic(R));
  auto gap = gap_certificate(quintic(R), 6, 1, 4);
  CHECK(gap.hi == Q("1"));
  CHECK(gap.lo == Rational(1) - Rational(Integer(1), Integer(2401)));
  CHECK(T.verify_gap(gap));
  auto x = parse_poly(R, "x");
  CHECK(TestIdeals(x).verify_gap(gap_certificate(x, 6, 1, 0)));

  auto R2 = make_ring(2, {"x", "y", "z"});
  auto f2 = quintic(R2);
  auto g2 = gap_certificate(f2, 1, 2, 1);
  CHECK(g2.hi == Q("1/3"));
  auto js = jumps_in_unit_interval(f2, 4, 4);
  for (const auto& j : js) CHECK_FALSE((g2.lo < j.value && j.value < g2.hi));
  CHECK(TestIdeals(f2).verify_gap(g2));

  CHECK(jump_count_bound(3, 5, Q("1")) == 56);
  CHECK(jump_count_bound(1, 1, Q("1")) == 2);
}

TEST_CASE("property: monotonicity, grid chain, two paths and Skoda") {
  for (std::uint64_t p : {2, 3, 5}) {
    auto R = make_ring(p, var_names(2));
    for (int trial = 0; trial < 12; ++trial) {
      auto f = random_poly(R, 4, 4, false);
      if (f.is_constant()) continue;
      TestIdeals T(f);
      Rational a(Integer(static_cast<unsigned>(uniform(0, 30))), Integer(static_cast<unsigned>(uniform(1, 12))));
      Rational b = a + Rational(Integer(static_cast<unsigned>(uniform(1, 10))), Integer(static_cast<unsigned>(uniform(1, 12))));
      CHECK(ideal_subset(T.tau(b), T.tau(a)));
      CHECK(ideal_subset(T.tau(b), T.tau_left(b)));

      unsigned e = static_cast<unsigned>(uniform(1, 2));
      Rational lam(Integer(static_cast<unsigned>(uniform(1, 20))), Integer(static_cast<unsigned>(uniform(2, 20))));
      Integer q = ipow(p, e);
      Integer c1 = Rational(lam * Rational(q, 1)).ceil();
      Integer c2 = Rational(lam * Rational(Integer(q * static_cast<unsigned long>(p)), 1)).ceil();
      CHECK(ideal_subset(T.tau_ppower(c1, e), T.tau_ppower(c2, e + 1)));

      Integer m = static_cast<unsigned>(uniform(0, 2 * q.get_ui()));
      CHECK(ideal_equal(T.tau(Rational(m, q)), T.tau_ppower(m, e)));
      CHECK(ideal_equal(T.tau(Rational(m, q)), frob_root(Ideal(R, {poly_pow(f, m)}), e)));

      Rational mu = Rational(1) + Rational(Integer(static_cast<unsigned>(uniform(0, 10))), Integer(11));
      CHECK(ideal_equal(T.tau(mu), scale_ideal(f, T.tau(mu - Rational(1)))));
    }
  }
}

TEST_CASE("property: jumps scale by p, shift by one, and transport") {
  struct Case {
    std::uint64_t p;
    const char* f;
    unsigned e;
  };
  for (auto [p, text, e] : {Case{2, "x^5+y^5+z^5", 4}, Case{3, "x^5+y^5+z^5", 3}, Case{7, "x^5+y^5+z^5", 3},
                             Case{2, "x^2+y^3", 4}, Case{3, "x^2*y+y^4", 3}}) {
    auto R = make_ring(p, {"x", "y", "z"});
    TestIdeals T(parse_poly(R, text));
    auto js = T.jumps_in_unit_interval(e, 4);
    CAPTURE(text);
    CAPTURE(p);
    for (const auto& j : js) {
      REQUIRE(j.status == JumpStatus::CertifiedJump);
      Rational scaled = j.value * Rational(static_cast<long>(p));
      CHECK(T.is_fjumping(scaled).status == JumpStatus::CertifiedJump);
      CHECK(T.is_fjumping(j.value + Rational(1)).status == JumpStatus::CertifiedJump);
    }
    // transport: lambda = 1 = (p-1)/(p-1), windows (lambda_m, lambda_(m+1)]
    for (const auto& j : js) {
      Rational lam1 = Rational(1) - Rational(Integer(1), Integer(static_cast<unsigned long>(p)));
      if (!(lam1 < j.value)) continue;
      Rational t = transport_jump(j.value, static_cast<long>(p - 1), 1, p);
      CHECK(T.is_fjumping(t).status == JumpStatus::CertifiedJump);
    }
  }
}

TEST_CASE("property: diagonal oracle agrees with the root pipeline") {
  struct Case {
    std::uint64_t p;
    unsigned a;
    unsigned N;
    unsigned e;
  };
  for (auto [p, a, N, e] : {Case{7, 5, 6, 1}, Case{7, 5, 48, 2}, Case{2, 5, 3, 2}, Case{3, 5, 8, 2},
                             Case{11, 5, 6, 1}, Case{2, 9, 7, 3}, Case{13, 5, 9, 1}}) {
    auto R = make_ring(p, {"x", "y", "z"});
    auto f = parse_poly(R, "x^" + std::to_string(a) + "+y^" + std::to_string(a) + "+z^" + std::to_string(a));
    auto I = TestIdeals(f).tau_ppower(N, e);
    for (unsigned i = 0; i <= 4; ++i)
      for (unsigned j = 0; i + j <= 4; ++j)
        for (unsigned k = 0; i + j + k <= 4; ++k) {
          Monomial t(std::vector<Exponent>{i, j, k});
          CAPTURE(p);
          CAPTURE(N);
          CHECK(diagonal_root_membership(a, t, N, e, R) == ideal_contains(I, Polynomial::term(R, t.span())));
        }
  }
}

TEST_CASE("errors") {
  auto R = make_ring(7, {"x", "y", "z"});
  CHECK_THROWS_AS(fpt(Polynomial::one(R), 2, 2), Error);
  CHECK_THROWS_AS(fpt(Polynomial(R), 2, 2), Error);
  try {
    transport_jump(Q("1/3"), 6, 1, 7);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfInterval);
  }
}

TEST_CASE("nu matches a linear search on direct roots") {
  for (std::uint64_t p : {2, 3, 5}) {
    auto R = make_ring(p, var_names(2));
    for (int trial = 0; trial < 8; ++trial) {
      auto f = random_poly(R, 3, 3, false);
      if (f.is_constant()) continue;
      for (unsigned e = 1; e <= 2; ++e) CHECK(nu(f, e).nu == nu_oracle(f, e));
    }
  }
}
