#include "jets/laurent_poly.hpp"
#include "jets/rational.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace jets;
using jets::testing::random_nonzero_rational;
using jets::testing::random_poly;
using jets::testing::t_pow;
using jets::testing::uniform_int;

TEST_CASE("rational values are stored reduced with positive denominator") {
  const Rational q(6, -4);
  CHECK(q.numerator_string() == "-3");
  CHECK(q.denominator_string() == "2");
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(0, -7).denominator_string() == "1");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact on large values") {
  const Rational big = Rational::from_strings("123456789012345678901234567890", "7");
  CHECK((big * Rational(7)).to_string() == "123456789012345678901234567890");
  CHECK(Rational(2).pow(100) / Rational(2).pow(99) == Rational(2));
  CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS(Rational(0).pow(-1));
  CHECK_THROWS_AS(Rational::from_strings("1x", "2"), std::invalid_argument);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("poly arithmetic examples") {
  CHECK(t_pow(1) * t_pow(-1) == t_pow(0));
  CHECK((t_pow(1) + 1) * (t_pow(1) - 1) == t_pow(2) - 1);
  CHECK((t_pow(-1) - t_pow(-2)) + t_pow(-2) == t_pow(-1));
  CHECK(((t_pow(-1) - t_pow(-2)) + t_pow(-2)).term_count() == 1);
  CHECK((t_pow(3) - t_pow(3)).is_zero());
  CHECK(LaurentPoly(0).is_zero());
  CHECK(LaurentPoly::monomial(Rational(0), 5).is_zero());
}

TEST_CASE("poly rendering and exponent range") {
  const LaurentPoly p = t_pow(1, 3) - t_pow(-2);
  CHECK(p.to_string() == "3*t - t^-2");
  CHECK(p.to_string("u") == "3*u - u^-2");
  CHECK(p.min_exp() == -2);
  CHECK(p.max_exp() == 1);
  CHECK_THROWS_AS(LaurentPoly().min_exp(), std::domain_error);
  CHECK(LaurentPoly().to_string() == "0");
}

TEST_CASE("is_unit examples") {
  const auto u = is_unit(-t_pow(-4));
  REQUIRE(u);
  CHECK(u->first == Rational(-1));
  CHECK(u->second == -4);
  CHECK_FALSE(is_unit(t_pow(1) + 1));
  CHECK_FALSE(is_unit(LaurentPoly()));
}

TEST_CASE("subring_membership examples") {
  CHECK(subring_membership(t_pow(2) + 3) == SubringMembership{true, false});
  CHECK(subring_membership(LaurentPoly(5)) == SubringMembership{true, true});
  CHECK(subring_membership(t_pow(1) + t_pow(-1)) == SubringMembership{false, false});
  CHECK(subring_membership(t_pow(-3) - 2) == SubringMembership{false, true});
}

TEST_CASE("evaluation") {
  const LaurentPoly p = t_pow(2) - t_pow(-1, Rational(3));
  CHECK(p.evaluate(Rational(2)) == Rational(4) - Rational(3, 2));
  CHECK(t_pow(2).evaluate(Rational(0)) == Rational(0));
  CHECK_THROWS_AS(p.evaluate(Rational(0)), std::domain_error);
}

TEST_CASE("divide_exact") {
  const LaurentPoly a = (t_pow(1) + 1) * (t_pow(-2) - 3);
  const auto q = divide_exact(a, t_pow(1) + 1);
  REQUIRE(q);
  CHECK(*q == t_pow(-2) - 3);
  CHECK_FALSE(divide_exact(t_pow(2) + 1, t_pow(1) + 1));
  CHECK_FALSE(divide_exact(t_pow(1), LaurentPoly()));
  CHECK(divide_exact(LaurentPoly(), t_pow(3))->is_zero());
  CHECK(*divide_exact(t_pow(5), t_pow(-2, Rational(2))) == t_pow(7, Rational(1, 2)));
}

TEST_CASE("property: ring axioms on random polynomials") {
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly(1) == a);
    CHECK(a + LaurentPoly() == a);
    const LaurentPoly ab = a * b;
    for (const auto& [e, coeff] : ab.terms()) CHECK_FALSE(coeff.is_zero());
  }
}

TEST_CASE("property: products of units are units and only those") {
  std::vector<LaurentPoly> corpus;
  for (int i = 0; i < 12; ++i) corpus.push_back(t_pow(uniform_int(-5, 5), random_nonzero_rational()));
  for (int i = 0; i < 12; ++i) {
    LaurentPoly p;
    do p = random_poly(4);
    while (p.term_count() < 2);
    corpus.push_back(p);
  }
  for (const auto& a : corpus)
    for (const auto& b : corpus)
      CHECK(static_cast<bool>(is_unit(a * b)) == (is_unit(a) && is_unit(b)));
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = random_poly(), b = random_poly();
    const Rational x = random_nonzero_rational();
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
  }
}

TEST_CASE("property: divide_exact inverts multiplication") {
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly();
    LaurentPoly b;
    do b = random_poly();
    while (b.is_zero());
    const auto q = divide_exact(a * b, b);
    REQUIRE(q);
    CHECK(*q == a);
  }
}
