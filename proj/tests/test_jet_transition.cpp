#include "jets/cohomology.hpp"
#include "jets/jet_transition.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace jets;
using jets::testing::t_pow;

namespace {

// Truncated power series in h with coefficients in Q[t, t^-1]. The oracle
// rebuilds every column from the change of coordinates alone:
//   left:  column p = coefficients of h^j in (1/(t+h) - 1/t)^p * (t+h)^d
//   right: column p = coefficients of h^j in (1/(u+h) - 1/u)^p * u^d
// where h is the jet coordinate of the chart variable at the diagonal.
using Series = std::vector<LaurentPoly>;

Series mul(const Series& a, const Series& b) {
  Series c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Series inv(const Series& a) {
  const auto u = a[0].as_unit();
  REQUIRE(u);
  Series b(a.size());
  b[0] = LaurentPoly::monomial(Rational(1) / u->first, -u->second);
  for (std::size_t n = 1; n < a.size(); ++n) {
    LaurentPoly acc;
    for (std::size_t i = 1; i <= n; ++i) acc += a[i] * b[n - i];
    b[n] = -(b[0] * acc);
  }
  return b;
}

Series power(const Series& a, int e) {
  Series base = e < 0 ? inv(a) : a;
  Series out(a.size());
  out[0] = LaurentPoly(1);
  for (int i = 0; i < std::abs(e); ++i) out = mul(out, base);
  return out;
}

Series constant(std::size_t len, const LaurentPoly& c) {
  Series s(len);
  s[0] = c;
  return s;
}

LaurentMatrix series_oracle(int k, int d, Side side) {
  const std::size_t len = static_cast<std::size_t>(k + 1);
  Series shifted(len);  // t + h
  shifted[0] = t_pow(1);
  if (len > 1) shifted[1] = LaurentPoly(1);
  const Series inv_shifted = inv(shifted);
  Series diff = inv_shifted;  // 1/(t+h) - 1/t
  diff[0] -= t_pow(-1);
  const Series twist = side == Side::Left ? power(shifted, d) : constant(len, t_pow(d));

  LaurentMatrix m(len, len);
  for (int p = 0; p <= k; ++p) {
    const Series col = mul(power(diff, p), twist);
    for (int j = 0; j <= k; ++j) m(static_cast<std::size_t>(j), static_cast<std::size_t>(p)) = col[static_cast<std::size_t>(j)];
  }
  return m;
}

}  // namespace

TEST_CASE("binomial examples and conventions") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(1 - (-1) - 1, 0 - (-1) - 1) == 1);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(-2, 1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == 118264581564861424LL);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("JetSpec validation and side parsing") {
  CHECK_THROWS_AS(JetSpec(0, 1, 0, Side::Left), std::invalid_argument);
  CHECK_THROWS_AS(JetSpec(1, -1, 0, Side::Left), std::invalid_argument);
  CHECK(parse_side("left") == Side::Left);
  CHECK(parse_side("right") == Side::Right);
  CHECK_THROWS_AS(parse_side("up"), std::invalid_argument);
  CHECK_THROWS_AS(build_left_matrix(-1, 0), std::invalid_argument);
}

TEST_CASE("left matrix examples") {
  CHECK(build_left_matrix(1, -1) == LaurentMatrix{{t_pow(-1), 0}, {-t_pow(-2), -t_pow(-3)}});
  CHECK(build_left_matrix(1, 1) == LaurentMatrix{{t_pow(1), 0}, {1, -t_pow(-1)}});
  CHECK(build_left_matrix(0, 5) == LaurentMatrix{{t_pow(5)}});
}

TEST_CASE("right matrix examples") {
  CHECK(build_right_matrix(1, -1) == LaurentMatrix{{t_pow(-1), 0}, {0, -t_pow(-3)}});
  const LaurentMatrix r20 = build_right_matrix(2, 0);
  CHECK(r20(0, 1).is_zero());
  CHECK(r20(1, 1) == -t_pow(-2));
  CHECK(r20(2, 1) == t_pow(-3));
  CHECK(build_right_matrix(0, 3) == LaurentMatrix{{t_pow(3)}});
  for (int k = 0; k <= 5; ++k)
    for (int d = -5; d <= 5; ++d) {
      const LaurentMatrix r = build_right_matrix(k, d);
      CHECK(r(0, 0) == t_pow(d));
      for (int p = 1; p <= k; ++p) CHECK(r(0, static_cast<std::size_t>(p)).is_zero());
    }
}

TEST_CASE("matrices agree with the power-series change of coordinates") {
  for (int k = 0; k <= 6; ++k)
    for (int d = -6; d <= 6; ++d) {
      CAPTURE(k);
      CAPTURE(d);
      CHECK(build_left_matrix(k, d) == series_oracle(k, d, Side::Left));
      CHECK(build_right_matrix(k, d) == series_oracle(k, d, Side::Right));
    }
}

TEST_CASE("verify_cocycle examples") {
  CHECK(verify_cocycle(build_left_matrix(3, 2)));
  CHECK(det(build_left_matrix(3, 2)).as_unit());
  CHECK(verify_cocycle(build_right_matrix(4, -2)));
  CHECK(det(build_right_matrix(4, -2)).as_unit());
  CHECK_FALSE(verify_cocycle(LaurentMatrix{{t_pow(1), 1}, {0, 0}}));
}

TEST_CASE("truncation_check examples") {
  CHECK(truncation_check(2, -1, Side::Left));
  for (int k0 = 1; k0 <= 6; ++k0) CHECK(truncation_check(k0, k0 - 1, Side::Left));
  CHECK(truncation_check(3, 5, Side::Right));
  CHECK(build_right_matrix(3, 5)(3, 3) == -t_pow(-1));
  CHECK_THROWS_AS(truncation_check(0, 0, Side::Left), std::invalid_argument);
}

TEST_CASE("property: lower triangular, determinant law, truncation, rank") {
  for (int k = 0; k <= 8; ++k)
    for (int d = -8; d <= 8; ++d)
      for (Side side : {Side::Left, Side::Right}) {
        CAPTURE(k);
        CAPTURE(d);
        const LaurentMatrix m = build_matrix(k, d, side);
        CHECK(m.is_lower_triangular());
        // Independent of is_lower_triangular: scan the strict upper part.
        for (int j = 0; j <= k; ++j)
          for (int p = j + 1; p <= k; ++p) CHECK(m(static_cast<std::size_t>(j), static_cast<std::size_t>(p)).is_zero());
        const auto u = det(m).as_unit();
        REQUIRE(u);
        CHECK((u->first == Rational(1) || u->first == Rational(-1)));
        CHECK(u->second == (k + 1) * d - k * (k + 1));
        CHECK(u->second == predicted_det_exponent(k, d));
        CHECK(verify_cocycle(m));
        CHECK(static_cast<std::int64_t>(m.rows()) == jet_rank(1, k, 1));
        if (k >= 1) {
          CHECK(truncation_check(k, d, side));
          CHECK(m.submatrix(0, static_cast<std::size_t>(k), 0, static_cast<std::size_t>(k)) == build_matrix(k - 1, d, side));
        }
      }
}
