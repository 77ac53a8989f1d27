#include "jets/errors.hpp"
#include "jets/jet_transition.hpp"
#include "jets/splitting.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace jets;
using jets::testing::random_unimodular;
using jets::testing::t_pow;
using jets::testing::uniform_int;

namespace {

struct KnownCocycle {
  LaurentMatrix m;
  SplittingType type;
};

KnownCocycle random_known_cocycle() {
  const std::size_t n = static_cast<std::size_t>(uniform_int(1, 4));
  std::vector<int> twists;
  std::vector<LaurentPoly> diag;
  for (std::size_t i = 0; i < n; ++i) {
    twists.push_back(uniform_int(-4, 4));
    diag.push_back(t_pow(twists.back()));
  }
  const LaurentMatrix m =
      random_unimodular(n, true) * LaurentMatrix::diagonal(diag) * random_unimodular(n, false);
  return {m, SplittingType(twists)};
}

}  // namespace

TEST_CASE("SplittingType basics") {
  const SplittingType s({-2, 1, -2});
  CHECK(s.twists() == std::vector<int>{1, -2, -2});
  CHECK(s.to_string() == "O(1) ⊕ O(-2)^2");
  CHECK(s.c1() == -3);
  CHECK(s.rank() == 3);
  CHECK(s.h0(0) == 2);
  CHECK(s.h0(2) == 4 + 1 + 1);
  CHECK(s.shifted(2) == SplittingType({3, 0, 0}));
}

TEST_CASE("h0 examples") {
  for (int d = 0; d <= 5; ++d) CHECK(h0_of_twisted_cocycle(LaurentMatrix{{t_pow(d)}}, 0) == d + 1);
  for (int d = -5; d < 0; ++d) CHECK(h0_of_twisted_cocycle(LaurentMatrix{{t_pow(d)}}, 0) == 0);
  CHECK(h0_of_twisted_cocycle(build_left_matrix(1, 1), 0) == 2);
  CHECK_THROWS_AS(h0_of_twisted_cocycle(LaurentMatrix{{t_pow(1) + 1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(h0_of_twisted_cocycle(LaurentMatrix{{t_pow(1)}}, 0, -1), std::invalid_argument);
}

TEST_CASE("splitting_from_h0 examples") {
  CHECK(splitting_from_h0(LaurentMatrix::diagonal({t_pow(2), t_pow(-1)})) == SplittingType({2, -1}));
  CHECK(splitting_from_h0(build_left_matrix(1, -1)) == SplittingType({-2, -2}));
  CHECK(splitting_from_h0(build_right_matrix(2, 1)) == SplittingType({1, -2, -2}));
  CHECK_THROWS_AS(splitting_from_h0(LaurentMatrix{{t_pow(1), 1}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("birkhoff_factorize examples") {
  const BirkhoffWitness w1 = birkhoff_factorize(LaurentMatrix{{t_pow(3)}});
  CHECK(w1.U == LaurentMatrix{{1}});
  CHECK(w1.D == LaurentMatrix{{t_pow(3)}});
  CHECK(w1.V == LaurentMatrix{{1}});

  const LaurentMatrix l11 = build_left_matrix(1, 1);
  const BirkhoffWitness w2 = birkhoff_factorize(l11);
  CHECK(w2.D == LaurentMatrix::identity(2));
  CHECK(w2.U * w2.V == l11);
  CHECK(witness_is_valid(w2, l11));

  const BirkhoffWitness w3 = birkhoff_factorize(build_right_matrix(1, -1));
  CHECK(w3.D == LaurentMatrix::diagonal({t_pow(-1), t_pow(-3)}));
  CHECK_THROWS_AS(birkhoff_factorize(LaurentMatrix{{t_pow(1) + 1}}), std::invalid_argument);
}

TEST_CASE("witness validation rejects tampered factors") {
  const LaurentMatrix m = build_left_matrix(2, 0);
  BirkhoffWitness w = birkhoff_factorize(m);
  REQUIRE(witness_is_valid(w, m));
  BirkhoffWitness bad = w;
  bad.D(0, 0) = bad.D(0, 0) * t_pow(1);
  CHECK_FALSE(witness_is_valid(bad, m));
  bad = w;
  bad.U(0, 0) += t_pow(-1);
  CHECK_FALSE(witness_is_valid(bad, m));
}

TEST_CASE("predicted splitting examples") {
  CHECK(predicted_splitting(JetSpec(1, 2, 5, Side::Left)) == SplittingType({3, 3, 3}));
  CHECK(predicted_splitting(JetSpec(1, 3, 1, Side::Left)) == SplittingType({0, 0, -4, -4}));
  CHECK(predicted_splitting(JetSpec(1, 3, 0, Side::Right)) == SplittingType({0, -4, -4, -4}));
  CHECK_THROWS_AS(predicted_splitting(JetSpec(2, 1, 3, Side::Left)), UnsupportedCase);
  CHECK(alternative_left_splitting(3, 1) == SplittingType({0, 0, -3, -3, -3}));
  CHECK_THROWS_AS(alternative_left_splitting(2, 2), UnsupportedCase);
}

TEST_CASE("twist_bounds bracket the splitting") {
  for (int i = 0; i < 30; ++i) {
    const KnownCocycle kc = random_known_cocycle();
    const auto [lo, hi] = twist_bounds(kc.m);
    for (int a : kc.type.twists()) {
      CHECK(lo <= a);
      CHECK(a <= hi);
    }
  }
}

TEST_CASE("property: known cocycles U*diag(t^a)*V are recovered exactly") {
  for (int i = 0; i < 60; ++i) {
    const KnownCocycle kc = random_known_cocycle();
    CAPTURE(kc.m.to_string());
    CHECK(splitting_from_h0(kc.m) == kc.type);
    const BirkhoffWitness w = birkhoff_factorize(kc.m);
    CHECK(witness_is_valid(w, kc.m));
    CHECK(w.splitting() == kc.type);
    for (int n = -3; n <= 3; ++n) CHECK(h0_of_twisted_cocycle(kc.m, n) == kc.type.h0(n));
  }
}

TEST_CASE("property: jet cocycles, h0 route = witness = closed form") {
  for (int k = 1; k <= 6; ++k)
    for (int d = -6; d <= 6; ++d)
      for (Side side : {Side::Left, Side::Right}) {
        CAPTURE(k);
        CAPTURE(d);
        const LaurentMatrix m = build_matrix(k, d, side);
        const SplittingType by_h0 = splitting_from_h0(m);
        const BirkhoffWitness w = birkhoff_factorize(m);
        CHECK(witness_is_valid(w, m));
        CHECK(by_h0 == w.splitting());
        CHECK(by_h0 == predicted_splitting(JetSpec(1, k, d, side)));
        CHECK(by_h0.c1() == det(m).as_unit()->second);
        CHECK(by_h0.rank() == m.rows());
      }
}

TEST_CASE("property: twisting by t^m shifts every twist by m") {
  for (int k = 1; k <= 4; ++k)
    for (int d = -4; d <= 4; d += 2)
      for (Side side : {Side::Left, Side::Right}) {
        const LaurentMatrix m = build_matrix(k, d, side);
        const SplittingType base = splitting_from_h0(m);
        for (int s = -2; s <= 2; ++s) CHECK(splitting_from_h0(m.scaled(t_pow(s))) == base.shifted(s));
      }
  for (int i = 0; i < 15; ++i) {
    const KnownCocycle kc = random_known_cocycle();
    for (int s = -2; s <= 2; ++s) CHECK(splitting_from_h0(kc.m.scaled(t_pow(s))) == kc.type.shifted(s));
  }
}
