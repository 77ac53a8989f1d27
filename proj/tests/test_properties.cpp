// Randomized invariants over cocycles built from jet matrices and
// unimodular factors of both chart rings.

#include "jets/splitting.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace jets;
using jets::testing::random_jet_cocycle;
using jets::testing::t_pow;

TEST_CASE("property: h0 is stable under enlarging the degree bound") {
  for (int i = 0; i < 50; ++i) {
    const LaurentMatrix m = random_jet_cocycle();
    CAPTURE(m.to_string());
    REQUIRE(verify_cocycle(m));
    const SplittingType st = splitting_from_h0(m);
    const auto [lo, hi] = twist_bounds(m);
    for (int n = -hi - 1; n <= -lo + 1; ++n) {
      CAPTURE(n);
      const int b = default_degree_bound(m, n);
      const long at_b = h0_of_twisted_cocycle(m, n, b);
      CHECK(at_b == h0_of_twisted_cocycle(m, n, b + 2));
      CHECK(at_b == st.h0(n));
    }
  }
}

TEST_CASE("property: random cocycles split consistently") {
  for (int i = 0; i < 50; ++i) {
    const LaurentMatrix m = random_jet_cocycle();
    CAPTURE(m.to_string());
    const SplittingType st = splitting_from_h0(m);
    CHECK(st.rank() == m.rows());
    CHECK(st.c1() == det(m).as_unit()->second);
    const BirkhoffWitness w = birkhoff_factorize(m);
    CHECK(witness_is_valid(w, m));
    CHECK(w.splitting() == st);
    for (int s = -2; s <= 2; ++s) CHECK(splitting_from_h0(m.scaled(t_pow(s))) == st.shifted(s));
  }
}
