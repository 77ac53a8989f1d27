#include "jets/serialization.hpp"
#include "jets/splitting.hpp"
#include "jets/verify.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace jets;
using jets::testing::random_matrix;
using jets::testing::random_poly;
using jets::testing::t_pow;
using jets::testing::uniform_int;

namespace {

// Round-trip through text, not just through the Json value.
template <class T, class Decode>
T through_text(const T& value, Decode decode) {
  return decode(Json::parse(to_json(value).dump()));
}

}  // namespace

TEST_CASE("Laurent polynomial schema") {
  const LaurentPoly p = t_pow(2) - t_pow(-1, Rational(3, 4));
  const Json j = to_json(p);
  CHECK(j == Json::parse(R"([{"exp":-1,"num":"-3","den":"4"},{"exp":2,"num":"1","den":"1"}])"));
  CHECK(to_json(LaurentPoly()) == Json::array());
  CHECK_THROWS_AS(laurent_poly_from_json(Json::parse(R"([{"exp":0,"num":"0","den":"1"}])")), std::invalid_argument);
  CHECK_THROWS_AS(laurent_poly_from_json(Json::parse(R"({"exp":0})")), std::invalid_argument);
  CHECK_THROWS(laurent_poly_from_json(Json::parse(R"([{"exp":0,"num":"1","den":"0"}])")));
}

TEST_CASE("Laurent matrix schema") {
  const LaurentMatrix m{{t_pow(2)}};
  CHECK(to_json(m) == Json::parse(R"({"rows":1,"cols":1,"entries":[[[{"exp":2,"num":"1","den":"1"}]]]})"));
  CHECK_THROWS_AS(laurent_matrix_from_json(Json::parse(R"({"rows":2,"cols":1,"entries":[[[]]]})")),
                  std::invalid_argument);
}

TEST_CASE("property: random polynomials and matrices round-trip") {
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random_poly(6, -8, 8);
    CHECK(through_text(p, laurent_poly_from_json) == p);
  }
  for (int i = 0; i < 50; ++i) {
    const auto r = static_cast<std::size_t>(uniform_int(1, 4));
    const auto c = static_cast<std::size_t>(uniform_int(1, 4));
    const LaurentMatrix m = random_matrix(r, c, 3);
    CHECK(through_text(m, laurent_matrix_from_json) == m);
  }
  const LaurentPoly huge = LaurentPoly::monomial(Rational::from_strings("-98765432109876543210987654321", "3"), -40);
  CHECK(through_text(huge, laurent_poly_from_json) == huge);
}

TEST_CASE("property: domain values round-trip") {
  for (int k = 1; k <= 4; ++k)
    for (int d = -4; d <= 4; ++d)
      for (Side side : {Side::Left, Side::Right}) {
        const JetSpec spec(1, k, d, side);
        CHECK(through_text(spec, jet_spec_from_json) == spec);

        const LaurentMatrix m = build_matrix(k, d, side);
        const SplittingType st = splitting_from_h0(m);
        CHECK(through_text(st, splitting_type_from_json) == st);

        const BirkhoffWitness w = birkhoff_factorize(m);
        const BirkhoffWitness w2 = through_text(w, birkhoff_witness_from_json);
        CHECK(w2.U == w.U);
        CHECK(w2.D == w.D);
        CHECK(w2.V == w.V);

        const FiberReport r = verify_fiber(spec);
        const FiberReport r2 = through_text(r, fiber_report_from_json);
        CHECK(r2.spec == r.spec);
        CHECK(r2.predicted == r.predicted);
        CHECK(r2.predicted_weights == r.predicted_weights);
        CHECK(r2.oracle_weights == r.oracle_weights);
        CHECK(r2.expected_dimension == r.expected_dimension);
        CHECK(r2.match() == r.match());
      }
  const FiberReport pn = verify_fiber(JetSpec(3, 2, 4, Side::Left));
  CHECK(through_text(pn, fiber_report_from_json).oracle_weights == pn.oracle_weights);

  for (int N = 1; N <= 3; ++N)
    for (int d = -6; d <= 6; ++d) {
      const CohomologyTable t = line_bundle_cohomology(N, d);
      CHECK(through_text(t, cohomology_table_from_json) == t);
    }
  const CohomologyTable ideal = twisted_ideal_cohomology(3, 1);
  CHECK(through_text(ideal, cohomology_table_from_json) == ideal);
}

TEST_CASE("verify report round-trips with check order intact") {
  VerifyOptions opts;
  opts.kmax = 2;
  opts.dmin = -1;
  opts.dmax = 3;
  opts.Nmax = 2;
  opts.threads = 1;
  const VerifyReport r = run_verify(opts);
  const VerifyReport r2 = through_text(r, verify_report_from_json);
  CHECK(r2 == r);
  CHECK(r2.summary() == r.summary());
  CHECK(r2.left_band_statement() == r.left_band_statement());
}
