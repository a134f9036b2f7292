#include <doctest.h>

#include "locred/error.hpp"
#include "locred/ffcase.hpp"
#include "oracles.hpp"

using namespace locred;

namespace {

RatFunc tpoly(const FqContext& fp, std::vector<std::uint64_t> c) {
  return RatFunc(FqPoly(fp, c), FqPoly::constant(fp, 1));
}

}  // namespace

TEST_CASE("rational function arithmetic") {
  const auto fp = fq_context(3, 1);
  const RatFunc t = RatFunc::t(fp);
  const RatFunc one = RatFunc::constant(fp, 1);
  const RatFunc a = (t + one) / (t * t);
  CHECK(a * a.inverse() == one);
  CHECK((a - a).is_zero());
  CHECK(RatFunc::t_power(fp, -2) * RatFunc::t_power(fp, 2) == one);
  CHECK(a.invert_variable() == t * (t + one));
  CHECK(a.invert_variable().invert_variable() == a);
  CHECK_THROWS_AS(RatFunc(FqPoly::x(fp), FqPoly(fp)), Error);
}

TEST_CASE("polynomials over F_p(t)") {
  const auto fp = fq_context(2, 1);
  const RatFunc t = RatFunc::t(fp);
  const RatFunc one = RatFunc::constant(fp, 1);
  const RatFuncPolynomial f(fp, {t, one});        // x + t
  const RatFuncPolynomial g(fp, {one, t, one});   // x^2 + t x + 1
  const auto prod = rf_mul(f, g);
  auto [q, r] = rf_divmod(prod, g);
  CHECK(q == f);
  CHECK(r.degree() < 0);
  CHECK(rf_gcd(prod, f) == f);
  // Res(x + t, g) = g(-t) = g(t) in characteristic 2
  CHECK(rf_resultant(f, g) == one);
  CHECK(prod.eval(t) == RatFunc(fp));
}

TEST_CASE("places of F_2(t) up to degree 2") {
  const auto places = fpt_places(2, 2);
  REQUIRE(places.size() == 4);
  CHECK(places[0].infinite);
  CHECK(places[1].to_string() == "t");
  CHECK(places[2].to_string() == "t + 1");
  CHECK(places[3].to_string() == "t^2 + t + 1");
  CHECK(necklace_count(2, 4) == 3);
  CHECK(necklace_count(3, 3) == 8);
}

TEST_CASE("place inversion is an involution") {
  for (const auto& pl : fpt_places(3, 3)) {
    const auto img = invert_place(pl, 3);
    CHECK(img.degree == pl.degree);
    CHECK(invert_place(img, 3) == pl);
  }
}

TEST_CASE("local degrees of the two Artin-Schreier components for p = 2, e = 1") {
  const ASCaseParams params{2, 1};
  const auto places = fpt_places(2, 2);
  const auto inf = as_local_degree(params, ASComponent::L, places[0]);
  CHECK(inf.ramified);
  CHECK(inf.degree == 2);
  CHECK(as_local_degree(params, ASComponent::L, places[1]).degree == 1);
  CHECK(as_local_degree(params, ASComponent::L, places[2]).degree == 2);
  CHECK(as_local_degree(params, ASComponent::L, places[3]).degree == 2);
  CHECK(as_local_degree(params, ASComponent::M, places[1]).ramified);
  CHECK_FALSE(as_local_degree(params, ASComponent::M, places[0]).ramified);
}

TEST_CASE("closed form for p = 2, e = 1") {
  const auto c = build_case3(2, 1);
  const auto fp = fq_context(2, 1);
  CHECK(c.multiplier == RatFunc::t(fp));
  const RatFuncPolynomial expect(fp, {tpoly(fp, {0, 1, 0, 1}), tpoly(fp, {0, 1, 1}), tpoly(fp, {1, 1, 1}),
                                      RatFunc(fp), RatFunc::constant(fp, 1)});
  CHECK(c.poly == expect);
}

TEST_CASE("elimination agrees with the hand-derived closed form") {
  for (auto [p, e] : {std::pair<std::uint64_t, long>{2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 2}}) {
    const auto c = build_case3(p, e);
    CHECK(c.poly.degree() == static_cast<int>(p * p));
    CHECK(c.poly == oracle::as_closed_form(p, e, c.multiplier));
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(build_case3(4, 1), Error);
  CHECK_THROWS_AS(build_case3(3, 3), Error);
  CHECK_THROWS_AS(build_case3(2, 0), Error);
}

TEST_CASE("place-by-place verification") {
  for (auto [p, e, dmax] : {std::tuple<std::uint64_t, long, int>{2, 1, 4}, {2, 3, 4}, {3, 1, 3}}) {
    const auto c = build_case3(p, e);
    const auto r = verify_case3(c.poly, c.params, dmax);
    CHECK(r.census_ok);
    CHECK(r.degrees_ok);
    CHECK(r.ramification_ok);
    CHECK(r.symmetry_ok);
    CHECK(r.separable);
    CHECK(r.pass);
    for (const auto& pr : r.places) {
      for (int d : pr.factor_degrees) CHECK(d <= static_cast<int>(p));
    }
  }
}

TEST_CASE("a wrong polynomial fails verification") {
  const auto fp = fq_context(2, 1);
  // x^4 + x + t has a place where it stays irreducible of degree 4
  const RatFuncPolynomial bad(fp, {RatFunc::t(fp), RatFunc::constant(fp, 1), RatFunc(fp), RatFunc(fp),
                                   RatFunc::constant(fp, 1)});
  CHECK_FALSE(verify_case3(bad, ASCaseParams{2, 1}, 4).pass);
}
