#include <doctest.h>

#include "locred/error.hpp"
#include "locred/intpoly.hpp"
#include "oracles.hpp"

using namespace locred;

TEST_CASE("parse and print round trip") {
  const auto f = IntPolynomial::parse("1,0,0,0,1");
  CHECK(f.degree() == 4);
  CHECK(f.to_string() == "1,0,0,0,1");
  CHECK(f.pretty() == "x^4 + 1");
  CHECK(IntPolynomial::parse(" -3, 0 ,2 ").to_string() == "-3,0,2");
  CHECK(IntPolynomial::parse("5,0,0").degree() == 0);
  CHECK_THROWS_AS(IntPolynomial::parse("1,,2"), Error);
  CHECK_THROWS_AS(IntPolynomial::parse("a"), Error);
  CHECK_THROWS_AS(IntPolynomial::parse(""), Error);
}

TEST_CASE("zero polynomial conventions") {
  IntPolynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == IntPolynomial::kZeroDegree);
  CHECK(z.content() == 0);
  CHECK(IntPolynomial{0, 0}.is_zero());
}

TEST_CASE("arithmetic and exact division") {
  const IntPolynomial a{1, 1};   // x + 1
  const IntPolynomial b{-1, 1};  // x - 1
  CHECK(a * b == IntPolynomial{-1, 0, 1});
  CHECK(exact_div(IntPolynomial{-1, 0, 1}, a) == b);
  CHECK_THROWS_AS(exact_div(IntPolynomial{1, 0, 1}, a), Error);
  CHECK_FALSE(divide_if_exact(IntPolynomial{1, 0, 1}, a).has_value());
  CHECK(IntPolynomial{2, 4, -6}.primitive_part() == IntPolynomial{-1, -2, 3});
  CHECK(IntPolynomial{2, 4, -6}.content() == 2);
}

TEST_CASE("gcd and squarefreeness") {
  const IntPolynomial f = IntPolynomial{-1, 0, 1} * IntPolynomial{2, 1};
  const IntPolynomial g = IntPolynomial{1, 1} * IntPolynomial{3, 0, 1};
  CHECK(poly_gcd(f, g) == IntPolynomial{1, 1});
  CHECK(is_squarefree(f));
  CHECK_FALSE(is_squarefree(f * IntPolynomial{1, 1}));
}

TEST_CASE("resultants and discriminants on known values") {
  CHECK(discriminant(IntPolynomial{1, 0, 0, 0, 1}) == 256);
  CHECK(discriminant(IntPolynomial{-2, 0, 1}) == 8);
  // x^3 + a x + b has discriminant -4a^3 - 27b^2
  CHECK(discriminant(IntPolynomial{5, -3, 0, 1}) == -4 * (-27) - 27 * 25);
  CHECK(resultant(IntPolynomial{-2, 0, 1}, IntPolynomial{-3, 0, 1}) == 1);
  CHECK(resultant(IntPolynomial{-1, 1}, IntPolynomial{-1, 0, 1}) == 0);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 6), 20);
    const auto g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 6), 20);
    CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
  }
}

TEST_CASE("shifts, scaling and interpolation") {
  const IntPolynomial f{1, 0, 0, 0, 1};
  CHECK(poly_shift(f, 1) == IntPolynomial{2, 4, 6, 4, 1});
  CHECK(poly_negate_variable(IntPolynomial{1, 2, 3}) == IntPolynomial{1, -2, 3});
  CHECK(poly_scale_root(IntPolynomial{-2, 0, 1}, 3) == IntPolynomial{-18, 0, 1});
  const auto r = interpolate({0, 1, 2}, {1, 2, 5});
  CHECK(r.is_integral());
  CHECK(r.numerator() == IntPolynomial{1, 0, 1});
  CHECK(poly_exact_sqrt(IntPolynomial{1, 2, 1}) == IntPolynomial{1, 1});
  CHECK_THROWS_AS(poly_exact_sqrt(IntPolynomial{1, 3, 1}), Error);
}

TEST_CASE("bivariate resultant by interpolation") {
  // Res_y(y^2 - 2, (x - y)^2 - 3) is the minimal polynomial of sqrt2 + sqrt3
  const IntPolynomial f{-2, 0, 1};
  auto g_at = [](const Integer& x) { return IntPolynomial({x * x - 3, -2 * x, 1}); };
  CHECK(resultant_in_x(f, g_at, 4) == IntPolynomial{1, 0, -10, 0, 1});
}

TEST_CASE("pair-sum resolvent") {
  // roots of x^4 - 1 are 1, -1, i, -i; pair sums 0, 1+i, 1-i, -1+i, -1-i, 0
  CHECK_THROWS_AS(pair_sum_resolvent(IntPolynomial{-1, 0, 0, 0, 1}), Error);
  const auto s = pair_sum_resolvent(IntPolynomial{12, 8, 0, 0, 1});
  CHECK(s == IntPolynomial{-64, 0, -48, 0, 0, 0, 1});
}
