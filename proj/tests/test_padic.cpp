#include <doctest.h>

#include "locred/padic.hpp"

using namespace locred;

TEST_CASE("Newton polygon of (x^2 + 2)(x^2 + 4) at 2") {
  const auto np = newton_polygon(IntPolynomial{2, 0, 1} * IntPolynomial{4, 0, 1}, 2);
  REQUIRE(np.slopes.size() == 2);
  CHECK(np.slopes[0].first == Rational(-1));
  CHECK(np.slopes[0].second == 2);
  CHECK(np.slopes[1].first == Rational(-1, 2));
  CHECK(np.slopes[1].second == 2);
}

TEST_CASE("Newton polygon with a power of x and collinear points") {
  const auto np = newton_polygon(IntPolynomial{0, 0, 8, 4, 2, 1}, 2);
  CHECK(np.x_power == 2);
  REQUIRE(np.slopes.size() == 1);
  CHECK(np.slopes[0].first == Rational(-1));
  CHECK(np.slopes[0].second == 3);
  CHECK(np.hull.size() == 2);
}

TEST_CASE("x^4 + 1 is irreducible over Q_2 by an Eisenstein shift") {
  const IntPolynomial f{1, 0, 0, 0, 1};
  const auto v = qp_certificate(f, 2);
  CHECK(v.status == LocalStatus::ProvedIrreducible);
  CHECK(v.witness.kind == WitnessKind::EisensteinSlope);
  CHECK(v.witness.shift == 1);
  CHECK(v.witness.slope_a == Rational(1, 4));
  CHECK(check_local_verdict(f, 2, v));
}

TEST_CASE("Hensel split at an unramified prime") {
  const IntPolynomial f{-2, 0, 1};
  const auto v = qp_certificate(f, 7);
  CHECK(v.status == LocalStatus::ProvedReducible);
  CHECK(v.witness.kind == WitnessKind::HenselSplit);
  CHECK(check_local_verdict(f, 7, v));
  // irreducible mod 5 and unramified, but neither a split nor a single
  // Eisenstein slope is available to the procedure
  CHECK(qp_certificate(f, 5).status == LocalStatus::Unknown);
}

TEST_CASE("two slopes certify reducibility") {
  const IntPolynomial f = IntPolynomial{2, 0, 1} * IntPolynomial{4, 0, 1};
  const auto v = qp_certificate(f, 2);
  CHECK(v.status == LocalStatus::ProvedReducible);
  CHECK(check_local_verdict(f, 2, v));
}

TEST_CASE("undecided case is reported as Unknown") {
  const auto v = qp_certificate(IntPolynomial{4, 0, 2, 0, 1}, 2);
  CHECK(v.status == LocalStatus::Unknown);
}

TEST_CASE("a forged witness is rejected") {
  const IntPolynomial f{1, 0, 0, 0, 1};
  auto v = qp_certificate(f, 2);
  v.witness.shift = 0;
  CHECK_FALSE(check_local_verdict(f, 2, v));
  LocalVerdict fake;
  fake.status = LocalStatus::ProvedReducible;
  fake.witness.kind = WitnessKind::HenselSplit;
  fake.witness.first = {1, 1};
  fake.witness.second = {1, 1, 1};
  CHECK_FALSE(check_local_verdict(f, 2, fake));
}

TEST_CASE("default shift range") { CHECK(default_shift_range(5) == 12); }
