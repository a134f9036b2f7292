#include <doctest.h>

#include "locred/error.hpp"
#include "locred/ratfactor.hpp"
#include "oracles.hpp"

using namespace locred;

namespace {

IntPolynomial expand(const ZFactorization& z) {
  IntPolynomial prod = IntPolynomial::constant(z.unit_content);
  for (const auto& f : z.factors) {
    for (int i = 0; i < f.multiplicity; ++i) prod = prod * f.factor;
  }
  return prod;
}

}  // namespace

TEST_CASE("known factorizations") {
  const auto a = z_factor(IntPolynomial{-4, 0, 0, 0, 1});
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0].factor == IntPolynomial{-2, 0, 1});
  CHECK(a.factors[1].factor == IntPolynomial{2, 0, 1});

  const auto b = z_factor(IntPolynomial{-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(b.factors.size() == 6);  // cyclotomic factors of x^12 - 1

  const auto c = z_factor(IntPolynomial{1, 0, 2, 0, 1});
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].multiplicity == 2);

  CHECK(z_irreducible(IntPolynomial{1, 0, 0, 0, 1}));
  CHECK(z_irreducible(IntPolynomial{-1, -1, 0, 0, 0, 1}));
  CHECK_FALSE(z_irreducible(IntPolynomial{4, 0, 0, 0, 1}));  // Sophie Germain
}

TEST_CASE("non-monic input and content") {
  const IntPolynomial f = IntPolynomial{3, 2} * IntPolynomial{-1, 0, 5} * Integer(-6);
  const auto z = z_factor(f);
  CHECK(expand(z) == f);
  CHECK(z.factors.size() == 2);
}

TEST_CASE("swinnerton-dyer type polynomial stays irreducible") {
  // minimal polynomial of sqrt2 + sqrt3 + sqrt5: reducible mod every prime
  const IntPolynomial f{576, 0, -960, 0, 352, 0, -40, 0, 1};
  CHECK(z_irreducible(f));
}

TEST_CASE("Mignotte bound covers actual factors") {
  const IntPolynomial g{1, -7, 3, 9};
  const IntPolynomial h{-5, 0, 1, 2};
  const IntPolynomial f = g * h;
  const Integer bound = mignotte_bound(f);
  for (const auto& c : g.coefficients()) CHECK(abs(c) <= bound);
  for (const auto& c : h.coefficients()) CHECK(abs(c) <= bound);
}

TEST_CASE("Hensel lifting keeps the congruences") {
  // x^2 - 2 = (x - 3)(x - 4) mod 7
  const IntPolynomial f{-2, 0, 1};
  const auto pair = make_hensel_pair(f, IntPolynomial{-3, 1}, IntPolynomial{-4, 1}, 7);
  CHECK(hensel_pair_valid(f, pair));
  const auto lifted = hensel_lift(f, pair, 8);
  CHECK(lifted.k >= 8);
  CHECK(hensel_pair_valid(f, lifted));
  const Integer m = lifted.modulus();
  CHECK(reduce_mod(f - lifted.g * lifted.h, m).is_zero());
  CHECK(reduce_mod(lifted.u * lifted.g + lifted.v * lifted.h - IntPolynomial{1}, m).is_zero());
}

TEST_CASE("Hensel pair preconditions") {
  const IntPolynomial f{-2, 0, 1};
  CHECK_THROWS_AS(make_hensel_pair(f, IntPolynomial{-3, 1}, IntPolynomial{-3, 1}, 7), Error);
  CHECK_THROWS_AS(make_hensel_pair(f, IntPolynomial{-3, 1}, IntPolynomial{-4, 1}, 8), Error);
  CHECK_THROWS_AS(make_hensel_pair(IntPolynomial{1, 0, 7}, IntPolynomial{1}, IntPolynomial{1, 0, 7}, 7), Error);
}

TEST_CASE("multifactor lift multiplies back") {
  const IntPolynomial f = IntPolynomial{-1, 1} * IntPolynomial{2, 1} * IntPolynomial{5, 1, 1};
  const std::uint64_t p = 13;
  const auto k = fq_context(p, 1);
  std::vector<FqPoly> mods;
  for (const auto& x : fq_poly_factor(FqPoly::from_int_poly(k, f))) mods.push_back(x.factor);
  const auto lifted = multifactor_lift(f, mods, p, 6);
  IntPolynomial prod{1};
  for (const auto& u : lifted) prod = prod * u;
  CHECK(reduce_mod(f - prod, ipow(Integer(13), 6)).is_zero());
}

TEST_CASE("Yun decomposition") {
  const IntPolynomial a{1, 1};
  const IntPolynomial b{-2, 0, 1};
  const auto sq = squarefree_decomposition(a * b * b * b);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].factor == a);
  CHECK(sq[0].multiplicity == 1);
  CHECK(sq[1].factor == b);
  CHECK(sq[1].multiplicity == 3);
}
