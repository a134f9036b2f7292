#include <doctest.h>

#include "locred/error.hpp"
#include "locred/finitefield.hpp"
#include "oracles.hpp"

using namespace locred;

TEST_CASE("field axioms in F_8 and F_9") {
  for (auto [p, d] : {std::pair<std::uint64_t, int>{2, 3}, {3, 2}, {5, 1}}) {
    const auto k = FqContext::make(p, d);
    CHECK(k.order() == static_cast<std::uint64_t>(std::pow(p, d)));
    for (std::uint64_t a = 0; a < k.order(); ++a) {
      CHECK(k.add(a, k.neg(a)) == 0);
      if (a) CHECK(k.mul(a, k.inv(a)) == 1);
      CHECK(k.pow(a, k.order()) == a);
      CHECK(k.pow(k.pth_root(a), p) == a);
      for (std::uint64_t b = 0; b < k.order(); ++b) CHECK(k.mul(a, b) == k.mul(b, a));
    }
  }
}

TEST_CASE("generator and trace") {
  const auto k = FqContext::make(2, 4);
  const auto g = k.smallest_generator();
  std::uint64_t x = g;
  int order = 1;
  while (x != 1) {
    x = k.mul(x, g);
    ++order;
  }
  CHECK(order == 15);
  // trace is additive and hits every residue equally often
  std::vector<int> hits(2, 0);
  for (std::uint64_t a = 0; a < k.order(); ++a) ++hits[k.trace(a)];
  CHECK(hits[0] == 8);
  CHECK(hits[1] == 8);
}

TEST_CASE("explicit modulus is checked") {
  CHECK_NOTHROW(FqContext::with_modulus(2, {1, 1, 1}));
  CHECK_THROWS_AS(FqContext::with_modulus(2, {1, 0, 1}), Error);
  CHECK_THROWS_AS(FqContext::with_modulus(4, {1, 1}), Error);
}

TEST_CASE("polynomial arithmetic over F_7") {
  const auto k = fq_context(7, 1);
  const FqPoly a(k, {1, 2, 3});
  const FqPoly b(k, {6, 1});
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  auto [g, s, t] = ext_gcd(a, b);
  CHECK(s * a + t * b == g);
  CHECK(g.is_monic());
}

TEST_CASE("factorization of x^q - x gives all linear factors") {
  const auto k = FqContext::make(3, 2);
  const FqPoly f = FqPoly::monomial(k, 1, 9) - FqPoly::x(k);
  const auto fac = fq_poly_factor(f);
  CHECK(fac.size() == 9);
  for (const auto& x : fac) {
    CHECK(x.factor.degree() == 1);
    CHECK(x.multiplicity == 1);
  }
}

TEST_CASE("squarefree decomposition in characteristic p") {
  const auto k = fq_context(3, 1);
  // (x + 1)^3 (x + 2)^2 x: the cube is a p-th power
  const FqPoly a(k, {1, 1});
  const FqPoly b(k, {2, 1});
  const FqPoly f = a * a * a * b * b * FqPoly::x(k);
  const auto sq = squarefree_decomposition(f);
  FqPoly prod = FqPoly::constant(k, 1);
  for (const auto& s : sq) {
    for (int i = 0; i < s.multiplicity; ++i) prod = prod * s.factor;
  }
  CHECK(prod == f);
  CHECK(factor_pattern(f) == std::vector<int>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("irreducibility agrees with trial division") {
  std::mt19937_64 rng(3);
  for (auto [p, d] : {std::pair<std::uint64_t, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const auto k = FqContext::make(p, d);
    for (int i = 0; i < 60; ++i) {
      const auto f = oracle::random_fq_poly(rng, k, 1 + static_cast<int>(rng() % 6));
      CHECK(fq_poly_irreducible(f) == oracle::fq_irreducible_brute(f));
    }
  }
}

TEST_CASE("number of linear factors equals the number of roots") {
  std::mt19937_64 rng(5);
  const auto k = FqContext::make(2, 3);
  for (int i = 0; i < 100; ++i) {
    const auto f = oracle::random_fq_poly(rng, k, 1 + static_cast<int>(rng() % 7));
    std::uint64_t linear = 0;
    for (const auto& x : fq_poly_factor(f, 9)) linear += x.factor.degree() == 1;
    CHECK(linear == oracle::fq_root_count(f));
  }
}

TEST_CASE("factoring is deterministic for a seed") {
  const auto k = fq_context(101, 1);
  std::mt19937_64 rng(8);
  const auto f = oracle::random_fq_poly(rng, k, 12);
  const auto a = fq_poly_factor(f, 42);
  const auto b = fq_poly_factor(f, 42);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].factor == b[i].factor);
}

TEST_CASE("text form") {
  const auto f = FqPoly::parse("1,1,1@2^1");
  CHECK(f.degree() == 2);
  CHECK(fq_poly_irreducible(f));
  CHECK(FqPoly::parse(f.to_string()) == f);
}
