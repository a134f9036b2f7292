// Randomised property suites with fixed seeds.
#include <doctest.h>

#include "locred/certificate.hpp"
#include "locred/construct.hpp"
#include "locred/cyclotomic.hpp"
#include "locred/ffcase.hpp"
#include "locred/padic.hpp"
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

TEST_CASE("resultant identities") {
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 1000; ++i) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto f = oracle::random_poly(rng, m, 9);
    const auto g = oracle::random_poly(rng, n, 9);
    const auto h = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 9);
    const Integer rfg = resultant(f, g);
    CHECK(rfg == oracle::sylvester_resultant(f, g));
    CHECK(resultant(g, f) == ((m * n) % 2 ? Integer(-rfg) : rfg));
    CHECK(resultant(f, g * h) == rfg * resultant(f, h));
    if (i % 4 == 0) {
      // Res(f, f') = (-1)^(m(m-1)/2) lc(f) disc(f)
      const Integer sign = (m * (m - 1) / 2) % 2 ? -1 : 1;
      CHECK(resultant(f, f.derivative()) == sign * f.leading() * discriminant(f));
    }
  }
}

TEST_CASE("z_factor multiplies back") {
  std::mt19937_64 rng(2002);
  for (int i = 0; i < 500; ++i) {
    IntPolynomial f{1};
    const int parts = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < parts; ++j) f = f * oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 6);
    if (rng() % 5 == 0) f = f * f;
    const auto z = z_factor(f, i);
    CHECK(expand(z) == f);
    for (const auto& x : z.factors) {
      CHECK(x.factor.content() == 1);
      CHECK(x.factor.leading() > 0);
    }
  }
}

TEST_CASE("z_factor agrees with numerical root grouping") {
  std::mt19937_64 rng(3003);
  int compared = 0;
  int reducible = 0;
  for (int i = 0; i < 400; ++i) {
    IntPolynomial f;
    if (i % 2 == 0) {
      f = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 5), 10);
    } else {
      f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 3) *
          oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 3);
    }
    f = f.primitive_part();
    if (f.degree() < 1 || !is_squarefree(f)) continue;
    const auto expected = oracle::numeric_factor_count(f);
    if (!expected) continue;
    const auto z = z_factor(f);
    int count = 0;
    for (const auto& x : z.factors) count += x.multiplicity;
    CHECK(count == *expected);
    CHECK(z_irreducible(f) == (*expected == 1));
    ++compared;
    reducible += *expected > 1;
  }
  CHECK(compared > 300);
  CHECK(reducible > 100);
}

TEST_CASE("fq_poly_factor multiplies back into irreducibles") {
  std::mt19937_64 rng(4004);
  const std::vector<FqContext> fields{FqContext::make(2, 1), FqContext::make(3, 1), FqContext::make(2, 3),
                                      FqContext::make(3, 2), FqContext::make(101, 1), FqContext::make(7, 2)};
  for (int i = 0; i < 1000; ++i) {
    const auto& k = fields[static_cast<std::size_t>(i) % fields.size()];
    auto f = oracle::random_fq_poly(rng, k, 1 + static_cast<int>(rng() % 10), false);
    if (rng() % 4 == 0) f = f * f;
    const auto fac = fq_poly_factor(f, i);
    FqPoly prod = FqPoly::constant(k, f.leading());
    for (const auto& x : fac) {
      CHECK(x.factor.is_monic());
      if (x.factor.degree() <= 4 && k.order() <= 9) CHECK(oracle::fq_irreducible_brute(x.factor));
      for (int j = 0; j < x.multiplicity; ++j) prod = prod * x.factor;
    }
    CHECK(prod == f);
  }
}

TEST_CASE("Hensel lifts satisfy their congruences") {
  std::mt19937_64 rng(5005);
  int lifted = 0;
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 11, 13}[i % 5];
    const auto f = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 5), 30, true);
    const auto k = fq_context(p, 1);
    const FqPoly fbar = FqPoly::from_int_poly(k, f);
    if (!is_squarefree(f) || gcd(fbar, fbar.derivative()).degree() > 0) continue;
    const auto fac = fq_poly_factor(fbar);
    if (fac.size() < 2) continue;
    FqPoly rest = FqPoly::constant(k, 1);
    for (std::size_t j = 1; j < fac.size(); ++j) rest = rest * fac[j].factor;
    const auto pair = make_hensel_pair(f, to_int_poly(fac[0].factor), to_int_poly(rest), p);
    const int target = 2 + static_cast<int>(rng() % 10);
    const auto up = hensel_lift(f, pair, target);
    const Integer m = up.modulus();
    CHECK(up.k >= target);
    CHECK(reduce_mod(f - up.g * up.h, m).is_zero());
    CHECK(reduce_mod(up.u * up.g + up.v * up.h - IntPolynomial{1}, m).is_zero());
    CHECK(up.h.is_monic());
    CHECK(reduce_mod(up.h - to_int_poly(rest), Integer(static_cast<unsigned long>(p))).is_zero());
    ++lifted;
  }
  CHECK(lifted > 50);
}

TEST_CASE("Newton polygon length bookkeeping") {
  std::mt19937_64 rng(6006);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[i % 3];
    auto f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 8), 200);
    const auto np = newton_polygon(f, p);
    int total = 0;
    for (std::size_t j = 0; j < np.slopes.size(); ++j) {
      total += np.slopes[j].second;
      if (j) CHECK(np.slopes[j - 1].first < np.slopes[j].first);
    }
    CHECK(total == f.degree() - np.x_power);
    REQUIRE(!np.hull.empty());
    CHECK(np.hull.front() == np.points.front());
    CHECK(np.hull.back() == np.points.back());
    // every point lies on or above the hull
    for (const auto& [x, y] : np.points) {
      for (std::size_t j = 0; j + 1 < np.hull.size(); ++j) {
        const auto [x0, y0] = np.hull[j];
        const auto [x1, y1] = np.hull[j + 1];
        if (x < x0 || x > x1) continue;
        CHECK(static_cast<long>(y - y0) * (x1 - x0) >= static_cast<long>(y1 - y0) * (x - x0));
      }
    }
  }
}

TEST_CASE("local certificates are sound") {
  std::mt19937_64 rng(6106);
  int irreducible = 0;
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[i % 4];
    const auto g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 8, true);
    const auto h = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 8, true);
    const auto prod = g * h;
    if (is_squarefree(prod)) {
      const auto v = qp_certificate(prod, p);
      CHECK(v.status != LocalStatus::ProvedIrreducible);
      if (v.status != LocalStatus::Unknown) CHECK(check_local_verdict(prod, p, v));
    }
    const auto f = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 5), 16, true);
    if (!is_squarefree(f)) continue;
    const auto v = qp_certificate(f, p);
    if (v.status == LocalStatus::ProvedIrreducible) {
      CHECK(z_irreducible(f));
      ++irreducible;
    }
    if (v.status != LocalStatus::Unknown) CHECK(check_local_verdict(f, p, v));
  }
  CHECK(irreducible > 0);
}

TEST_CASE("period-field invariants") {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> table{{5, 2}, {7, 2}, {7, 3}, {11, 2}, {11, 5}, {13, 3}};
  for (auto [ell, d] : table) {
    const auto f = period_minpoly(ell, d).minpoly;
    CHECK(f.degree() == static_cast<int>(d));
    CHECK(f.is_monic());
    CHECK(z_irreducible(f));
    CHECK(f.coeff(static_cast<int>(d) - 1) == 1);  // the periods sum to -1
    Integer left;
    for (const auto& q : prime_factors(discriminant(f), &left)) CHECK(q == ell);
    CHECK(left == 1);
  }
}

TEST_CASE("trace criterion agrees with root counting at every place of degree <= 4") {
  for (auto [p, e, dmax] : {std::tuple<std::uint64_t, long, int>{2, 1, 4}, {2, 3, 4}, {3, 1, 4}, {3, 2, 4}, {5, 1, 2}}) {
    const ASCaseParams params{p, e};
    for (const auto& pl : fpt_places(p, dmax)) {
      for (auto which : {ASComponent::L, ASComponent::M}) {
        const auto a = as_local_degree(params, which, pl);
        const auto b = as_local_degree_bruteforce(params, which, pl);
        CHECK(a.degree == b.degree);
        CHECK(a.ramified == b.ramified);
      }
    }
  }
}

TEST_CASE("every emitted certificate re-verifies after a JSON round trip") {
  struct Case {
    std::uint64_t n;
    Mode mode;
  };
  for (const auto& c : {Case{4, Mode::ModP}, Case{4, Mode::PAdic}, Case{6, Mode::ModP}, Case{9, Mode::PAdic},
                        Case{12, Mode::PAdic}, Case{15, Mode::PAdic}, Case{10, Mode::ModP}}) {
    const auto cert = c.mode == Mode::ModP ? construct_modp(c.n) : construct_padic(c.n);
    const auto text = certificate_to_json(cert);
    const auto back = certificate_from_json(text);
    CHECK(certificate_to_json(back) == text);
    const auto v = verify_certificate(back);
    if (cert.certificate_only) {
      CHECK(v.status == VerdictStatus::Inconclusive);
    } else {
      CHECK(v.status == VerdictStatus::Verified);
    }
  }
}
