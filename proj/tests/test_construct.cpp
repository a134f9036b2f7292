#include <doctest.h>

#include "locred/certificate.hpp"
#include "locred/construct.hpp"
#include "locred/error.hpp"
#include "locred/ratfactor.hpp"

using namespace locred;

TEST_CASE("compositum of two quadratic fields") {
  Integer c;
  CHECK(compositum_minpoly(IntPolynomial{-2, 0, 1}, IntPolynomial{-3, 0, 1}, &c) == IntPolynomial{1, 0, -10, 0, 1});
  CHECK(c == 1);
  CHECK(compositum_minpoly(IntPolynomial{-1, 1, 1}, IntPolynomial{3, 1, 1}) == IntPolynomial{20, 10, 9, 4, 1});
}

TEST_CASE("scan records patterns and skips primes dividing lc") {
  const auto s = scan(IntPolynomial{1, 0, 0, 0, 1}, 100);
  CHECK(s.primes == 25);
  CHECK_FALSE(s.any_irreducible());
  const auto t = scan(IntPolynomial{-1, -1, 0, 0, 0, 1}, 100);
  CHECK(t.any_irreducible());
  CHECK(scan(IntPolynomial{1, 0, 3}, 10).primes == 3);
  CHECK(pattern_string({1, 1, 2}) == "[1,1,2]");
  // the digest depends on the data only
  CHECK(scan(IntPolynomial{1, 0, 0, 0, 1}, 100, 7).digest == s.digest);
}

TEST_CASE("A_4 quartic search") {
  const auto f = find_a4_quartic();
  CHECK(f == IntPolynomial{12, 8, 0, 0, 1});
  CHECK(is_a4_quartic(f));
  CHECK_FALSE(is_a4_quartic(IntPolynomial{1, 0, 0, 0, 1}));
}

TEST_CASE("Hilbert quartic") {
  const auto r = hilbert_quartic(0, 1, 200);
  CHECK(r.polynomial == IntPolynomial{1, 0, 0, 0, 1});
  CHECK(r.irreducible);
  CHECK_FALSE(r.scan.any_irreducible());
  CHECK(r.q2.status == LocalStatus::ProvedIrreducible);
  // x^4 + 2x^2 + 1 = (x^2 + 1)^2 is not irreducible
  CHECK_FALSE(hilbert_quartic(1, 1, 50).irreducible);
}

TEST_CASE("prime factors with a large cofactor") {
  Integer left;
  const Integer n = Integer("1000000007") * Integer("998244353") * 12;
  const auto f = prime_factors(n, &left);
  CHECK(left == 1);
  REQUIRE(f.size() == 4);
  CHECK(f[0] == 2);
  CHECK(f[3] == Integer("1000000007"));
  CHECK(prime_factors(Integer(1)).empty());
}

TEST_CASE("n = 4 p-adic construction verifies") {
  const auto cert = construct_padic(4);
  CHECK(cert.construction.ell == 5);
  CHECK(cert.construction.r == 11);
  REQUIRE(cert.polynomial.has_value());
  CHECK(*cert.polynomial == IntPolynomial{20, 10, 9, 4, 1});
  const auto v = verify_certificate(cert);
  CHECK(v.status == VerdictStatus::Verified);
}

TEST_CASE("n = 4 mod-p construction verifies") {
  const auto cert = construct_modp(4);
  REQUIRE(cert.polynomial.has_value());
  CHECK(cert.polynomial->degree() == 4);
  CHECK(z_irreducible(*cert.polynomial));
  CHECK(verify_certificate(cert).status == VerdictStatus::Verified);
}

TEST_CASE("squarefree degree gives a group certificate only") {
  const auto cert = construct_padic(15);
  CHECK(cert.certificate_only);
  CHECK_FALSE(cert.polynomial.has_value());
  CHECK(verify_certificate(cert).status == VerdictStatus::Inconclusive);
  CHECK_THROWS_AS(construct_padic(7), Error);
}

TEST_CASE("tampered certificates are falsified") {
  const auto cert = construct_padic(4);
  {
    auto bad = cert;
    bad.polynomial = IntPolynomial{-4, 0, 0, 0, 1};  // reducible over Q
    const auto v = verify_certificate(bad);
    CHECK(v.status == VerdictStatus::Falsified);
    CHECK_FALSE(v.reason.empty());
  }
  {
    auto bad = cert;
    bad.construction.r = 13;
    CHECK(verify_certificate(bad).status == VerdictStatus::Falsified);
  }
  {
    auto bad = cert;
    bad.claims.order += 1;
    CHECK(verify_certificate(bad).status == VerdictStatus::Falsified);
  }
  {
    auto bad = cert;
    bad.scan->digest = "0000000000000000";
    CHECK(verify_certificate(bad).status == VerdictStatus::Falsified);
  }
}

TEST_CASE("certificate JSON round trip") {
  const auto cert = construct_padic(4);
  const std::string text = certificate_to_json(cert);
  const auto back = certificate_from_json(text);
  CHECK(certificate_to_json(back) == text);
  CHECK(verify_certificate(back).status == VerdictStatus::Verified);
  CHECK_THROWS_AS(certificate_from_json("{"), Error);
  CHECK_THROWS_AS(certificate_from_json("{\"schema\": \"other\"}"), Error);
}
