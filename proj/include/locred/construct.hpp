#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locred/intpoly.hpp"
#include "locred/padic.hpp"

namespace locred {

/// Minimal polynomial of alpha + c*beta for roots alpha of f and beta of g,
/// with the smallest c in 1..10 that makes Res_y(f(y), g_c(x - y)) squarefree
/// (g_c the minimal polynomial of c*beta). Writes c to *multiplier.
IntPolynomial compositum_minpoly(const IntPolynomial& f, const IntPolynomial& g, Integer* multiplier = nullptr);

struct ScanRecord {
  std::uint64_t bound = 0;
  std::size_t primes = 0;
  std::vector<std::uint64_t> irreducible_primes;  // pattern [deg f]
  std::map<std::string, std::size_t> histogram;   // "[1,1,2]" -> count
  std::string digest;                             // FNV-1a 64 over "p:pattern;" lines

  bool any_irreducible() const { return !irreducible_primes.empty(); }
};

std::string pattern_string(const std::vector<int>& pattern);
/// Factor pattern of f mod p for every prime p <= bound (p not dividing
/// lc(f); other primes are skipped and not counted).
ScanRecord scan(const IntPolynomial& f, std::uint64_t bound, std::uint64_t seed = 0);

enum class Mode { ModP, PAdic };
std::string_view to_string(Mode m);

struct ComponentField {
  std::uint64_t conductor = 0;
  std::uint64_t degree = 0;
  IntPolynomial minpoly;
};

struct Construction {
  std::string family;  // "compositum", "a4-pair-sum", "group-only"
  std::uint64_t q = 0;
  std::uint64_t m = 0;
  std::uint64_t ell1 = 0, ell2 = 0;  // mod-p compositum
  std::uint64_t ell = 0, r = 0;      // p-adic pair
  std::uint64_t p_star = 0;          // 0 when absent
  std::vector<ComponentField> components;
  std::vector<Integer> multipliers;  // one per compositum step
  std::optional<IntPolynomial> base_quartic;
};

struct GroupClaims {
  std::string group;  // descriptor accepted by build_from_descriptor
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  std::uint64_t index = 0;
  bool lemma1 = false;
  std::optional<bool> lemma3;
  std::optional<std::uint64_t> local_degree_bound;
};

struct RamifiedWitness {
  std::uint64_t p = 0;
  std::string reason;  // condition6 | condition7 | ramified-in-single-component | group-exponent
  std::map<std::string, std::string> data;
};

struct Certificate {
  Mode mode = Mode::ModP;
  std::uint64_t degree = 0;
  bool certificate_only = false;
  std::string note;
  Construction construction;
  std::optional<IntPolynomial> polynomial;
  GroupClaims claims;
  std::vector<RamifiedWitness> witnesses;
  std::optional<ScanRecord> scan;
};

struct ConstructOptions {
  std::uint64_t r_bound = 1000000;
  std::uint64_t scan_bound = 1000;
  std::uint64_t seed = 0;
};

/// n = q^2 m (q the smallest prime with q^2 | n): compositum of the
/// degree-q period fields of conductors l1 < l2 (smallest primes = 1 mod 2q)
/// and, if m > 1, the degree-m period field of the smallest prime
/// p* = 1 mod m outside {l1, l2}. n = 6: pair-sum sextic of an A_4 quartic.
/// Other squarefree n: group certificate only.
Certificate construct_modp(std::uint64_t n, const ConstructOptions& opts = {});
/// n = q^2 m: l = smallest prime = 1 mod 2q, r = find_r(l, q), optional
/// period field at p* = smallest prime = 1 mod m outside {l, r}.
/// Squarefree n: group certificate only.
Certificate construct_padic(std::uint64_t n, const ConstructOptions& opts = {});

/// Discriminant square, resolvent cubic irreducible, f irreducible.
bool is_a4_quartic(const IntPolynomial& f);
/// First A_4 quartic x^4 + a3 x^3 + a2 x^2 + a1 x + a0 in lexicographic
/// order of (a3, a2, a1, a0), each running through 0, 1, -1, ..., 20, -20,
/// whose pair-sum resolvent is squarefree.
IntPolynomial find_a4_quartic();

struct HilbertReport {
  IntPolynomial polynomial;
  bool irreducible = false;
  ScanRecord scan;
  LocalVerdict q2;
};
/// x^4 + 2a x^2 + b^2.
HilbertReport hilbert_quartic(const Integer& a, const Integer& b, std::uint64_t scan_bound = 1000);

enum class VerdictStatus { Verified, Falsified, Inconclusive };
std::string_view to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::string reason;             // for Falsified
  std::vector<std::string> gaps;  // for Inconclusive
  std::vector<std::string> log;   // every check performed
};

/// Re-derives every claim of the certificate; scan_bound defaults to the
/// recorded one.
Verdict verify_certificate(const Certificate& cert, std::optional<std::uint64_t> scan_bound = std::nullopt,
                           std::uint64_t seed = 0);

/// Distinct prime factors of |a|: trial division to 10^5, then perfect-power
/// and Pollard-Brent splitting. Whatever cannot be split within the
/// iteration budget is multiplied into *leftover (1 when fully factored).
std::vector<Integer> prime_factors(const Integer& a, Integer* leftover = nullptr);

}  // namespace locred
