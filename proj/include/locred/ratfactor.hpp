#pragma once

#include <cstdint>
#include <vector>

#include "locred/finitefield.hpp"
#include "locred/intpoly.hpp"

namespace locred {

/// f = g * h mod p^k with u*g + v*h = 1 mod p^k. h is monic; g carries the
/// leading coefficient of f. Coefficients are kept in [0, p^k).
struct HenselPair {
  std::uint64_t p = 2;
  int k = 1;
  IntPolynomial g;
  IntPolynomial h;
  IntPolynomial u;
  IntPolynomial v;

  Integer modulus() const { return ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(k)); }
};

/// Coefficients reduced into [0, m).
IntPolynomial reduce_mod(const IntPolynomial& f, const Integer& m);
/// Coefficients reduced into (-m/2, m/2].
IntPolynomial symmetric_mod(const IntPolynomial& f, const Integer& m);

IntPolynomial to_int_poly(const FqPoly& f);

/// Landau-Mignotte style bound: every factor g of f in Z[x] satisfies
/// ||g||_inf <= sqrt(n+1) * 2^n * ||f||_inf; the result is additionally
/// multiplied by |lc(f)| so it also covers lc(f)-scaled candidates during
/// recombination. sqrt(n+1) is rounded up.
Integer mignotte_bound(const IntPolynomial& f);

/// Builds a pair at exponent 1 from a coprime split f = g*h mod p.
HenselPair make_hensel_pair(const IntPolynomial& f, const IntPolynomial& g, const IntPolynomial& h,
                            std::uint64_t p);
/// True iff all congruences of the pair hold exactly for f.
bool hensel_pair_valid(const IntPolynomial& f, const HenselPair& pair);
/// Quadratic lifting to exponent target_k (>= pair.k).
HenselPair hensel_lift(const IntPolynomial& f, const HenselPair& pair, int target_k);

/// Lifts f = lc(f) * prod(factors) mod p (factors monic, pairwise coprime)
/// to monic u_i with f = lc(f) * prod(u_i) mod p^k.
std::vector<IntPolynomial> multifactor_lift(const IntPolynomial& f, const std::vector<FqPoly>& factors,
                                            std::uint64_t p, int k);

struct ZFactor {
  IntPolynomial factor;  // primitive, positive leading coefficient
  int multiplicity = 1;
};

struct ZFactorization {
  Integer unit_content;  // signed content: f = unit_content * prod factor^mult
  std::vector<ZFactor> factors;
};

/// Yun's squarefree decomposition of the primitive part of f.
std::vector<ZFactor> squarefree_decomposition(const IntPolynomial& f);

/// Complete factorization over Q. Squarefree parts are factored by
/// Zassenhaus: prime with fewest modular factors among the first five
/// admissible ones, Hensel lift above twice the Mignotte bound, and subset
/// recombination smallest-first. Recombination costs up to 2^(r-1) trial
/// divisions for r modular factors.
ZFactorization z_factor(const IntPolynomial& f, std::uint64_t seed = 0);
bool z_irreducible(const IntPolynomial& f, std::uint64_t seed = 0);

}  // namespace locred
