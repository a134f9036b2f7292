#pragma once

#include <cstdint>
#include <vector>

#include "locred/arith.hpp"
#include "locred/intpoly.hpp"

namespace locred {

/// The degree-d subfield of Q(zeta_l), generated by a Gaussian period.
struct PeriodField {
  std::uint64_t ell = 0;
  std::uint64_t d = 0;
  std::vector<std::uint64_t> coset_reps;  // g^0 .. g^(d-1), g the smallest primitive root
  IntPolynomial minpoly;                  // monic, degree d
};

/// Periods eta_i = sum over a in c_i*H_d of zeta^a, multiplied out exactly in
/// Z[zeta_l] (length-l coefficient vectors, normalised by
/// 1 + zeta + ... + zeta^(l-1) = 0 so that the last coordinate is zero).
/// Cost is about d * l^2 integer operations.
PeriodField period_minpoly(std::uint64_t ell, std::uint64_t d);

/// a^((r-1)/d) == 1 mod r.
bool is_dth_power_mod(const Integer& a, std::uint64_t r, std::uint64_t d);

/// p splits completely in F iff p mod l is a d-th power.
bool splits_completely_in_period_field(std::uint64_t p, const PeriodField& f);

constexpr std::uint64_t kDefaultRSearchBound = 1000000;

/// Smallest prime r <= bound, r not in {q, l}, with r = 1 mod q, r a q-th
/// power mod l and l a q-th power mod r.
std::uint64_t find_r(std::uint64_t ell, std::uint64_t q, std::uint64_t bound = kDefaultRSearchBound);

}  // namespace locred
