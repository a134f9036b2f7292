#pragma once

// Integer and elementary number theory helpers shared by all modules.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace locred {

using Integer = mpz_class;
using Rational = mpq_class;

Integer parse_integer(const std::string& text);
std::string to_decimal(const Integer& value);

Integer ipow(const Integer& base, unsigned long exp);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Exact below 3.3e24 (first twelve prime bases); above that GMP's
/// Baillie-PSW test is used, so the answer is "probable prime".
bool is_prime(const Integer& n);

std::uint64_t next_prime(std::uint64_t n);  // smallest prime > n
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Trial division; fine for the moduli this project touches (< 2^40 or so).
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// p-adic valuation of a nonzero integer.
int valuation(const Integer& a, std::uint64_t p);

bool is_perfect_square(const Integer& a);
bool is_squarefree(std::uint64_t n);

std::uint64_t to_u64(const Integer& a);  // throws InvalidArgument when out of range

}  // namespace locred
