#include "locred/arith.hpp"

#include <algorithm>
#include <array>

#include "locred/error.hpp"

namespace locred {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ExactDivisionFailed: return "ExactDivisionFailed";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::NotAPerfectSquare: return "NotAPerfectSquare";
    case ErrorCode::DegenerateResolvent: return "DegenerateResolvent";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::LeadingCoefficientDivisible: return "LeadingCoefficientDivisible";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::DifferentParents: return "DifferentParents";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateModule: return "DegenerateModule";
    case ErrorCode::NotDividing: return "NotDividing";
    case ErrorCode::Ramified: return "Ramified";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NotComposite: return "NotComposite";
    case ErrorCode::PrimitiveElementSearchFailed: return "PrimitiveElementSearchFailed";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
    case ErrorCode::NotCoprimeExponent: return "NotCoprimeExponent";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Integer parse_integer(const std::string& text) {
  std::string trimmed;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') trimmed.push_back(c);
  }
  if (!trimmed.empty() && trimmed.front() == '+') trimmed.erase(trimmed.begin());
  Integer value;
  if (trimmed.empty() || value.set_str(trimmed, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not a decimal integer: '" + text + "'");
  }
  return value;
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

namespace {

constexpr std::array<unsigned, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(const Integer& n) {
  Integer d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  const Integer n_minus_1 = n - 1;
  for (unsigned a : kWitnesses) {
    Integer base = a;
    if (base % n == 0) continue;
    Integer x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (unsigned small : kWitnesses) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (unsigned a : kWitnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  static const Integer kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) return miller_rabin(n);
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factor_u64(n)) out.push_back(p);
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  if (gcd_u64(a % m, m) != 1) throw Error(ErrorCode::NotCoprime, "order of a non-unit");
  // phi(m) via factorization, then strip factors.
  std::uint64_t phi = m;
  for (auto p : prime_divisors(m)) phi = phi / p * (p - 1);
  std::uint64_t order = phi;
  for (auto p : prime_divisors(phi)) {
    while (order % p == 0 && powmod(a, order / p, m) == 1) order /= p;
  }
  return order;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (p == 2) return 1;
  const auto divisors = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generator = std::all_of(divisors.begin(), divisors.end(),
                                 [&](std::uint64_t r) { return powmod(g, (p - 1) / r, p) != 1; });
    if (generator) return g;
  }
  throw Error(ErrorCode::InvalidArgument, "no primitive root found");
}

int valuation(const Integer& a, std::uint64_t p) {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  Integer x = abs(a);
  int v = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    ++v;
  }
  return v;
}

bool is_perfect_square(const Integer& a) {
  return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

bool is_squarefree(std::uint64_t n) {
  for (const auto& [p, e] : factor_u64(n)) {
    if (e > 1) return false;
  }
  return n != 0;
}

std::uint64_t to_u64(const Integer& a) {
  if (a < 0 || !mpz_fits_ulong_p(a.get_mpz_t())) {
    throw Error(ErrorCode::InvalidArgument, "integer out of 64-bit range: " + to_decimal(a));
  }
  return a.get_ui();
}

}  // namespace locred
