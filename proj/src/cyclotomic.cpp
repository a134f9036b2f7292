#include "locred/cyclotomic.hpp"

#include "locred/error.hpp"

namespace locred {

namespace {

// Element of Z[zeta_l] on the basis zeta^0..zeta^(l-1), kept with a zero
// last coordinate.
using CycInt = std::vector<Integer>;

void normalise(CycInt& a) {
  const Integer top = a.back();
  if (top == 0) return;
  for (auto& c : a) c -= top;
}

// a * (sum of zeta^k for k in support)
CycInt mul_sparse(const CycInt& a, const std::vector<std::uint64_t>& support) {
  const std::size_t l = a.size();
  CycInt out(l);
  for (std::size_t i = 0; i < l; ++i) {
    if (a[i] == 0) continue;
    for (auto k : support) out[(i + k) % l] += a[i];
  }
  normalise(out);
  return out;
}

bool is_rational(const CycInt& a) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

}  // namespace

PeriodField period_minpoly(std::uint64_t ell, std::uint64_t d) {
  if (!is_prime(ell)) throw Error(ErrorCode::NotPrime, std::to_string(ell));
  if (d == 0 || (ell - 1) % d != 0) {
    throw Error(ErrorCode::NotDividing, std::to_string(d) + " does not divide " + std::to_string(ell - 1));
  }
  const std::uint64_t g = smallest_primitive_root(ell);
  const std::uint64_t f = (ell - 1) / d;  // |H_d|
  PeriodField out;
  out.ell = ell;
  out.d = d;
  // H_d = <g^d>; coset i is g^i * H_d.
  std::vector<std::vector<std::uint64_t>> supports(d);
  std::uint64_t gi = 1;
  const std::uint64_t gd = powmod(g, d, ell);
  for (std::uint64_t i = 0; i < d; ++i) {
    out.coset_reps.push_back(gi);
    std::uint64_t x = gi;
    for (std::uint64_t k = 0; k < f; ++k) {
      supports[i].push_back(x);
      x = mulmod(x, gd, ell);
    }
    gi = mulmod(gi, g, ell);
  }
  // prod (X - eta_i), coefficients in Z[zeta], constant term first.
  std::vector<CycInt> poly{CycInt(ell)};
  poly[0][0] = 1;
  for (std::uint64_t i = 0; i < d; ++i) {
    std::vector<CycInt> next(poly.size() + 1, CycInt(ell));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      for (std::size_t j = 0; j < ell; ++j) next[k + 1][j] += poly[k][j];
      CycInt t = mul_sparse(poly[k], supports[i]);
      for (std::size_t j = 0; j < ell; ++j) next[k][j] -= t[j];
    }
    for (auto& c : next) normalise(c);
    poly = std::move(next);
  }
  std::vector<Integer> coeffs;
  for (const auto& c : poly) {
    if (!is_rational(c)) {
      throw Error(ErrorCode::InvalidArgument, "period polynomial has a non-rational coefficient");
    }
    coeffs.push_back(c[0]);
  }
  out.minpoly = IntPolynomial(std::move(coeffs));
  return out;
}

bool is_dth_power_mod(const Integer& a, std::uint64_t r, std::uint64_t d) {
  if (d == 0 || (r - 1) % d != 0) {
    throw Error(ErrorCode::NotDividing, std::to_string(d) + " does not divide " + std::to_string(r) + " - 1");
  }
  Integer red;
  const Integer rr = static_cast<unsigned long>(r);
  mpz_fdiv_r(red.get_mpz_t(), a.get_mpz_t(), rr.get_mpz_t());
  if (red == 0) throw Error(ErrorCode::NotCoprime, to_decimal(a) + " is divisible by " + std::to_string(r));
  return powmod(to_u64(red), (r - 1) / d, r) == 1;
}

bool splits_completely_in_period_field(std::uint64_t p, const PeriodField& f) {
  if (p == f.ell) throw Error(ErrorCode::Ramified, std::to_string(p) + " ramifies in Q(zeta_" + std::to_string(p) + ")");
  return is_dth_power_mod(static_cast<unsigned long>(p), f.ell, f.d);
}

std::uint64_t find_r(std::uint64_t ell, std::uint64_t q, std::uint64_t bound) {
  if (!is_prime(ell)) throw Error(ErrorCode::NotPrime, std::to_string(ell));
  if (!is_prime(q)) throw Error(ErrorCode::NotPrime, std::to_string(q));
  if ((ell - 1) % q != 0) throw Error(ErrorCode::NotDividing, "l != 1 mod q");
  for (std::uint64_t r = 2; r <= bound; r = next_prime(r)) {
    if (r == q || r == ell || (r - 1) % q != 0) continue;
    if (!is_dth_power_mod(static_cast<unsigned long>(r), ell, q)) continue;  // r splits in L_l
    if (!is_dth_power_mod(static_cast<unsigned long>(ell), r, q)) continue;  // l splits in L_r
    return r;
  }
  throw Error(ErrorCode::SearchExhausted, "no r <= " + std::to_string(bound));
}

}  // namespace locred
