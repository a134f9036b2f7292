#pragma once
// Independent reference computations used only by the tests. Nothing here
// calls into the algorithms it is meant to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "locred/ffcase.hpp"
#include "locred/finitefield.hpp"
#include "locred/groups.hpp"
#include "locred/intpoly.hpp"

namespace oracle {

using locred::Integer;
using locred::IntPolynomial;

// Determinant by Bareiss fraction-free elimination.
inline Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Res(f, g) as the determinant of the Sylvester matrix.
inline Integer sylvester_resultant(const IntPolynomial& f, const IntPolynomial& g) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] = f.coeff(i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - i)] = g.coeff(i);
  }
  return bareiss_det(std::move(s));
}

using cplx = std::complex<long double>;

// Complex roots by the Aberth-Ehrlich iteration.
inline std::optional<std::vector<cplx>> complex_roots(const IntPolynomial& f) {
  const int n = f.degree();
  std::vector<long double> c;
  for (const auto& x : f.coefficients()) c.push_back(x.get_d());
  for (auto& x : c) x /= c.back();
  auto eval = [&](cplx z, cplx& d) {
    cplx v = 0;
    d = 0;
    for (int i = n; i >= 0; --i) {
      d = d * z + v;
      v = v * z + c[static_cast<std::size_t>(i)];
    }
    return v;
  };
  long double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)]));
  radius += 1;
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(radius * 0.9L, 2 * std::numbers::pi_v<long double> * (k + 0.25L) / n);
  for (int it = 0; it < 500; ++it) {
    long double worst = 0;
    for (int k = 0; k < n; ++k) {
      cplx d;
      const cplx v = eval(z[static_cast<std::size_t>(k)], d);
      if (v == cplx(0)) continue;
      const cplx ratio = v / d;
      cplx sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += 1.0L / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      }
      const cplx step = ratio / (1.0L - ratio * sum);
      z[static_cast<std::size_t>(k)] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-16L) return z;
  }
  return std::nullopt;
}

// Number of irreducible factors over Q of a squarefree integer polynomial of
// small degree: repeatedly finds the smallest set of complex roots whose
// monic product, times some divisor of the leading coefficient, has
// integer coefficients.
inline std::optional<int> numeric_factor_count(const IntPolynomial& f) {
  auto roots = complex_roots(f);
  if (!roots) return std::nullopt;
  const long lc = std::labs(f.leading().get_si());
  std::vector<cplx> rest = *roots;
  int count = 0;
  while (!rest.empty()) {
    const int n = static_cast<int>(rest.size());
    bool found = false;
    for (int size = 1; size <= n && !found; ++size) {
      std::vector<int> sel(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) sel[static_cast<std::size_t>(i)] = i;
      while (!found) {
        std::vector<cplx> prod{1};
        for (int i : sel) {
          std::vector<cplx> next(prod.size() + 1, 0);
          for (std::size_t j = 0; j < prod.size(); ++j) {
            next[j + 1] += prod[j];
            next[j] -= prod[j] * rest[static_cast<std::size_t>(i)];
          }
          prod = next;
        }
        for (long c = 1; c <= lc && !found; ++c) {
          if (lc % c) continue;
          bool integral = true;
          for (const auto& x : prod) {
            const cplx y = x * static_cast<long double>(c);
            if (std::abs(y.imag()) > 1e-6L || std::abs(y.real() - std::round(y.real())) > 1e-6L) integral = false;
          }
          found = integral;
        }
        if (found) {
          std::vector<cplx> keep;
          for (int i = 0; i < n; ++i) {
            if (std::find(sel.begin(), sel.end(), i) == sel.end()) keep.push_back(rest[static_cast<std::size_t>(i)]);
          }
          rest = keep;
          ++count;
          break;
        }
        int pos = size - 1;
        while (pos >= 0 && sel[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
        if (pos < 0) break;
        ++sel[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < size; ++i) sel[static_cast<std::size_t>(i)] = sel[static_cast<std::size_t>(i - 1)] + 1;
      }
    }
    if (!found) return std::nullopt;
  }
  return count;
}

inline std::uint64_t fq_root_count(const locred::FqPoly& f) {
  const auto& k = f.context();
  std::uint64_t n = 0;
  for (std::uint64_t x = 0; x < k.order(); ++x) {
    if (f.eval(x) == 0) ++n;
  }
  return n;
}

// Irreducibility by trial division with every monic polynomial of degree
// up to deg(f)/2 over a small field.
inline bool fq_irreducible_brute(const locred::FqPoly& f) {
  const auto& k = f.context();
  const int n = f.degree();
  if (n <= 0) return false;
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= k.order();
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint64_t> c(static_cast<std::size_t>(d + 1));
      std::uint64_t x = code;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = x % k.order();
        x /= k.order();
      }
      c[static_cast<std::size_t>(d)] = 1;
      if ((f % locred::FqPoly(k, c)).is_zero()) return false;
    }
  }
  return true;
}

// Minimal polynomial of w = y + mu*z with y^p - y = t^e, z^p - z = t^-e,
// eliminated by hand: y = -V/D with V = w^p - mu^(p-1) w - t^e - mu^p t^-e,
// D = mu^(p-1) - 1, and then V^p - D^(p-1) V + t^e D^p = 0.
inline locred::RatFuncPolynomial as_closed_form(std::uint64_t p, long e, const locred::RatFunc& mu) {
  using locred::RatFunc;
  using locred::RatFuncPolynomial;
  const auto fp = mu.field();
  const RatFunc zero(fp);
  const RatFunc one = RatFunc::constant(fp, 1);
  std::vector<RatFunc> v(p + 1, zero);
  v[p] = one;
  v[1] = zero - mu.pow(p - 1);
  v[0] = zero - RatFunc::t_power(fp, e) - mu.pow(p) * RatFunc::t_power(fp, -e);
  const RatFuncPolynomial vp(fp, v);
  const RatFunc d = mu.pow(p - 1) - one;
  RatFuncPolynomial vpow(fp, {one});
  for (std::uint64_t i = 0; i < p; ++i) vpow = locred::rf_mul(vpow, vp);
  std::vector<RatFunc> scaled;
  for (const auto& c : vp.coefficients()) scaled.push_back(zero - c * d.pow(p - 1));
  RatFuncPolynomial out = locred::rf_add(vpow, RatFuncPolynomial(fp, scaled));
  return locred::rf_add(out, RatFuncPolynomial(fp, {RatFunc::t_power(fp, e) * d.pow(p)}));
}

// Minimal polynomial of the Gaussian periods of degree d for the prime ell,
// from floating point periods; coefficients rounded.
inline std::vector<long> numeric_period_minpoly(std::uint64_t ell, std::uint64_t d) {
  std::uint64_t g = 2;
  for (;; ++g) {
    bool prim = true;
    std::uint64_t x = 1;
    for (std::uint64_t i = 1; i < ell - 1; ++i) {
      x = x * g % ell;
      if (x == 1) prim = false;
    }
    if (prim) break;
  }
  const std::uint64_t f = (ell - 1) / d;
  std::vector<cplx> periods(d, 0);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < ell - 1; ++k) {
    periods[k % d] += std::polar(1.0L, 2 * std::numbers::pi_v<long double> * static_cast<long double>(x) / ell);
    x = x * g % ell;
  }
  (void)f;
  std::vector<cplx> prod{1};
  for (const auto& r : periods) {
    std::vector<cplx> next(prod.size() + 1, 0);
    for (std::size_t j = 0; j < prod.size(); ++j) {
      next[j + 1] += prod[j];
      next[j] -= prod[j] * r;
    }
    prod = next;
  }
  std::vector<long> out;
  for (const auto& c : prod) out.push_back(std::lround(c.real()));
  return out;
}

// All subgroups of a small group, by closure of every subset containing the
// identity (order <= 16).
inline std::size_t brute_force_subgroup_count(const locred::Group& g) {
  const std::size_t n = g.order();
  const auto id = g.identity();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (!(mask >> id & 1)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < n && closed; ++b) {
        if ((mask >> b & 1) && !(mask >> g.mul(static_cast<locred::Group::Elem>(a), static_cast<locred::Group::Elem>(b)) & 1)) {
          closed = false;
        }
      }
    }
    if (closed) ++count;
  }
  return count;
}

inline IntPolynomial random_poly(std::mt19937_64& rng, int degree, long bound, bool monic = false) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Integer> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(coeff(rng));
  if (monic) c.back() = 1;
  while (c.back() == 0) c.back() = coeff(rng);
  return IntPolynomial(c);
}

inline locred::FqPoly random_fq_poly(std::mt19937_64& rng, const locred::FqContext& k, int degree, bool monic = true) {
  std::uniform_int_distribution<std::uint64_t> elem(0, k.order() - 1);
  std::vector<std::uint64_t> c;
  for (int i = 0; i <= degree; ++i) c.push_back(elem(rng));
  if (monic) c.back() = 1;
  while (c.back() == 0) c.back() = elem(rng);
  return locred::FqPoly(k, c);
}

}  // namespace oracle
