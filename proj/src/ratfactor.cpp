#include "locred/ratfactor.hpp"

#include <algorithm>

#include "locred/error.hpp"

namespace locred {

namespace {

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::NotCoprime, "no inverse of " + to_decimal(a) + " mod " + to_decimal(m));
  }
  return r;
}

// a = q*h + r with h monic; integral long division.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& h) {
  if (a.degree() < h.degree()) return {IntPolynomial{}, a};
  std::vector<Integer> rem = a.coefficients();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - h.degree() + 1));
  const int dh = h.degree();
  for (int k = a.degree() - dh; k >= 0; --k) {
    Integer c = rem[static_cast<std::size_t>(k + dh)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= dh; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(), h.coeff(j).get_mpz_t());
    }
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

FqPoly to_fp(const FqContext& ctx, const IntPolynomial& f) { return FqPoly::from_int_poly(ctx, f); }

bool zero_mod(const IntPolynomial& f, const Integer& m) { return reduce_mod(f, m).is_zero(); }

}  // namespace

IntPolynomial reduce_mod(const IntPolynomial& f, const Integer& m) {
  std::vector<Integer> v = f.coefficients();
  for (auto& c : v) c = mod_floor(c, m);
  return IntPolynomial(std::move(v));
}

IntPolynomial symmetric_mod(const IntPolynomial& f, const Integer& m) {
  std::vector<Integer> v = f.coefficients();
  const Integer half = m / 2;
  for (auto& c : v) {
    c = mod_floor(c, m);
    if (c > half) c -= m;
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial to_int_poly(const FqPoly& f) {
  if (f.context().degree() != 1) throw Error(ErrorCode::InvalidArgument, "expected a prime field polynomial");
  std::vector<Integer> v;
  for (auto c : f.coefficients()) v.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(v));
}

Integer mignotte_bound(const IntPolynomial& f) {
  if (f.is_zero()) return 0;
  Integer norm = 0;
  for (const auto& c : f.coefficients()) norm = std::max(norm, Integer(abs(c)));
  const unsigned long n = static_cast<unsigned long>(f.degree());
  Integer root;
  Integer np1 = n + 1;
  mpz_sqrt(root.get_mpz_t(), np1.get_mpz_t());
  if (root * root < np1) root += 1;
  return root * ipow(2, n) * norm * abs(f.leading());
}

HenselPair make_hensel_pair(const IntPolynomial& f, const IntPolynomial& g, const IntPolynomial& h,
                            std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p) != 0) {
    throw Error(ErrorCode::LeadingCoefficientDivisible, "p | lc(f)");
  }
  const FqContext ctx = fq_context(p, 1);
  FqPoly gg = to_fp(ctx, g);
  FqPoly hh = to_fp(ctx, h);
  if (gg.is_zero() || hh.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero factor mod p");
  // Normalise h to be monic, moving its leading unit into g.
  const auto lead_h = hh.leading();
  hh = hh.monic();
  gg = gg.scaled(lead_h);
  if (!(to_fp(ctx, f) == gg * hh)) throw Error(ErrorCode::InvalidArgument, "f != g*h mod p");
  if (gg.degree() + hh.degree() != f.degree()) throw Error(ErrorCode::InvalidArgument, "degree mismatch mod p");
  auto [d, s, t] = ext_gcd(gg, hh);
  if (!d.is_one()) throw Error(ErrorCode::NotCoprime, "factors share " + d.to_string());
  HenselPair pair;
  pair.p = p;
  pair.k = 1;
  pair.g = to_int_poly(gg);
  pair.h = to_int_poly(hh);
  pair.u = to_int_poly(s);
  pair.v = to_int_poly(t);
  return pair;
}

bool hensel_pair_valid(const IntPolynomial& f, const HenselPair& pair) {
  const Integer m = pair.modulus();
  if (!pair.h.is_monic()) return false;
  if (pair.g.degree() + pair.h.degree() != f.degree()) return false;
  if (!zero_mod(f - pair.g * pair.h, m)) return false;
  if (!zero_mod(pair.u * pair.g + pair.v * pair.h - IntPolynomial{1}, m)) return false;
  return true;
}

HenselPair hensel_lift(const IntPolynomial& f, const HenselPair& pair, int target_k) {
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), pair.p) != 0) {
    throw Error(ErrorCode::LeadingCoefficientDivisible, "p | lc(f)");
  }
  {
    const FqContext ctx = fq_context(pair.p, 1);
    if (!gcd(to_fp(ctx, pair.g), to_fp(ctx, pair.h)).is_one()) {
      throw Error(ErrorCode::NotCoprime, "g and h share a factor mod p");
    }
  }
  if (!hensel_pair_valid(f, pair)) throw Error(ErrorCode::InvalidArgument, "input pair violates its congruences");
  if (target_k < pair.k) throw Error(ErrorCode::InvalidArgument, "target exponent below current");
  HenselPair cur = pair;
  const Integer p = static_cast<unsigned long>(pair.p);
  while (cur.k < target_k) {
    const int next_k = std::min(2 * cur.k, target_k);
    const Integer m = ipow(p, static_cast<unsigned long>(next_k));
    const IntPolynomial& g = cur.g;
    const IntPolynomial& h = cur.h;
    const IntPolynomial& s = cur.u;
    const IntPolynomial& t = cur.v;
    // von zur Gathen-Gerhard Hensel step.
    IntPolynomial e = reduce_mod(f - g * h, m);
    auto [q, r] = divmod_monic(reduce_mod(s * e, m), h);
    q = reduce_mod(q, m);
    r = reduce_mod(r, m);
    IntPolynomial g_new = reduce_mod(g + t * e + q * g, m);
    IntPolynomial h_new = reduce_mod(h + r, m);
    IntPolynomial b = reduce_mod(s * g_new + t * h_new - IntPolynomial{1}, m);
    auto [c, d] = divmod_monic(reduce_mod(s * b, m), h_new);
    IntPolynomial s_new = reduce_mod(s - d, m);
    IntPolynomial t_new = reduce_mod(t - t * b - c * g_new, m);
    cur.g = std::move(g_new);
    cur.h = std::move(h_new);
    cur.u = std::move(s_new);
    cur.v = std::move(t_new);
    cur.k = next_k;
    if (!hensel_pair_valid(f, cur)) throw Error(ErrorCode::InvalidArgument, "Hensel step lost a congruence");
  }
  return cur;
}

std::vector<IntPolynomial> multifactor_lift(const IntPolynomial& f, const std::vector<FqPoly>& factors,
                                            std::uint64_t p, int k) {
  const Integer m = ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(k));
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "no factors to lift");
  if (factors.size() == 1) {
    return {reduce_mod(f * inverse_mod(f.leading(), m), m)};
  }
  const FqContext& ctx = factors.front().context();
  const std::size_t mid = factors.size() / 2;
  FqPoly left = FqPoly::constant(ctx, ctx.from_integer(f.leading()));
  for (std::size_t i = 0; i < mid; ++i) left = left * factors[i];
  FqPoly right = FqPoly::constant(ctx, 1);
  for (std::size_t i = mid; i < factors.size(); ++i) right = right * factors[i];
  HenselPair pair = make_hensel_pair(f, to_int_poly(left), to_int_poly(right), p);
  HenselPair lifted = hensel_lift(f, pair, k);
  std::vector<FqPoly> lf(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(mid));
  std::vector<FqPoly> rf(factors.begin() + static_cast<std::ptrdiff_t>(mid), factors.end());
  std::vector<IntPolynomial> out = multifactor_lift(lifted.g, lf, p, k);
  std::vector<IntPolynomial> rest = multifactor_lift(lifted.h, rf, p, k);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<ZFactor> squarefree_decomposition(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<ZFactor> out;
  IntPolynomial a = f.primitive_part();
  if (a.degree() <= 0) return out;
  IntPolynomial b = poly_gcd(a, a.derivative());
  IntPolynomial c = exact_div(a, b);
  IntPolynomial d = exact_div(a.derivative(), b) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    IntPolynomial ai = poly_gcd(c, d);
    if (ai.degree() > 0) out.push_back({ai, i});
    IntPolynomial c_next = exact_div(c, ai);
    IntPolynomial d_next = exact_div(d, ai) - c_next.derivative();
    c = std::move(c_next);
    d = std::move(d_next);
    ++i;
  }
  return out;
}

namespace {

// Irreducible factors of a primitive squarefree polynomial with lc > 0.
std::vector<IntPolynomial> zassenhaus(const IntPolynomial& a, std::uint64_t seed) {
  if (a.degree() <= 1) return {a};
  const Integer disc = discriminant(a);
  const Integer& lc = a.leading();

  std::uint64_t best_p = 0;
  std::vector<FqPoly> best_factors;
  int admissible = 0;
  for (std::uint64_t p = 2; admissible < 5; p = next_prime(p)) {
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p) != 0 || mpz_divisible_ui_p(disc.get_mpz_t(), p) != 0) continue;
    ++admissible;
    const FqContext ctx = fq_context(p, 1);
    std::vector<FqPoly> facs;
    for (auto& fac : fq_poly_factor(FqPoly::from_int_poly(ctx, a), seed)) facs.push_back(fac.factor);
    if (facs.size() == 1) return {a};
    if (best_p == 0 || facs.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(facs);
    }
  }

  const Integer bound = mignotte_bound(a);
  const Integer p = static_cast<unsigned long>(best_p);
  int k = 1;
  Integer m = p;
  while (m <= 2 * bound) {
    m *= p;
    ++k;
  }
  std::vector<IntPolynomial> lifted = multifactor_lift(a, best_factors, best_p, k);

  std::vector<IntPolynomial> found;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  IntPolynomial cur = a;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      IntPolynomial cand = IntPolynomial::constant(cur.leading());
      for (auto i : idx) cand = reduce_mod(cand * lifted[remaining[i]], m);
      cand = symmetric_mod(cand, m);
      if (!cand.is_zero()) {
        cand = cand.primitive_part();
        const bool trailing_ok =
            cand.coeff(0) == 0 || mpz_divisible_p(cur.coeff(0).get_mpz_t(), cand.coeff(0).get_mpz_t()) != 0;
        if (trailing_ok && cand.degree() > 0) {
          if (auto q = divide_if_exact(cur, cand)) {
            found.push_back(cand);
            cur = *q;
            std::vector<std::size_t> rest;
            for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
              if (j < idx.size() && idx[j] == i) {
                ++j;
                continue;
              }
              rest.push_back(remaining[i]);
            }
            remaining = std::move(rest);
            hit = true;
            break;
          }
        }
      }
      // next combination in lexicographic order
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == remaining.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (cur.degree() > 0) found.push_back(cur.primitive_part());
  return found;
}

bool zfactor_less(const ZFactor& a, const ZFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& x = a.factor.coefficients();
  const auto& y = b.factor.coefficients();
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

ZFactorization z_factor(const IntPolynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor of zero");
  ZFactorization out;
  out.unit_content = f.content();
  if (f.leading() < 0) out.unit_content = -out.unit_content;
  for (const auto& part : squarefree_decomposition(f)) {
    for (auto& irreducible : zassenhaus(part.factor, seed)) out.factors.push_back({irreducible, part.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(), zfactor_less);
  return out;
}

bool z_irreducible(const IntPolynomial& f, std::uint64_t seed) {
  if (f.degree() < 1) return false;
  const auto fz = z_factor(f, seed);
  return fz.factors.size() == 1 && fz.factors.front().multiplicity == 1;
}

}  // namespace locred
