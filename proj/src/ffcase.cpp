#include "locred/ffcase.hpp"

#include <algorithm>

#include "locred/error.hpp"

namespace locred {

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const FqContext& fp) : num_(fp), den_(FqPoly::constant(fp, 1)) {}

RatFunc::RatFunc(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "zero denominator");
  normalise();
}

RatFunc RatFunc::constant(const FqContext& fp, std::uint64_t c) {
  return RatFunc(FqPoly::constant(fp, fp.from_u64(c)), FqPoly::constant(fp, 1));
}

RatFunc RatFunc::t(const FqContext& fp) { return RatFunc(FqPoly::x(fp), FqPoly::constant(fp, 1)); }

RatFunc RatFunc::t_power(const FqContext& fp, long k) {
  const FqPoly one = FqPoly::constant(fp, 1);
  if (k >= 0) return RatFunc(FqPoly::monomial(fp, 1, static_cast<int>(k)), one);
  return RatFunc(one, FqPoly::monomial(fp, 1, static_cast<int>(-k)));
}

void RatFunc::normalise() {
  if (num_.is_zero()) {
    den_ = FqPoly::constant(num_.context(), 1);
    return;
  }
  const FqPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const auto lead = den_.leading();
  if (lead != 1) {
    const auto li = num_.context().inv(lead);
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DenominatorVanishes, "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(std::uint64_t e) const {
  RatFunc result = constant(field(), 1);
  RatFunc base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

namespace {

// t^k * a(1/t) for k = deg a.
FqPoly reversed(const FqPoly& a, int k) {
  std::vector<FqContext::Elem> c(static_cast<std::size_t>(k + 1), 0);
  for (int i = 0; i <= a.degree(); ++i) c[static_cast<std::size_t>(k - i)] = a.coeff(i);
  return FqPoly(a.context(), std::move(c));
}

}  // namespace

RatFunc RatFunc::invert_variable() const {
  if (is_zero()) return *this;
  const int k = std::max(num_.degree(), den_.degree());
  return RatFunc(reversed(num_, k), reversed(den_, k));
}

namespace {

std::string tpoly_string(const FqPoly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (int i = a.degree(); i >= 0; --i) {
    const auto c = a.coeff(i);
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return s;
}

}  // namespace

std::string RatFunc::to_string() const {
  const bool compound = num_.coefficients().size() > 1 &&
                        std::count_if(num_.coefficients().begin(), num_.coefficients().end(), [](auto c) { return c != 0; }) > 1;
  std::string n = compound ? "(" + tpoly_string(num_) + ")" : tpoly_string(num_);
  if (den_.is_one()) return tpoly_string(num_);
  return n + "/(" + tpoly_string(den_) + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "division by zero in F_p(t)");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

// ------------------------------------------------------ RatFuncPolynomial

RatFuncPolynomial::RatFuncPolynomial(const FqContext& fp, std::vector<RatFunc> coeffs)
    : fp_(fp), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool RatFuncPolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == RatFunc::constant(fp_, 1);
}

FqPoly RatFuncPolynomial::common_denominator() const {
  FqPoly d = FqPoly::constant(fp_, 1);
  for (const auto& c : coeffs_) d = d / gcd(d, c.den()) * c.den();
  return d.monic();
}

std::vector<FqPoly> RatFuncPolynomial::numerators() const {
  const FqPoly d = common_denominator();
  std::vector<FqPoly> out;
  for (const auto& c : coeffs_) out.push_back(c.num() * (d / c.den()));
  return out;
}

RatFuncPolynomial RatFuncPolynomial::derivative() const {
  std::vector<RatFunc> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * RatFunc::constant(fp_, i));
  return RatFuncPolynomial(fp_, std::move(out));
}

RatFunc RatFuncPolynomial::eval(const RatFunc& x) const {
  RatFunc acc(fp_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

RatFuncPolynomial RatFuncPolynomial::invert_variable() const {
  std::vector<RatFunc> out;
  for (const auto& c : coeffs_) out.push_back(c.invert_variable());
  return RatFuncPolynomial(fp_, std::move(out));
}

std::string RatFuncPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const RatFunc& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    const std::string xs = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    const std::string cs = c.to_string();
    if (i == 0) s += cs;
    else if (cs == "1") s += xs;
    else if (cs.find_first_of(" /") != std::string::npos && cs.front() != '(') s += "(" + cs + ")*" + xs;
    else s += cs + "*" + xs;
  }
  return s;
}

RatFuncPolynomial rf_add(const RatFuncPolynomial& a, const RatFuncPolynomial& b) {
  const auto& fp = a.field();
  std::vector<RatFunc> out(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1), RatFunc(fp));
  for (int i = 0; i <= a.degree(); ++i) out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i)] + a.coeff(i);
  for (int i = 0; i <= b.degree(); ++i) out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i)] + b.coeff(i);
  return RatFuncPolynomial(fp, std::move(out));
}

RatFuncPolynomial rf_mul(const RatFuncPolynomial& a, const RatFuncPolynomial& b) {
  const auto& fp = a.field();
  if (a.degree() < 0 || b.degree() < 0) return RatFuncPolynomial(fp, {});
  std::vector<RatFunc> out(static_cast<std::size_t>(a.degree() + b.degree() + 1), RatFunc(fp));
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      auto& slot = out[static_cast<std::size_t>(i + j)];
      slot = slot + a.coeff(i) * b.coeff(j);
    }
  }
  return RatFuncPolynomial(fp, std::move(out));
}

std::pair<RatFuncPolynomial, RatFuncPolynomial> rf_divmod(const RatFuncPolynomial& a, const RatFuncPolynomial& b) {
  const auto& fp = a.field();
  if (b.degree() < 0) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  std::vector<RatFunc> rem = a.coefficients();
  if (a.degree() < b.degree()) return {RatFuncPolynomial(fp, {}), a};
  std::vector<RatFunc> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), RatFunc(fp));
  const RatFunc lead_inv = b.coeff(b.degree()).inverse();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const RatFunc c = rem[static_cast<std::size_t>(k + b.degree())] * lead_inv;
    quot[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      auto& slot = rem[static_cast<std::size_t>(k + j)];
      slot = slot - c * b.coeff(j);
    }
  }
  rem.resize(static_cast<std::size_t>(std::max(b.degree(), 0)), RatFunc(fp));
  return {RatFuncPolynomial(fp, std::move(quot)), RatFuncPolynomial(fp, std::move(rem))};
}

RatFuncPolynomial rf_gcd(RatFuncPolynomial a, RatFuncPolynomial b) {
  while (b.degree() >= 0) {
    auto r = rf_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.degree() < 0) return a;
  const RatFunc li = a.coeff(a.degree()).inverse();
  std::vector<RatFunc> c;
  for (const auto& x : a.coefficients()) c.push_back(x * li);
  return RatFuncPolynomial(a.field(), std::move(c));
}

RatFunc rf_resultant(const RatFuncPolynomial& a, const RatFuncPolynomial& b) {
  const auto& fp = a.field();
  if (a.degree() < 0 || b.degree() < 0) return RatFunc(fp);
  const int m = a.degree();
  const int n = b.degree();
  if (n == 0) return b.coeff(0).pow(static_cast<std::uint64_t>(m));
  if (m == 0) return a.coeff(0).pow(static_cast<std::uint64_t>(n));
  const RatFuncPolynomial r = rf_divmod(a, b).second;
  if (r.degree() < 0) return RatFunc(fp);
  RatFunc out = b.coeff(n).pow(static_cast<std::uint64_t>(m - r.degree())) * rf_resultant(b, r);
  if ((m * n) % 2 == 1) out = RatFunc(fp) - out;
  return out;
}

// ----------------------------------------------------------------- places

std::string Place::to_string() const {
  if (infinite) return "inf";
  return tpoly_string(*pi);
}

bool Place::operator==(const Place& o) const {
  if (infinite || o.infinite) return infinite == o.infinite;
  return *pi == *o.pi;
}

std::uint64_t necklace_count(std::uint64_t p, int d) {
  auto mobius = [](int n) {
    int mu = 1;
    for (int q = 2; q * q <= n; ++q) {
      if (n % q) continue;
      n /= q;
      if (n % q == 0) return 0;
      mu = -mu;
    }
    return n > 1 ? -mu : mu;
  };
  long long total = 0;
  for (int c = 1; c <= d; ++c) {
    if (d % c) continue;
    long long pw = 1;
    for (int i = 0; i < d / c; ++i) pw *= static_cast<long long>(p);
    total += mobius(c) * pw;
  }
  return static_cast<std::uint64_t>(total / d);
}

std::vector<Place> fpt_places(std::uint64_t p, int dmax) {
  if (dmax < 1) throw Error(ErrorCode::InvalidArgument, "dmax must be positive");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  const FqContext fp = fq_context(p, 1);
  std::vector<Place> out;
  out.push_back(Place{true, std::nullopt, 1});
  for (int d = 1; d <= dmax; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      std::vector<FqContext::Elem> c(static_cast<std::size_t>(d + 1));
      std::uint64_t x = k;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = x % p;
        x /= p;
      }
      c[static_cast<std::size_t>(d)] = 1;
      FqPoly f(fp, std::move(c));
      if (fq_poly_irreducible(f)) out.push_back(Place{false, std::move(f), d});
    }
  }
  return out;
}

Place invert_place(const Place& place, std::uint64_t p) {
  const FqContext fp = fq_context(p, 1);
  if (place.infinite) return Place{false, FqPoly::x(fp), 1};
  if (*place.pi == FqPoly::x(fp)) return Place{true, std::nullopt, 1};
  return Place{false, reversed(*place.pi, place.degree).monic(), place.degree};
}

namespace {

struct Residue {
  FqContext ctx;
  FqPoly pi;
};

Residue residue_field(const FqPoly& pi) {
  std::vector<std::uint64_t> mod(pi.coefficients().begin(), pi.coefficients().end());
  return Residue{FqContext::with_modulus(pi.context().characteristic(), mod), pi};
}

FqContext::Elem reduce_poly(const FqPoly& a, const Residue& r) {
  const FqPoly red = a % r.pi;
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(r.ctx.degree()), 0);
  for (int i = 0; i <= red.degree(); ++i) digits[static_cast<std::size_t>(i)] = red.coeff(i);
  return r.ctx.encode(digits);
}

int poly_valuation(FqPoly a, const FqPoly& pi) {
  if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  int v = 0;
  while (true) {
    auto [q, rem] = divmod(a, pi);
    if (!rem.is_zero()) return v;
    a = std::move(q);
    ++v;
  }
}

// Valuation at a place; infinity is -(deg num - deg den).
int valuation(const RatFunc& c, const Place& place) {
  if (place.infinite) return c.den().degree() - c.num().degree();
  return poly_valuation(c.num(), *place.pi) - poly_valuation(c.den(), *place.pi);
}

// Residue of c (valuation >= 0 required) at a finite place.
FqContext::Elem residue(const RatFunc& c, const Residue& r) {
  if (c.is_zero()) return 0;
  const auto d = reduce_poly(c.den(), r);
  if (d == 0) throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes at " + tpoly_string(r.pi));
  return r.ctx.mul(reduce_poly(c.num(), r), r.ctx.inv(d));
}

RatFunc defining_function(const ASCaseParams& params, ASComponent which) {
  const FqContext fp = fq_context(params.p, 1);
  return RatFunc::t_power(fp, which == ASComponent::L ? params.e : -params.e);
}

// Residue field and residue of the defining function, or nullopt for a pole.
struct LocalData {
  std::optional<Residue> field;  // empty at infinity (residue field F_p)
  std::optional<FqContext::Elem> value;
  int pole_order = 0;
};

LocalData local_data(const ASCaseParams& params, ASComponent which, const Place& place) {
  const RatFunc g = defining_function(params, which);
  LocalData out;
  const int v = valuation(g, place);
  if (v < 0) {
    out.pole_order = -v;
    return out;
  }
  if (place.infinite) {
    // residue at infinity: value of g(1/s) at s = 0
    const RatFunc h = g.invert_variable();
    const Residue r = residue_field(FqPoly::x(g.field()));
    out.field = r;
    out.value = residue(h, r);
    return out;
  }
  const Residue r = residue_field(*place.pi);
  out.field = r;
  out.value = residue(g, r);
  return out;
}

}  // namespace

LocalInfo as_local_degree(const ASCaseParams& params, ASComponent which, const Place& place) {
  const LocalData d = local_data(params, which, place);
  if (!d.value) {
    if (d.pole_order % static_cast<int>(params.p) == 0) {
      throw Error(ErrorCode::InvalidArgument, "pole order divisible by p");
    }
    return LocalInfo{static_cast<int>(params.p), true};
  }
  const bool split = d.field->ctx.trace(*d.value) == 0;
  return LocalInfo{split ? 1 : static_cast<int>(params.p), false};
}

LocalInfo as_local_degree_bruteforce(const ASCaseParams& params, ASComponent which, const Place& place) {
  const LocalData d = local_data(params, which, place);
  if (!d.value) return LocalInfo{static_cast<int>(params.p), true};
  const FqContext& k = d.field->ctx;
  std::uint64_t roots = 0;
  for (std::uint64_t x = 0; x < k.order(); ++x) {
    if (k.sub(k.sub(k.pow(x, params.p), x), *d.value) == 0) ++roots;
  }
  if (roots != 0 && roots != params.p) throw Error(ErrorCode::InvalidArgument, "Artin-Schreier root count is neither 0 nor p");
  return LocalInfo{roots == params.p ? 1 : static_cast<int>(params.p), false};
}

// ------------------------------------------------------------ construction

namespace {

RatFuncPolynomial rf_pow(const RatFuncPolynomial& a, std::uint64_t e) {
  RatFuncPolynomial out(a.field(), {RatFunc::constant(a.field(), 1)});
  for (std::uint64_t i = 0; i < e; ++i) out = rf_mul(out, a);
  return out;
}

RatFuncPolynomial rf_scale(const RatFuncPolynomial& a, const RatFunc& c) {
  std::vector<RatFunc> out;
  for (const auto& x : a.coefficients()) out.push_back(x * c);
  return RatFuncPolynomial(a.field(), std::move(out));
}

RatFuncPolynomial interpolate_rf(const FqContext& fp, const std::vector<RatFunc>& xs, std::vector<RatFunc> cs) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      cs[i] = (cs[i] - cs[i - 1]) / (xs[i] - xs[i - j]);
    }
  }
  RatFuncPolynomial poly(fp, {cs[n - 1]});
  for (std::size_t i = n - 1; i-- > 0;) {
    poly = rf_mul(poly, RatFuncPolynomial(fp, {RatFunc(fp) - xs[i], RatFunc::constant(fp, 1)}));
    poly = rf_add(poly, RatFuncPolynomial(fp, {cs[i]}));
  }
  return poly;
}

}  // namespace

Case3Polynomial build_case3(std::uint64_t p, long e) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (e < 1 || e % static_cast<long>(p) == 0) {
    throw Error(ErrorCode::NotCoprimeExponent, "e = " + std::to_string(e) + " must be positive and prime to p");
  }
  const FqContext fp = fq_context(p, 1);
  const RatFunc one = RatFunc::constant(fp, 1);
  const RatFunc zero(fp);
  const ASCaseParams params{p, e};
  // A(y) = y^p - y - t^e
  std::vector<RatFunc> a_coeffs(p + 1, zero);
  a_coeffs[0] = zero - RatFunc::t_power(fp, e);
  a_coeffs[1] = zero - one;
  a_coeffs[p] = one;
  const RatFuncPolynomial a(fp, a_coeffs);

  const std::vector<RatFunc> multipliers{RatFunc::t(fp), RatFunc::t_power(fp, 2),
                                         RatFunc::t(fp) + one};
  const std::size_t n = static_cast<std::size_t>(p * p);
  for (const auto& mu : multipliers) {
    std::vector<RatFunc> xs;
    std::vector<RatFunc> ys;
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<FqContext::Elem> digits;
      for (std::size_t x = k; x > 0; x /= p) digits.push_back(x % p);
      const RatFunc node(FqPoly(fp, digits), FqPoly::constant(fp, 1));
      // B(y) = (w - y)^p - mu^(p-1) (w - y) - mu^p t^-e at w = node
      const RatFuncPolynomial w_minus_y(fp, {node, zero - one});
      RatFuncPolynomial b = rf_pow(w_minus_y, p);
      b = rf_add(b, rf_scale(w_minus_y, zero - mu.pow(p - 1)));
      b = rf_add(b, RatFuncPolynomial(fp, {zero - mu.pow(p) * RatFunc::t_power(fp, -e)}));
      xs.push_back(node);
      ys.push_back(rf_resultant(a, b));
    }
    RatFuncPolynomial poly = interpolate_rf(fp, xs, ys);
    if (poly.degree() != static_cast<int>(n) || !poly.is_monic()) continue;
    const RatFuncPolynomial dp = poly.derivative();
    if (dp.degree() < 0 || rf_gcd(poly, dp).degree() != 0) continue;
    return Case3Polynomial{params, mu, poly};
  }
  throw Error(ErrorCode::PrimitiveElementSearchFailed, "no multiplier gives a separable minimal polynomial");
}

// ------------------------------------------------------------ verification

namespace {

// Reduction of a monic poly at a finite place after scaling the root by
// pi^k; returns the factor degrees.
PlaceReport reduce_and_factor(const RatFuncPolynomial& poly, const Place& chart_place, PlaceReport rep) {
  const int n = poly.degree();
  const FqPoly& pi = *chart_place.pi;
  int k = 0;
  for (int i = 1; i <= n; ++i) {
    const RatFunc& c = poly.coeff(n - i);
    if (c.is_zero()) continue;
    const int v = valuation(c, chart_place);
    if (v < 0) k = std::max(k, (-v + i - 1) / i);
  }
  rep.scale_exponent = k;
  const Residue r = residue_field(pi);
  std::vector<FqContext::Elem> coeffs(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    RatFunc c = poly.coeff(n - i);
    for (int j = 0; j < k * i; ++j) c = c * RatFunc(pi, FqPoly::constant(pi.context(), 1));
    coeffs[static_cast<std::size_t>(n - i)] = residue(c, r);
  }
  const FqPoly red(r.ctx, std::move(coeffs));
  for (const auto& f : fq_poly_factor(red)) {
    for (int j = 0; j < f.multiplicity; ++j) rep.factor_degrees.push_back(f.factor.degree());
    if (f.multiplicity > 1) rep.reduction_squarefree = false;
  }
  std::sort(rep.factor_degrees.begin(), rep.factor_degrees.end());
  return rep;
}

}  // namespace

Case3Report verify_case3(const RatFuncPolynomial& poly, const ASCaseParams& params, int dmax) {
  if (!poly.is_monic()) throw Error(ErrorCode::InvalidArgument, "expected a monic polynomial");
  Case3Report rep;
  rep.params = params;
  rep.dmax = dmax;
  const auto places = fpt_places(params.p, dmax);
  const FqContext fp = fq_context(params.p, 1);
  const Place t_place{false, FqPoly::x(fp), 1};

  std::vector<std::uint64_t> census(static_cast<std::size_t>(dmax + 1), 0);
  for (const auto& pl : places) {
    if (!pl.infinite) ++census[static_cast<std::size_t>(pl.degree)];
  }
  for (int d = 1; d <= dmax; ++d) {
    if (census[static_cast<std::size_t>(d)] != necklace_count(params.p, d)) rep.census_ok = false;
  }

  const RatFuncPolynomial at_infinity = poly.invert_variable();
  const int p = static_cast<int>(params.p);
  for (const auto& pl : places) {
    PlaceReport pr;
    pr.place = pl;
    pr.l = as_local_degree(params, ASComponent::L, pl);
    pr.m = as_local_degree(params, ASComponent::M, pl);
    pr.predicted_degree = std::max(pr.l.degree, pr.m.degree);
    pr = pl.infinite ? reduce_and_factor(at_infinity, t_place, pr) : reduce_and_factor(poly, pl, pr);

    const bool is_t = !pl.infinite && *pl.pi == FqPoly::x(fp);
    const bool ram_ok = pr.l.ramified == pl.infinite && pr.m.ramified == is_t;
    if (!ram_ok) rep.ramification_ok = false;

    bool deg_ok = std::all_of(pr.factor_degrees.begin(), pr.factor_degrees.end(), [&](int d) { return d <= p; });
    const bool unramified = !pr.l.ramified && !pr.m.ramified;
    if (unramified && pr.reduction_squarefree) {
      deg_ok = deg_ok && std::all_of(pr.factor_degrees.begin(), pr.factor_degrees.end(),
                                     [&](int d) { return d == pr.predicted_degree; });
    }
    if (!deg_ok) rep.degrees_ok = false;

    // t -> 1/t sends L to M and this place to its image.
    const Place image = invert_place(pl, params.p);
    const LocalInfo l_img = as_local_degree(params, ASComponent::M, image);
    const LocalInfo m_img = as_local_degree(params, ASComponent::L, image);
    const bool sym_ok = l_img.degree == pr.l.degree && l_img.ramified == pr.l.ramified && m_img.degree == pr.m.degree &&
                        m_img.ramified == pr.m.ramified;
    if (!sym_ok) rep.symmetry_ok = false;
    pr.ok = ram_ok && deg_ok && sym_ok;
    rep.places.push_back(std::move(pr));
  }
  const RatFuncPolynomial dp = poly.derivative();
  rep.separable = dp.degree() >= 0 && rf_gcd(poly, dp).degree() == 0;
  rep.pass = rep.census_ok && rep.degrees_ok && rep.ramification_ok && rep.symmetry_ok && rep.separable &&
             poly.degree() == p * p;
  return rep;
}

}  // namespace locred
