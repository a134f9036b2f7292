#include "locred/finitefield.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "locred/error.hpp"

namespace locred {

namespace {

constexpr int kMaxDegree = 63;

using Digits = std::array<std::uint64_t, 2 * kMaxDegree + 2>;

}  // namespace

// ---------------------------------------------------------------------------
// FqContext

FqContext FqContext::make(std::uint64_t p, int d) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  if (d == 1) return with_modulus(p, {0, 1});
  // Candidates ordered lexicographically with c0 varying slowest.
  const FqContext prime_field = with_modulus(p, {0, 1});
  unsigned __int128 count = 1;
  for (int i = 0; i < d; ++i) {
    count *= p;
    if (count > (static_cast<unsigned __int128>(1) << 62)) throw Error(ErrorCode::TooLarge, "field too large");
  }
  std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
  c[static_cast<std::size_t>(d)] = 1;
  for (unsigned __int128 k = 0; k < count; ++k) {
    unsigned __int128 rest = k;
    for (int i = d - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(rest % p);
      rest /= p;
    }
    if (c[0] == 0) continue;  // divisible by x
    FqPoly candidate(prime_field, std::vector<Elem>(c.begin(), c.end()));
    if (fq_poly_irreducible(candidate)) return with_modulus(p, c);
  }
  throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

FqContext FqContext::with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree >= 1");
  }
  const int d = static_cast<int>(modulus.size()) - 1;
  if (d > kMaxDegree) throw Error(ErrorCode::TooLarge, "extension degree too large");
  auto data = std::make_shared<Data>();
  data->p = p;
  data->d = d;
  unsigned __int128 q = 1;
  for (int i = 0; i < d; ++i) {
    q *= p;
    if (q > (static_cast<unsigned __int128>(1) << 62)) throw Error(ErrorCode::TooLarge, "field too large");
  }
  data->q = static_cast<std::uint64_t>(q);
  for (auto& c : modulus) c %= p;
  data->modulus = std::move(modulus);
  FqContext ctx(std::move(data));
  if (d > 1) {
    FqContext prime_field = with_modulus(p, {0, 1});
    FqPoly m(prime_field, std::vector<Elem>(ctx.modulus().begin(), ctx.modulus().end()));
    if (!fq_poly_irreducible(m)) throw Error(ErrorCode::InvalidArgument, "modulus is reducible");
  }
  return ctx;
}

FqContext fq_context(std::uint64_t p, int d) { return FqContext::make(p, d); }

std::vector<std::uint64_t> FqContext::digits(Elem a) const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(data_->d));
  for (auto& x : out) {
    x = a % data_->p;
    a /= data_->p;
  }
  return out;
}

FqContext::Elem FqContext::encode(const std::vector<std::uint64_t>& digits) const {
  Elem a = 0;
  for (std::size_t i = digits.size(); i-- > 0;) a = a * data_->p + digits[i] % data_->p;
  return a;
}

FqContext::Elem FqContext::add(Elem a, Elem b) const {
  const std::uint64_t p = data_->p;
  if (data_->d == 1) {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem out = 0;
  Elem scale = 1;
  for (int i = 0; i < data_->d; ++i) {
    std::uint64_t s = a % p + b % p;
    if (s >= p) s -= p;
    out += s * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return out;
}

FqContext::Elem FqContext::neg(Elem a) const {
  const std::uint64_t p = data_->p;
  if (data_->d == 1) return a == 0 ? 0 : p - a;
  Elem out = 0;
  Elem scale = 1;
  for (int i = 0; i < data_->d; ++i) {
    std::uint64_t c = a % p;
    out += (c == 0 ? 0 : p - c) * scale;
    scale *= p;
    a /= p;
  }
  return out;
}

FqContext::Elem FqContext::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FqContext::Elem FqContext::mul(Elem a, Elem b) const {
  const std::uint64_t p = data_->p;
  if (data_->d == 1) return mulmod(a, b, p);
  const int d = data_->d;
  Digits x{};
  Digits y{};
  Digits prod{};
  for (int i = 0; i < d; ++i) {
    x[static_cast<std::size_t>(i)] = a % p;
    a /= p;
    y[static_cast<std::size_t>(i)] = b % p;
    b /= p;
  }
  for (int i = 0; i < d; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < d; ++j) {
      auto& slot = prod[static_cast<std::size_t>(i + j)];
      slot = (slot + mulmod(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  const auto& m = data_->modulus;
  for (int k = 2 * d - 2; k >= d; --k) {
    const std::uint64_t c = prod[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    prod[static_cast<std::size_t>(k)] = 0;
    for (int j = 0; j < d; ++j) {
      auto& slot = prod[static_cast<std::size_t>(k - d + j)];
      slot = (slot + p - mulmod(c, m[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  Elem out = 0;
  for (int i = d - 1; i >= 0; --i) out = out * p + prod[static_cast<std::size_t>(i)];
  return out;
}

FqContext::Elem FqContext::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

FqContext::Elem FqContext::pow(Elem a, const Integer& e) const {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  Elem result = 1;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = mul(result, a);
  }
  return result;
}

FqContext::Elem FqContext::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return pow(a, data_->q - 2);
}

FqContext::Elem FqContext::from_integer(const Integer& a) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), data_->p);
  return r.get_ui();
}

std::uint64_t FqContext::trace(Elem a) const {
  Elem acc = 0;
  Elem power = a;
  for (int i = 0; i < data_->d; ++i) {
    acc = add(acc, power);
    power = pow(power, data_->p);
  }
  return acc;  // lies in the prime subfield, i.e. already < p
}

FqContext::Elem FqContext::pth_root(Elem a) const { return pow(a, data_->q / data_->p); }

FqContext::Elem FqContext::smallest_generator() const {
  const std::uint64_t n = data_->q - 1;
  if (n == 1) return 1;
  const auto divisors = prime_divisors(n);
  for (Elem g = 2; g < data_->q; ++g) {
    bool ok = std::all_of(divisors.begin(), divisors.end(), [&](std::uint64_t r) { return pow(g, n / r) != 1; });
    if (ok) return g;
  }
  throw Error(ErrorCode::InvalidArgument, "no generator");
}

std::string FqContext::describe() const {
  return "@" + std::to_string(data_->p) + "^" + std::to_string(data_->d);
}

// ---------------------------------------------------------------------------
// FqPoly

FqPoly::FqPoly(FqContext ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (c >= ctx_.order()) throw Error(ErrorCode::InvalidArgument, "coefficient outside field");
  }
  trim();
}

FqPoly FqPoly::from_int_poly(const FqContext& ctx, const IntPolynomial& f) {
  std::vector<Elem> v;
  v.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) v.push_back(ctx.from_integer(c));
  return {ctx, std::move(v)};
}

FqPoly FqPoly::monomial(const FqContext& ctx, Elem c, int k) {
  std::vector<Elem> v(static_cast<std::size_t>(k) + 1, 0);
  v[static_cast<std::size_t>(k)] = c;
  return {ctx, std::move(v)};
}

FqPoly FqPoly::parse(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) throw Error(ErrorCode::ParseError, "missing @p^d suffix");
  const auto suffix = text.substr(at + 1);
  const auto caret = suffix.find('^');
  std::uint64_t p = 0;
  int d = 1;
  if (caret == std::string_view::npos) {
    p = to_u64(parse_integer(std::string(suffix)));
  } else {
    p = to_u64(parse_integer(std::string(suffix.substr(0, caret))));
    d = static_cast<int>(to_u64(parse_integer(std::string(suffix.substr(caret + 1)))));
  }
  FqContext ctx = fq_context(p, d);
  IntPolynomial coeffs = IntPolynomial::parse(text.substr(0, at));
  std::vector<Elem> v;
  for (const auto& c : coeffs.coefficients()) {
    if (c < 0 || to_u64(c) >= ctx.order()) throw Error(ErrorCode::ParseError, "coefficient outside field");
    v.push_back(to_u64(c));
  }
  return {ctx, std::move(v)};
}

std::string FqPoly::to_string() const {
  std::string out;
  if (coeffs_.empty()) out = "0";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(coeffs_[i]);
  }
  return out + ctx_.describe();
}

FqPoly::Elem FqPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

FqPoly::Elem FqPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return coeffs_.back();
}

FqPoly FqPoly::scaled(Elem c) const {
  FqPoly r(ctx_);
  r.coeffs_.reserve(coeffs_.size());
  for (auto a : coeffs_) r.coeffs_.push_back(ctx_.mul(a, c));
  r.trim();
  return r;
}

FqPoly FqPoly::monic() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "monic of zero");
  return scaled(ctx_.inv(leading()));
}

FqPoly FqPoly::derivative() const {
  FqPoly r(ctx_);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    r.coeffs_.push_back(ctx_.mul(coeffs_[i], ctx_.from_u64(i)));
  }
  r.trim();
  return r;
}

FqPoly::Elem FqPoly::eval(Elem x) const {
  Elem acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = ctx_.add(ctx_.mul(acc, x), *it);
  return acc;
}

FqPoly& FqPoly::operator+=(const FqPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = ctx_.add(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = ctx_.sub(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  FqPoly r(a.ctx_);
  if (a.is_zero() || b.is_zero()) return r;
  const auto& ctx = a.ctx_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  if (ctx.degree() == 1) {
    // Accumulate in 128 bits before reducing.
    const std::uint64_t p = ctx.characteristic();
    std::vector<unsigned __int128> acc(r.coeffs_.size(), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        acc[i + j] += static_cast<unsigned __int128>(a.coeffs_[i]) * b.coeffs_[j];
        if (acc[i + j] >> 120U) acc[i + j] %= p;
      }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) r.coeffs_[k] = static_cast<std::uint64_t>(acc[k] % p);
  } else {
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        r.coeffs_[i + j] = ctx.add(r.coeffs_[i + j], ctx.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
  }
  r.trim();
  return r;
}

void FqPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  const FqContext& ctx = a.context();
  if (a.degree() < b.degree()) return {FqPoly(ctx), a};
  std::vector<FqPoly::Elem> rem = a.coefficients();
  std::vector<FqPoly::Elem> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const auto inv_lead = ctx.inv(b.leading());
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const auto top = rem[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    const auto q = ctx.mul(top, inv_lead);
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k + j)];
      slot = ctx.sub(slot, ctx.mul(q, b.coeff(j)));
    }
  }
  return {FqPoly(ctx, std::move(quot)), FqPoly(ctx, std::move(rem))};
}

FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }
FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }

FqPoly gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

std::tuple<FqPoly, FqPoly, FqPoly> ext_gcd(const FqPoly& a, const FqPoly& b) {
  const FqContext& ctx = a.context();
  FqPoly r0 = a, r1 = b;
  FqPoly s0 = FqPoly::constant(ctx, 1), s1(ctx);
  FqPoly t0(ctx), t1 = FqPoly::constant(ctx, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FqPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    FqPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const auto u = ctx.inv(r0.leading());
  return {r0.scaled(u), s0.scaled(u), t0.scaled(u)};
}

FqPoly powmod(FqPoly base, const Integer& e, const FqPoly& mod) {
  const FqContext& ctx = mod.context();
  FqPoly result = FqPoly::constant(ctx, 1) % mod;
  base = base % mod;
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = (result * base) % mod;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Factorization

namespace {

FqPoly pth_root_poly(const FqPoly& f) {
  const FqContext& ctx = f.context();
  const auto p = static_cast<int>(ctx.characteristic());
  std::vector<FqPoly::Elem> v;
  for (int i = 0; i <= f.degree(); i += p) v.push_back(ctx.pth_root(f.coeff(i)));
  return {ctx, std::move(v)};
}

void squarefree_rec(const FqPoly& f, int scale, std::vector<FqFactor>& out) {
  // f monic
  const FqContext& ctx = f.context();
  FqPoly c = gcd(f, f.derivative());
  FqPoly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    FqPoly y = gcd(w, c);
    FqPoly fac = w / y;
    if (!fac.is_one()) out.push_back({fac, i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    squarefree_rec(pth_root_poly(c), scale * static_cast<int>(ctx.characteristic()), out);
  }
}

FqPoly random_poly(const FqContext& ctx, int degree_below, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, ctx.order() - 1);
  std::vector<FqPoly::Elem> v(static_cast<std::size_t>(degree_below));
  for (auto& c : v) c = dist(rng);
  return {ctx, std::move(v)};
}

// Splits a monic squarefree product of irreducibles of degree k.
void equal_degree_split(const FqPoly& f, int k, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  if (f.degree() == k) {
    out.push_back(f);
    return;
  }
  const FqContext& ctx = f.context();
  const std::uint64_t p = ctx.characteristic();
  while (true) {
    FqPoly a = random_poly(ctx, f.degree(), rng);
    if (a.degree() < 1) continue;
    FqPoly t(ctx);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(dk-1)) mod f.
      FqPoly power = a % f;
      t = power;
      const int steps = ctx.degree() * k;
      for (int i = 1; i < steps; ++i) {
        power = (power * power) % f;
        t += power;
      }
    } else {
      Integer e = (ipow(Integer(static_cast<unsigned long>(ctx.order())), static_cast<unsigned long>(k)) - 1) / 2;
      t = powmod(a, e, f) - FqPoly::constant(ctx, 1);
    }
    FqPoly g = gcd(f, t);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, k, rng, out);
      equal_degree_split(f / g, k, rng, out);
      return;
    }
  }
}

bool factor_less(const FqFactor& a, const FqFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& x = a.factor.coefficients();
  const auto& y = b.factor.coefficients();
  if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  return a.multiplicity < b.multiplicity;
}

}  // namespace

std::vector<FqFactor> squarefree_decomposition(const FqPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<FqFactor> out;
  if (f.degree() == 0) return out;
  squarefree_rec(f.monic(), 1, out);
  return out;
}

std::vector<std::pair<FqPoly, int>> distinct_degree_factorization(const FqPoly& f) {
  std::vector<std::pair<FqPoly, int>> out;
  const FqContext& ctx = f.context();
  const Integer q = static_cast<unsigned long>(ctx.order());
  FqPoly rest = f.monic();
  FqPoly h = FqPoly::x(ctx) % rest;
  int k = 0;
  while (rest.degree() >= 2 * (k + 1)) {
    ++k;
    h = powmod(h, q, rest);
    FqPoly g = gcd(rest, h - FqPoly::x(ctx));
    if (!g.is_one()) {
      out.emplace_back(g, k);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

std::vector<FqFactor> fq_poly_factor(const FqPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor of zero");
  std::mt19937_64 rng(seed);
  std::vector<FqFactor> out;
  for (const auto& part : squarefree_decomposition(f)) {
    for (const auto& [block, k] : distinct_degree_factorization(part.factor)) {
      std::vector<FqPoly> pieces;
      equal_degree_split(block, k, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  // Merge equal factors (cannot happen for a correct squarefree split, but
  // keeps the multiset canonical).
  std::vector<FqFactor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().factor == fac.factor) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  return merged;
}

bool fq_poly_irreducible(const FqPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "irreducibility of zero");
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FqContext& ctx = f.context();
  const FqPoly g = f.monic();
  const Integer q = static_cast<unsigned long>(ctx.order());
  const FqPoly x = FqPoly::x(ctx);
  // powers[i] = x^(q^i) mod g
  std::vector<FqPoly> powers{x % g};
  for (int i = 1; i <= n; ++i) powers.push_back(powmod(powers.back(), q, g));
  if (!((powers[static_cast<std::size_t>(n)] - x) % g).is_zero()) return false;
  for (auto r : prime_divisors(static_cast<std::uint64_t>(n))) {
    const auto& h = powers[static_cast<std::size_t>(n / static_cast<int>(r))];
    if (!gcd(g, h - x).is_one()) return false;
  }
  return true;
}

std::vector<int> factor_pattern(const FqPoly& f, std::uint64_t seed) {
  std::vector<int> pattern;
  for (const auto& fac : fq_poly_factor(f, seed)) {
    for (int i = 0; i < fac.multiplicity; ++i) pattern.push_back(fac.factor.degree());
  }
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

}  // namespace locred
