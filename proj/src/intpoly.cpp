#include "locred/intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "locred/error.hpp"

namespace locred {

namespace {
const Integer kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, int k) {
  std::vector<Integer> v(static_cast<std::size_t>(k) + 1);
  v[static_cast<std::size_t>(k)] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<Integer> v;
  std::string item;
  bool any = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      v.push_back(parse_integer(item));
      item.clear();
      any = true;
    } else {
      item.push_back(text[i]);
    }
  }
  if (!any) throw Error(ErrorCode::ParseError, "empty polynomial");
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out.push_back(',');
    out += to_decimal(coeffs_[i]);
  }
  return out;
}

std::string IntPolynomial::pretty(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

const Integer& IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return coeffs_.back();
}

Integer IntPolynomial::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (coeffs_.empty()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  return exact_div(*this, g);
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

// ---------------------------------------------------------------------------

RatPolynomial::RatPolynomial(IntPolynomial numerator, Integer denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Integer g = numerator.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), denominator.get_mpz_t());
  if (numerator.is_zero()) g = denominator;
  numerator_ = exact_div(numerator, g);
  denominator_ = denominator / g;
}

RatPolynomial RatPolynomial::from_coefficients(const std::vector<Rational>& coeffs) {
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> num(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  return {IntPolynomial(std::move(num)), den};
}

Rational RatPolynomial::coeff(int i) const {
  Rational r(numerator_.coeff(i), denominator_);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------

std::optional<IntPolynomial> divide_if_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem = a.coefficients();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Integer& lb = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Integer& top = rem[static_cast<std::size_t>(k + b.degree())];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()) == 0) return std::nullopt;
    Integer q = top / lb;
    for (int j = 0; j <= b.degree(); ++j) {
      mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), q.get_mpz_t(),
                 b.coeff(j).get_mpz_t());
    }
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  auto q = divide_if_exact(a, b);
  if (!q) throw Error(ErrorCode::ExactDivisionFailed, "(" + a.to_string() + ") / (" + b.to_string() + ")");
  return *std::move(q);
}

IntPolynomial exact_div(const IntPolynomial& a, const Integer& c) {
  if (c == 0) throw Error(ErrorCode::ExactDivisionFailed, "division by zero");
  std::vector<Integer> v = a.coefficients();
  for (auto& x : v) {
    if (mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()) == 0) {
      throw Error(ErrorCode::ExactDivisionFailed, a.to_string() + " by " + to_decimal(c));
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return IntPolynomial(std::move(v));
}

std::pair<IntPolynomial, IntPolynomial> pseudo_divmod(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "pseudo-division by zero");
  if (a.degree() < b.degree()) return {IntPolynomial{}, a};
  const int n = b.degree();
  int e = a.degree() - n + 1;
  const Integer& lb = b.leading();
  IntPolynomial q;
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= n) {
    IntPolynomial t = IntPolynomial::monomial(r.leading(), r.degree() - n);
    q = q * lb + t;
    r = r * lb - t * b;
    --e;
  }
  Integer scale = ipow(lb, static_cast<unsigned long>(e));
  return {q * scale, r * scale};
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  return pseudo_divmod(a, b).second;
}

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive_part();
  }
  return a.primitive_part();
}

bool is_squarefree(const IntPolynomial& f) {
  if (f.degree() <= 0) return true;
  return poly_gcd(f, f.derivative()).degree() == 0;
}

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant with zero polynomial");
  IntPolynomial a = f;
  IntPolynomial b = g;
  const Integer ca = a.content();
  const Integer cb = b.content();
  const Integer t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));
  a = exact_div(a, ca);
  b = exact_div(b, cb);
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
  }
  if (b.degree() == 0) return s * t * ipow(b.leading(), static_cast<unsigned long>(a.degree()));

  Integer gg = 1;
  Integer h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = exact_div(r, gg * ipow(h, static_cast<unsigned long>(delta)));
    gg = a.leading();
    if (delta >= 1) {
      h = ipow(gg, static_cast<unsigned long>(delta)) / ipow(h, static_cast<unsigned long>(delta - 1));
    }
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  h = ipow(b.leading(), static_cast<unsigned long>(da)) / ipow(h, static_cast<unsigned long>(da - 1));
  return s * t * h;
}

Integer discriminant(const IntPolynomial& f) {
  if (f.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "discriminant of a constant");
  const long d = f.degree();
  Integer r = resultant(f, f.derivative());
  Integer q = r / f.leading();
  if ((d * (d - 1) / 2) % 2 == 1) q = -q;
  return q;
}

IntPolynomial poly_shift(const IntPolynomial& f, const Integer& c) {
  // Taylor shift by repeated synthetic division.
  std::vector<Integer> a = f.coefficients();
  const std::size_t n = a.size();
  if (c == 0 || n <= 1) return f;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) a[j] += c * a[j + 1];
  }
  return IntPolynomial(std::move(a));
}

IntPolynomial poly_negate_variable(const IntPolynomial& f) {
  std::vector<Integer> a = f.coefficients();
  for (std::size_t i = 1; i < a.size(); i += 2) a[i] = -a[i];
  return IntPolynomial(std::move(a));
}

IntPolynomial poly_scale_root(const IntPolynomial& f, const Integer& c) {
  std::vector<Integer> a = f.coefficients();
  const int d = f.degree();
  for (int i = 0; i <= d; ++i) a[static_cast<std::size_t>(i)] *= ipow(c, static_cast<unsigned long>(d - i));
  return IntPolynomial(std::move(a));
}

IntPolynomial poly_exact_sqrt(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  if (p.degree() % 2 != 0 || !is_perfect_square(p.leading())) {
    throw Error(ErrorCode::NotAPerfectSquare, p.to_string());
  }
  const int k = p.degree() / 2;
  std::vector<Integer> g(static_cast<std::size_t>(k) + 1);
  mpz_sqrt(g[static_cast<std::size_t>(k)].get_mpz_t(), p.leading().get_mpz_t());
  const Integer two_lead = 2 * g[static_cast<std::size_t>(k)];
  for (int i = k - 1; i >= 0; --i) {
    // coefficient of x^(k+i) in g^2 = 2*g_k*g_i + sum_{j=i+1}^{k-1} g_j g_{k+i-j}
    Integer acc = p.coeff(k + i);
    for (int j = i + 1; j <= k - 1; ++j) acc -= g[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(k + i - j)];
    if (mpz_divisible_p(acc.get_mpz_t(), two_lead.get_mpz_t()) == 0) {
      throw Error(ErrorCode::NotAPerfectSquare, p.to_string());
    }
    g[static_cast<std::size_t>(i)] = acc / two_lead;
  }
  IntPolynomial root(std::move(g));
  if (root * root != p) throw Error(ErrorCode::NotAPerfectSquare, p.to_string());
  return root;
}

RatPolynomial interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw Error(ErrorCode::InvalidArgument, "interpolation sizes");
  const std::size_t n = xs.size();
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational denom(xs[i] - xs[i - level]);
      dd[i] = (dd[i] - dd[i - 1]) / denom;
    }
  }
  std::vector<Rational> coeffs(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    // coeffs = coeffs * (x - xs[i]) + dd[i]
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t j = 0; j + 1 < n; ++j) next[j + 1] += coeffs[j];
    for (std::size_t j = 0; j < n; ++j) next[j] -= coeffs[j] * Rational(xs[i]);
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  return RatPolynomial::from_coefficients(coeffs);
}

IntPolynomial resultant_in_x(const IntPolynomial& f,
                             const std::function<IntPolynomial(const Integer&)>& g_at, int degree) {
  std::vector<Integer> xs;
  std::vector<Integer> ys;
  for (int i = 0; i <= degree; ++i) {
    Integer x0 = i;
    xs.push_back(x0);
    ys.push_back(resultant(f, g_at(x0)));
  }
  RatPolynomial r = interpolate(xs, ys);
  if (!r.is_integral()) throw Error(ErrorCode::InvalidArgument, "eliminant not integral");
  return r.numerator();
}

IntPolynomial pair_sum_resolvent(const IntPolynomial& f) {
  if (f.degree() != 4 || !f.is_monic()) throw Error(ErrorCode::InvalidArgument, "expected a monic quartic");
  if (!is_squarefree(f)) throw Error(ErrorCode::NotSquarefree, f.to_string());
  const IntPolynomial f_neg = poly_negate_variable(f);
  // prod_{i,j} (x - r_i - r_j)
  IntPolynomial full = resultant_in_x(
      f, [&](const Integer& x0) { return poly_shift(f_neg, -x0); }, 16);
  // prod_i (x - 2 r_i) = 2^4 f(x/2)
  IntPolynomial diagonal = poly_scale_root(f, 2);
  IntPolynomial off_diagonal = exact_div(full, diagonal);
  IntPolynomial g = poly_exact_sqrt(off_diagonal);
  if (!is_squarefree(g)) {
    throw Error(ErrorCode::DegenerateResolvent, "pair sums of " + f.to_string() + " collide");
  }
  return g;
}

IntPolynomial tschirnhaus_square(const IntPolynomial& f, const Integer& c) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "tschirnhaus of zero");
  IntPolynomial r = resultant_in_x(
      f,
      [&](const Integer& x0) {
        return IntPolynomial(std::vector<Integer>{x0, -c, -1});  // x0 - c*y - y^2
      },
      f.degree());
  // Res(f, x - y^2 - c y) = lc(f)^2 * prod (x - a^2 - c a); normalise sign.
  if (r.leading() < 0) r = -r;
  return r;
}

}  // namespace locred
