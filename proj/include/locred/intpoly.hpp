#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locred/arith.hpp"

namespace locred {

/// Dense univariate polynomial over the integers, constant term first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and reports degree kZeroDegree, which stands in for minus
/// infinity (it compares below every real degree).
class IntPolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, int k);
  static IntPolynomial x() { return monomial(1, 1); }

  /// Repo-wide text format: "1,0,0,0,1" is x^4 + 1.
  static IntPolynomial parse(std::string_view text);
  std::string to_string() const;
  std::string pretty(char var = 'x') const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const Integer& coeff(int i) const;
  const Integer& leading() const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  Integer eval(const Integer& x) const;
  IntPolynomial derivative() const;
  /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  Integer content() const;
  /// f / content(f), sign-normalised to a positive leading coefficient.
  IntPolynomial primitive_part() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Integer& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial a) { return a *= c; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Polynomial with rational coefficients stored over a common denominator.
/// Invariant: denominator >= 1 and gcd(content(numerator), denominator) = 1.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  RatPolynomial(IntPolynomial numerator, Integer denominator);
  static RatPolynomial from_coefficients(const std::vector<Rational>& coeffs);

  const IntPolynomial& numerator() const { return numerator_; }
  const Integer& denominator() const { return denominator_; }
  bool is_integral() const { return denominator_ == 1; }
  Rational coeff(int i) const;
  int degree() const { return numerator_.degree(); }

 private:
  IntPolynomial numerator_;
  Integer denominator_ = 1;
};

IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial exact_div(const IntPolynomial& a, const Integer& c);
std::optional<IntPolynomial> divide_if_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q * b + r.
std::pair<IntPolynomial, IntPolynomial> pseudo_divmod(const IntPolynomial& a,
                                                      const IntPolynomial& b);
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd over Z[x], positive leading coefficient.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);
bool is_squarefree(const IntPolynomial& f);

/// Res(f, g) by the fraction-free subresultant remainder sequence.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);
Integer discriminant(const IntPolynomial& f);

/// f(x + c).
IntPolynomial poly_shift(const IntPolynomial& f, const Integer& c);
/// f(-x).
IntPolynomial poly_negate_variable(const IntPolynomial& f);
/// c^deg(f) * f(x / c): the minimal polynomial of c*alpha for f(alpha) = 0.
IntPolynomial poly_scale_root(const IntPolynomial& f, const Integer& c);

IntPolynomial poly_exact_sqrt(const IntPolynomial& p);

/// Interpolating polynomial through (xs[i], ys[i]); xs distinct.
RatPolynomial interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys);

/// Res_y(f(y), g_x(y)) as a polynomial in x, where g_at(x0) returns the
/// integer polynomial g_{x0}(y). `degree` bounds deg_x of the result; the
/// value is recovered by evaluation at 0..degree and exact interpolation.
IntPolynomial resultant_in_x(const IntPolynomial& f,
                             const std::function<IntPolynomial(const Integer&)>& g_at,
                             int degree);

/// Degree-6 polynomial whose roots are the pairwise sums of the roots of a
/// monic squarefree quartic. Throws DegenerateResolvent when sums collide.
IntPolynomial pair_sum_resolvent(const IntPolynomial& f);

/// Characteristic polynomial of alpha^2 + c*alpha over Q, alpha a root of f.
IntPolynomial tschirnhaus_square(const IntPolynomial& f, const Integer& c);

}  // namespace locred
