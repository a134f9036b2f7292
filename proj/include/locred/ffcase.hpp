#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locred/finitefield.hpp"

namespace locred {

/// Element of F_p(t): num/den with den monic and gcd(num, den) = 1.
/// Polynomials in t are FqPoly over the prime field.
class RatFunc {
 public:
  explicit RatFunc(const FqContext& fp);
  RatFunc(FqPoly num, FqPoly den);
  static RatFunc constant(const FqContext& fp, std::uint64_t c);
  static RatFunc t(const FqContext& fp);
  /// t^k for any integer k.
  static RatFunc t_power(const FqContext& fp, long k);

  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }
  const FqContext& field() const { return num_.context(); }
  bool is_zero() const { return num_.is_zero(); }
  RatFunc inverse() const;
  RatFunc pow(std::uint64_t e) const;
  /// c(1/t), the coefficient seen from the chart at infinity.
  RatFunc invert_variable() const;
  std::string to_string() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void normalise();
  FqPoly num_;
  FqPoly den_;
};

/// Polynomial in x over F_p(t), constant term first.
class RatFuncPolynomial {
 public:
  RatFuncPolynomial(const FqContext& fp, std::vector<RatFunc> coeffs);

  const FqContext& field() const { return fp_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RatFunc>& coefficients() const { return coeffs_; }
  const RatFunc& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  bool is_monic() const;

  /// Common-denominator form: monic denominator and the numerators of
  /// all coefficients over it.
  FqPoly common_denominator() const;
  std::vector<FqPoly> numerators() const;

  RatFuncPolynomial derivative() const;
  RatFunc eval(const RatFunc& x) const;
  RatFuncPolynomial invert_variable() const;  // t -> 1/t in every coefficient
  std::string to_string() const;

  friend bool operator==(const RatFuncPolynomial& a, const RatFuncPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  FqContext fp_;
  std::vector<RatFunc> coeffs_;
};

RatFuncPolynomial rf_add(const RatFuncPolynomial& a, const RatFuncPolynomial& b);
RatFuncPolynomial rf_mul(const RatFuncPolynomial& a, const RatFuncPolynomial& b);
std::pair<RatFuncPolynomial, RatFuncPolynomial> rf_divmod(const RatFuncPolynomial& a, const RatFuncPolynomial& b);
/// Monic gcd over F_p(t).
RatFuncPolynomial rf_gcd(RatFuncPolynomial a, RatFuncPolynomial b);
/// Resultant over the field F_p(t) by the Euclidean remainder sequence.
RatFunc rf_resultant(const RatFuncPolynomial& a, const RatFuncPolynomial& b);

struct Place {
  bool infinite = false;
  std::optional<FqPoly> pi;  // monic irreducible for finite places
  int degree = 1;

  std::string to_string() const;
  bool operator==(const Place& o) const;
};

/// Infinity, then the monic irreducibles of degree 1..dmax; within a degree
/// ordered by the integer sum c_i p^i of their lower coefficients.
std::vector<Place> fpt_places(std::uint64_t p, int dmax);
/// Number of monic irreducibles of degree d over F_p (necklace formula).
std::uint64_t necklace_count(std::uint64_t p, int d);

struct ASCaseParams {
  std::uint64_t p = 2;
  long e = 1;  // g = t^e defines L, h = t^-e defines M
};

enum class ASComponent { L, M };

struct LocalInfo {
  int degree = 1;  // 1 or p
  bool ramified = false;
};

/// Local degree of x^p - x - g (L) or x^p - x - h (M) at a place: a pole
/// means ramified of degree p; otherwise degree 1 iff the absolute trace of
/// the residue of the function vanishes.
LocalInfo as_local_degree(const ASCaseParams& params, ASComponent which, const Place& place);
/// Same verdict by counting roots of x^p - x - c in the residue field.
LocalInfo as_local_degree_bruteforce(const ASCaseParams& params, ASComponent which, const Place& place);

/// The image of a place of F_p(t) under t -> 1/t.
Place invert_place(const Place& place, std::uint64_t p);

struct Case3Polynomial {
  ASCaseParams params;
  RatFunc multiplier;  // w = y + multiplier * z
  RatFuncPolynomial poly;
};

/// Minimal polynomial over F_p(t) of w = y + mu*z, y^p - y = t^e,
/// z^p - z = t^-e, by eliminating y: Res_y(y^p - y - t^e, B(w, y)) with
/// B(w, y) = (w - y)^p - mu^(p-1)(w - y) - mu^p t^-e, evaluated at p^2 + 1
/// nodes of F_p[t] and interpolated. mu runs through t, t^2, t + 1 until
/// the result is separable.
Case3Polynomial build_case3(std::uint64_t p, long e);

struct PlaceReport {
  Place place;
  LocalInfo l;
  LocalInfo m;
  int predicted_degree = 1;  // local degree of the compositum
  int scale_exponent = 0;    // k with pi^k * w integral at the place
  std::vector<int> factor_degrees;
  bool reduction_squarefree = true;
  bool ok = true;
};

struct Case3Report {
  ASCaseParams params;
  int dmax = 0;
  std::vector<PlaceReport> places;
  bool census_ok = true;        // place counts follow the necklace formula
  bool degrees_ok = true;       // every factor degree <= p and matches the prediction
  bool ramification_ok = true;  // L ramified exactly at infinity, M exactly at (t)
  bool symmetry_ok = true;      // t -> 1/t swaps L and M place by place
  bool separable = true;        // gcd(P, P') = 1 over F_p(t)
  bool pass = false;
};

/// Reduces the polynomial at every place of degree <= dmax (after scaling
/// the root by a power of the uniformizer when coefficients have poles) and
/// factors it over the residue field.
Case3Report verify_case3(const RatFuncPolynomial& poly, const ASCaseParams& params, int dmax);

}  // namespace locred
