#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "locred/arith.hpp"
#include "locred/intpoly.hpp"

namespace locred {

/// The field F_q, q = p^d, on the polynomial basis of a monic irreducible
/// modulus of degree d over F_p. Elements are encoded as integers
/// sum c_i p^i in [0, q), c_i the basis coordinates; 0 and 1 are the usual
/// zero and one. Copies share one immutable description.
class FqContext {
 public:
  using Elem = std::uint64_t;

  /// Lexicographically smallest monic irreducible modulus of degree d,
  /// coefficients compared constant term first.
  static FqContext make(std::uint64_t p, int d);
  /// Explicit modulus (monic, low-to-high coefficients in [0, p)); checked.
  static FqContext with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const { return data_->p; }
  int degree() const { return data_->d; }
  std::uint64_t order() const { return data_->q; }
  const std::vector<std::uint64_t>& modulus() const { return data_->modulus; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, const Integer& e) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// Image of an integer in the prime subfield.
  Elem from_integer(const Integer& a) const;
  Elem from_u64(std::uint64_t a) const { return a % data_->p; }
  /// Absolute trace to F_p, returned as a residue in [0, p).
  std::uint64_t trace(Elem a) const;
  Elem pth_root(Elem a) const;

  std::vector<std::uint64_t> digits(Elem a) const;
  Elem encode(const std::vector<std::uint64_t>& digits) const;

  /// Generator of the multiplicative group with the smallest encoding.
  Elem smallest_generator() const;

  std::string describe() const;  // "@p^d"

  friend bool operator==(const FqContext& a, const FqContext& b) {
    return a.data_ == b.data_ || (a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus);
  }

 private:
  struct Data {
    std::uint64_t p = 2;
    int d = 1;
    std::uint64_t q = 2;
    std::vector<std::uint64_t> modulus;  // length d + 1, monic
  };
  explicit FqContext(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

FqContext fq_context(std::uint64_t p, int d);

/// Dense polynomial over F_q, constant term first, no trailing zeros.
class FqPoly {
 public:
  using Elem = FqContext::Elem;

  explicit FqPoly(FqContext ctx) : ctx_(std::move(ctx)) {}
  FqPoly(FqContext ctx, std::vector<Elem> coeffs);

  static FqPoly from_int_poly(const FqContext& ctx, const IntPolynomial& f);
  static FqPoly monomial(const FqContext& ctx, Elem c, int k);
  static FqPoly x(const FqContext& ctx) { return monomial(ctx, 1, 1); }
  static FqPoly constant(const FqContext& ctx, Elem c) { return monomial(ctx, c, 0); }

  /// "c0,c1,...@p^d"; the suffix may be omitted when a context is supplied.
  static FqPoly parse(std::string_view text);
  std::string to_string() const;

  const FqContext& context() const { return ctx_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Elem coeff(int i) const;
  Elem leading() const;
  const std::vector<Elem>& coefficients() const { return coeffs_; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  FqPoly monic() const;
  FqPoly derivative() const;
  Elem eval(Elem x) const;
  FqPoly scaled(Elem c) const;

  FqPoly& operator+=(const FqPoly& other);
  FqPoly& operator-=(const FqPoly& other);
  friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
  friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  FqContext ctx_;
  std::vector<Elem> coeffs_;
};

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly operator%(const FqPoly& a, const FqPoly& b);
FqPoly operator/(const FqPoly& a, const FqPoly& b);
/// Monic gcd (zero when both inputs are zero).
FqPoly gcd(FqPoly a, FqPoly b);
/// (g, s, t) with s*a + t*b = g, g monic.
std::tuple<FqPoly, FqPoly, FqPoly> ext_gcd(const FqPoly& a, const FqPoly& b);
FqPoly powmod(FqPoly base, const Integer& e, const FqPoly& mod);

struct FqFactor {
  FqPoly factor;  // monic irreducible
  int multiplicity = 1;
};

/// Squarefree decomposition: monic pairwise-coprime squarefree parts with
/// multiplicities (characteristic p aware).
std::vector<FqFactor> squarefree_decomposition(const FqPoly& f);
/// Distinct-degree factorization of a monic squarefree polynomial:
/// (product of all irreducible factors of degree k, k).
std::vector<std::pair<FqPoly, int>> distinct_degree_factorization(const FqPoly& f);

/// Complete factorization into monic irreducibles; the product of
/// factor^multiplicity equals f / lc(f). Deterministic for a given seed.
/// Factors are ordered by degree, then by coefficient codes.
std::vector<FqFactor> fq_poly_factor(const FqPoly& f, std::uint64_t seed = 0);
/// Rabin's irreducibility test.
bool fq_poly_irreducible(const FqPoly& f);
/// Irreducible-factor degrees with multiplicity, ascending.
std::vector<int> factor_pattern(const FqPoly& f, std::uint64_t seed = 0);

}  // namespace locred
