#include "locred/padic.hpp"

#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "locred/error.hpp"

namespace locred {

NewtonPolygon newton_polygon(const IntPolynomial& f, std::uint64_t p) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Newton polygon of zero");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  NewtonPolygon np;
  np.p = p;
  np.x_power = -1;
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    if (np.x_power < 0) np.x_power = i;
    np.points.emplace_back(i, valuation(f.coeff(i), p));
  }
  auto cross = [](std::pair<int, int> o, std::pair<int, int> a, std::pair<int, int> b) {
    return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long long>(a.second - o.second) * (b.first - o.first);
  };
  for (const auto& pt : np.points) {
    while (np.hull.size() >= 2 && cross(np.hull[np.hull.size() - 2], np.hull.back(), pt) <= 0) np.hull.pop_back();
    np.hull.push_back(pt);
  }
  for (std::size_t k = 1; k < np.hull.size(); ++k) {
    const int dx = np.hull[k].first - np.hull[k - 1].first;
    Rational slope(np.hull[k].second - np.hull[k - 1].second, dx);
    slope.canonicalize();
    np.slopes.emplace_back(slope, dx);
  }
  return np;
}

std::string_view to_string(LocalStatus s) {
  switch (s) {
    case LocalStatus::ProvedReducible: return "ProvedReducible";
    case LocalStatus::ProvedIrreducible: return "ProvedIrreducible";
    case LocalStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::None: return "None";
    case WitnessKind::HenselSplit: return "HenselSplit";
    case WitnessKind::MultiSlope: return "MultiSlope";
    case WitnessKind::EisensteinSlope: return "EisensteinSlope";
    case WitnessKind::ConstructionCertificate: return "ConstructionCertificate";
  }
  return "?";
}

namespace {

std::string join_codes(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string LocalVerdict::describe() const {
  std::ostringstream os;
  os << to_string(status);
  switch (witness.kind) {
    case WitnessKind::HenselSplit:
      os << " HenselSplit [" << join_codes(witness.first) << "] * [" << join_codes(witness.second) << "]";
      break;
    case WitnessKind::MultiSlope:
      os << " MultiSlope c=" << witness.shift.get_str() << " slopes " << witness.slope_a.get_str() << ", "
         << witness.slope_b.get_str();
      break;
    case WitnessKind::EisensteinSlope:
      os << " EisensteinSlope c=" << witness.shift.get_str() << " slope " << witness.slope_a.get_str();
      break;
    case WitnessKind::ConstructionCertificate:
      os << " ConstructionCertificate " << witness.reference;
      break;
    case WitnessKind::None:
      break;
  }
  return os.str();
}

int default_shift_range(std::uint64_t p) {
  const std::uint64_t r = 2 * p + 2;
  return r > 1000000 ? 1000000 : static_cast<int>(r);
}

namespace {

std::optional<LocalVerdict> hensel_split(const IntPolynomial& f, std::uint64_t p) {
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p) != 0) return std::nullopt;
  const FqContext ctx = fq_context(p, 1);
  const FqPoly fp = FqPoly::from_int_poly(ctx, f);
  const auto factors = fq_poly_factor(fp);
  if (factors.size() < 2) return std::nullopt;
  FqPoly first = FqPoly::constant(ctx, 1);
  for (int i = 0; i < factors[0].multiplicity; ++i) first = first * factors[0].factor;
  FqPoly second = FqPoly::constant(ctx, 1);
  for (std::size_t k = 1; k < factors.size(); ++k) {
    for (int i = 0; i < factors[k].multiplicity; ++i) second = second * factors[k].factor;
  }
  LocalVerdict v;
  v.status = LocalStatus::ProvedReducible;
  v.witness.kind = WitnessKind::HenselSplit;
  v.witness.first = first.coefficients();
  v.witness.second = second.coefficients();
  return v;
}

// Verdict from the polygon of f(x + c), if it decides anything.
std::optional<LocalVerdict> slope_verdict(const IntPolynomial& shifted, std::uint64_t p, const Integer& c) {
  const NewtonPolygon np = newton_polygon(shifted, p);
  if (np.x_power != 0) return std::nullopt;  // rational root; left to the split test
  LocalVerdict v;
  v.witness.shift = c;
  if (np.slopes.size() >= 2) {
    v.status = LocalStatus::ProvedReducible;
    v.witness.kind = WitnessKind::MultiSlope;
    v.witness.slope_a = np.slopes[0].first;
    v.witness.slope_b = np.slopes[1].first;
    return v;
  }
  if (np.slopes.size() == 1) {
    const int n = shifted.degree();
    const Rational a_over_n = -np.slopes[0].first;
    if (a_over_n.get_den() == n) {
      v.status = LocalStatus::ProvedIrreducible;
      v.witness.kind = WitnessKind::EisensteinSlope;
      v.witness.slope_a = a_over_n;
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

LocalVerdict qp_certificate(const IntPolynomial& f, std::uint64_t p, int shift_range) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "qp_certificate of zero");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (f.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "qp_certificate of a constant");
  if (!is_squarefree(f)) throw Error(ErrorCode::NotSquarefree, f.to_string());

  std::optional<LocalVerdict> reducible = hensel_split(f, p);
  std::optional<LocalVerdict> irreducible;
  // With p not dividing lc(f), the polygon of f(x + c) is flat unless c is a
  // root of f mod p, so only those shifts are examined.
  std::vector<int> shifts;
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p) == 0) {
    const FqContext ctx = fq_context(p, 1);
    std::vector<std::uint64_t> roots;
    for (const auto& fac : fq_poly_factor(FqPoly::from_int_poly(ctx, f))) {
      if (fac.factor.degree() == 1) roots.push_back(ctx.neg(fac.factor.coeff(0)));
    }
    for (int c = 0; c <= shift_range; ++c) {
      for (auto r : roots) {
        if (static_cast<std::uint64_t>(c) % p == r) shifts.push_back(c);
      }
      if (roots.empty()) break;
    }
  } else {
    for (int c = 0; c <= shift_range; ++c) shifts.push_back(c);
  }
  for (int c : shifts) {
    const Integer cc = c;
    auto v = slope_verdict(poly_shift(f, cc), p, cc);
    if (!v) continue;
    if (v->status == LocalStatus::ProvedReducible && !reducible) reducible = v;
    if (v->status == LocalStatus::ProvedIrreducible && !irreducible) irreducible = v;
  }
  if (reducible && irreducible) {
    throw std::logic_error("qp_certificate: contradictory witnesses " + reducible->describe() + " / " +
                           irreducible->describe());
  }
  if (reducible) return *reducible;
  if (irreducible) return *irreducible;
  return LocalVerdict{};
}

LocalVerdict qp_certificate(const IntPolynomial& f, std::uint64_t p) {
  return qp_certificate(f, p, default_shift_range(p));
}

bool check_local_verdict(const IntPolynomial& f, std::uint64_t p, const LocalVerdict& verdict) {
  const auto& w = verdict.witness;
  switch (w.kind) {
    case WitnessKind::None:
      return verdict.status == LocalStatus::Unknown;
    case WitnessKind::ConstructionCertificate:
      return verdict.status == LocalStatus::ProvedReducible && !w.reference.empty();
    case WitnessKind::HenselSplit: {
      if (verdict.status != LocalStatus::ProvedReducible) return false;
      if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p) != 0) return false;
      const FqContext ctx = fq_context(p, 1);
      for (auto c : w.first) if (c >= p) return false;
      for (auto c : w.second) if (c >= p) return false;
      const FqPoly a(ctx, w.first);
      const FqPoly b(ctx, w.second);
      if (a.degree() < 1 || b.degree() < 1 || !a.is_monic() || !b.is_monic()) return false;
      if (!gcd(a, b).is_one()) return false;
      const FqPoly fp = FqPoly::from_int_poly(ctx, f);
      return fp == (a * b).scaled(fp.leading());
    }
    case WitnessKind::MultiSlope:
    case WitnessKind::EisensteinSlope: {
      const auto v = slope_verdict(poly_shift(f, w.shift), p, w.shift);
      if (!v || v->status != verdict.status || v->witness.kind != w.kind) return false;
      return v->witness.slope_a == w.slope_a && v->witness.slope_b == w.slope_b;
    }
  }
  return false;
}

}  // namespace locred
