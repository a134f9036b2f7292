#include "locred/construct.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "locred/cyclotomic.hpp"
#include "locred/error.hpp"
#include "locred/finitefield.hpp"
#include "locred/groups.hpp"
#include "locred/ratfactor.hpp"

namespace locred {

IntPolynomial compositum_minpoly(const IntPolynomial& f, const IntPolynomial& g, Integer* multiplier) {
  if (!f.is_monic() || !g.is_monic()) throw Error(ErrorCode::InvalidArgument, "compositum needs monic inputs");
  if (f.degree() < 1 || g.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "compositum of a constant");
  const int target = f.degree() * g.degree();
  for (long c = 1; c <= 10; ++c) {
    const IntPolynomial gc = c == 1 ? g : poly_scale_root(g, Integer(c));
    const IntPolynomial gneg = poly_negate_variable(gc);
    IntPolynomial h = resultant_in_x(
        f, [&](const Integer& x0) { return poly_shift(gneg, -x0); }, target);
    if (h.degree() == target && is_squarefree(h)) {
      if (multiplier) *multiplier = c;
      return h;
    }
  }
  throw Error(ErrorCode::PrimitiveElementSearchFailed, "no c <= 10 gives a primitive element");
}

std::string pattern_string(const std::vector<int>& pattern) {
  std::string s = "[";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(pattern[i]);
  }
  return s + "]";
}

namespace {

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

ScanRecord scan(const IntPolynomial& f, std::uint64_t bound, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "scan of zero");
  ScanRecord rec;
  rec.bound = bound;
  std::string lines;
  for (auto p : primes_up_to(bound)) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p) != 0) continue;
    const FqContext ctx = fq_context(p, 1);
    const auto pattern = factor_pattern(FqPoly::from_int_poly(ctx, f), seed);
    const std::string ps = pattern_string(pattern);
    ++rec.primes;
    ++rec.histogram[ps];
    if (pattern.size() == 1 && pattern[0] == f.degree()) rec.irreducible_primes.push_back(p);
    lines += std::to_string(p) + ":" + ps + ";";
  }
  rec.digest = fnv1a_hex(lines);
  return rec;
}

std::string_view to_string(Mode m) { return m == Mode::ModP ? "modp" : "padic"; }

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Verified: return "Verified";
    case VerdictStatus::Falsified: return "Falsified";
    case VerdictStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::optional<std::uint64_t> smallest_square_prime(std::uint64_t n) {
  for (const auto& [p, e] : factor_u64(n)) {
    if (e >= 2) return p;
  }
  return std::nullopt;
}

// Smallest primes = 1 mod modulus, skipping `avoid`.
std::uint64_t prime_one_mod(std::uint64_t modulus, const std::set<std::uint64_t>& avoid) {
  for (std::uint64_t p = 2;; p = next_prime(p)) {
    if ((p - 1) % modulus == 0 && !avoid.count(p)) return p;
  }
}

ComponentField component(std::uint64_t ell, std::uint64_t d) {
  return ComponentField{ell, d, period_minpoly(ell, d).minpoly};
}

void assemble(Certificate& cert, std::uint64_t seed) {
  auto& c = cert.construction;
  IntPolynomial f = c.components.front().minpoly;
  c.multipliers.clear();
  for (std::size_t i = 1; i < c.components.size(); ++i) {
    Integer mult;
    f = compositum_minpoly(f, c.components[i].minpoly, &mult);
    c.multipliers.push_back(mult);
  }
  if (f.degree() != static_cast<int>(cert.degree) || !z_irreducible(f, seed)) {
    throw Error(ErrorCode::InvalidArgument, "components are not linearly disjoint");
  }
  cert.polynomial = f;
}

std::string group_descriptor(const char* family, std::uint64_t q, std::uint64_t m) {
  return std::string(family) + ":q=" + std::to_string(q) + ",m=" + std::to_string(m);
}

void fill_group_claims(Certificate& cert, const std::string& descriptor, bool with_lemma3) {
  const GroupFamily fam = build_from_descriptor(descriptor);
  auto& cl = cert.claims;
  cl.group = descriptor;
  cl.order = fam.group.order();
  cl.exponent = exponent(fam.group);
  cl.index = fam.group.order() / fam.designated.size();
  cl.lemma1 = check_lemma1(fam.designated, cert.degree).pass;
  if (with_lemma3 && fam.group.order() <= kSubgroupEnumerationCap) {
    cl.lemma3 = check_lemma3(fam.designated, cert.degree).pass;
  }
}

Certificate group_only(Mode mode, std::uint64_t n) {
  Certificate cert;
  cert.mode = mode;
  cert.degree = n;
  cert.certificate_only = true;
  const std::uint64_t q = factor_u64(n).front().first;
  const std::uint64_t m = n / q;
  cert.construction.family = "group-only";
  cert.construction.q = q;
  cert.construction.m = m;
  fill_group_claims(cert, group_descriptor("semidirect", q, m), mode == Mode::PAdic);
  cert.note = mode == Mode::ModP
                  ? "squarefree degree: realization of the group over Q (Shafarevich/Scholz) is not constructed"
                  : "squarefree degree: tame realization of the group over Q (Saltman) is not constructed";
  return cert;
}

void check_composite(std::uint64_t n) {
  if (n < 4 || is_prime(n)) throw Error(ErrorCode::NotComposite, std::to_string(n) + " is not composite");
}

}  // namespace

bool is_a4_quartic(const IntPolynomial& f) {
  if (f.degree() != 4 || !f.is_monic()) return false;
  const Integer d = discriminant(f);
  if (d <= 0 || !is_perfect_square(d)) return false;
  const Integer& a3 = f.coeff(3);
  const Integer& a2 = f.coeff(2);
  const Integer& a1 = f.coeff(1);
  const Integer& a0 = f.coeff(0);
  const IntPolynomial cubic(std::vector<Integer>{4 * a0 * a2 - a1 * a1 - a0 * a3 * a3, a1 * a3 - 4 * a0, -a2, 1});
  return z_irreducible(cubic) && z_irreducible(f);
}

IntPolynomial find_a4_quartic() {
  std::vector<long> order{0};
  for (long k = 1; k <= 20; ++k) {
    order.push_back(k);
    order.push_back(-k);
  }
  for (long a3 : order)
    for (long a2 : order)
      for (long a1 : order)
        for (long a0 : order) {
          IntPolynomial f{a0, a1, a2, a3, 1};
          if (!is_a4_quartic(f)) continue;
          try {
            pair_sum_resolvent(f);
          } catch (const Error& e) {
            if (e.code() == ErrorCode::DegenerateResolvent) continue;
            throw;
          }
          return f;
        }
  throw Error(ErrorCode::SearchExhausted, "no A_4 quartic with coefficients in [-20, 20]");
}

Certificate construct_modp(std::uint64_t n, const ConstructOptions& opts) {
  check_composite(n);
  Certificate cert;
  cert.mode = Mode::ModP;
  cert.degree = n;
  if (auto q = smallest_square_prime(n)) {
    auto& c = cert.construction;
    c.family = "compositum";
    c.q = *q;
    c.m = n / (*q * *q);
    c.ell1 = prime_one_mod(2 * c.q, {});
    c.ell2 = prime_one_mod(2 * c.q, {c.ell1});
    c.components = {component(c.ell1, c.q), component(c.ell2, c.q)};
    if (c.m > 1) {
      c.p_star = prime_one_mod(c.m, {c.ell1, c.ell2});
      c.components.push_back(component(c.p_star, c.m));
    }
    assemble(cert, opts.seed);
    fill_group_claims(cert, group_descriptor("abelian", c.q, c.m), false);
  } else if (n == 6) {
    auto& c = cert.construction;
    c.family = "a4-pair-sum";
    c.q = 2;
    c.m = 3;
    c.base_quartic = find_a4_quartic();
    cert.polynomial = pair_sum_resolvent(*c.base_quartic);
    fill_group_claims(cert, group_descriptor("semidirect", 2, 3), false);
  } else {
    cert = group_only(Mode::ModP, n);
  }
  if (cert.polynomial) cert.scan = scan(*cert.polynomial, opts.scan_bound, opts.seed);
  return cert;
}

Certificate construct_padic(std::uint64_t n, const ConstructOptions& opts) {
  check_composite(n);
  auto q = smallest_square_prime(n);
  if (!q) return group_only(Mode::PAdic, n);
  Certificate cert;
  cert.mode = Mode::PAdic;
  cert.degree = n;
  auto& c = cert.construction;
  c.family = "compositum";
  c.q = *q;
  c.m = n / (*q * *q);
  c.ell = prime_one_mod(2 * c.q, {});
  c.r = find_r(c.ell, c.q, opts.r_bound);
  c.components = {component(c.ell, c.q), component(c.r, c.q)};
  if (c.m > 1) {
    c.p_star = prime_one_mod(c.m, {c.ell, c.r});
    c.components.push_back(component(c.p_star, c.m));
  }
  assemble(cert, opts.seed);
  fill_group_claims(cert, group_descriptor("abelian", c.q, c.m), false);
  cert.claims.local_degree_bound = c.q * c.m;

  const std::string q_str = std::to_string(c.q);
  std::vector<RamifiedWitness> w;
  w.push_back({c.ell, "condition7", {{"a", std::to_string(c.ell)}, {"modulus", std::to_string(c.r)}, {"d", q_str}}});
  w.push_back({c.r, "condition6", {{"a", std::to_string(c.r)}, {"modulus", std::to_string(c.ell)}, {"d", q_str}}});
  if (c.p_star) {
    w.push_back({c.p_star,
                 "ramified-in-single-component",
                 {{"conductor", std::to_string(c.p_star)}, {"degree", std::to_string(c.m)}}});
  }
  Integer leftover = 1;
  for (const auto& p : prime_factors(discriminant(*cert.polynomial), &leftover)) {
    const auto pu = to_u64(p);
    if (pu == c.ell || pu == c.r || pu == c.p_star) continue;
    w.push_back({pu, "group-exponent", {{"exponent", std::to_string(cert.claims.exponent)}}});
  }
  std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.p < b.p; });
  cert.witnesses = std::move(w);
  cert.scan = scan(*cert.polynomial, opts.scan_bound, opts.seed);
  return cert;
}

HilbertReport hilbert_quartic(const Integer& a, const Integer& b, std::uint64_t scan_bound) {
  if (b == 0) throw Error(ErrorCode::InvalidArgument, "b must be nonzero");
  HilbertReport rep;
  rep.polynomial = IntPolynomial(std::vector<Integer>{b * b, 0, 2 * a, 0, 1});
  rep.irreducible = z_irreducible(rep.polynomial);
  rep.scan = scan(rep.polynomial, scan_bound);
  if (is_squarefree(rep.polynomial)) rep.q2 = qp_certificate(rep.polynomial, 2);
  return rep;
}

namespace {

// Pollard-Brent rho; returns a nontrivial factor of the composite n, or 0
// when the iteration budget runs out.
Integer rho_factor(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c <= 20; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    const unsigned long m = 128;
    unsigned long r = 1;
    std::uint64_t budget = 20000000;
    while (g == 1 && budget > 0) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          q = q * abs(Integer(x - y));
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      budget = budget > r ? budget - r : 0;
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        mpz_gcd(g.get_mpz_t(), Integer(abs(Integer(x - ys))).get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

void split_cofactor(const Integer& n, std::vector<Integer>& primes, Integer& leftover) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Integer root;
  if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
    for (unsigned long k = 2;; ++k) {
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        split_cofactor(root, primes, leftover);
        return;
      }
    }
  }
  const Integer d = rho_factor(n);
  if (d == 0) {
    leftover *= n;
    return;
  }
  split_cofactor(d, primes, leftover);
  split_cofactor(n / d, primes, leftover);
}

}  // namespace

std::vector<Integer> prime_factors(const Integer& a, Integer* leftover) {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "prime factors of zero");
  Integer n = abs(a);
  std::vector<Integer> out;
  for (auto p : primes_up_to(100000)) {
    if (n == 1) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      out.emplace_back(static_cast<unsigned long>(p));
      while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  Integer rest = 1;
  split_cofactor(n, out, rest);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (leftover) *leftover = rest;
  return out;
}

namespace {

class Checker {
 public:
  explicit Checker(Verdict& v) : v_(v) {}
  // Records a check; returns false (and falsifies) when it failed.
  bool require(bool ok, const std::string& what) {
    v_.log.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok && v_.status != VerdictStatus::Falsified) {
      v_.status = VerdictStatus::Falsified;
      v_.reason = what;
    }
    return ok;
  }
  void gap(const std::string& what) {
    v_.log.push_back("gap  " + what);
    v_.gaps.push_back(what);
  }
  bool falsified() const { return v_.status == VerdictStatus::Falsified; }

 private:
  Verdict& v_;
};

std::uint64_t witness_number(const RamifiedWitness& w, const std::string& key) {
  auto it = w.data.find(key);
  if (it == w.data.end()) throw Error(ErrorCode::MalformedCertificate, "witness at " + std::to_string(w.p) + " lacks " + key);
  return to_u64(parse_integer(it->second));
}

}  // namespace

Verdict verify_certificate(const Certificate& cert, std::optional<std::uint64_t> scan_bound, std::uint64_t seed) {
  Verdict v;
  v.status = VerdictStatus::Verified;
  Checker ck(v);
  const auto& c = cert.construction;
  const std::uint64_t n = cert.degree;

  if (!cert.certificate_only && !cert.polynomial) throw Error(ErrorCode::MalformedCertificate, "polynomial missing");
  if (c.family == "compositum" && c.components.empty()) throw Error(ErrorCode::MalformedCertificate, "no components");
  if (c.family == "a4-pair-sum" && !c.base_quartic) throw Error(ErrorCode::MalformedCertificate, "base quartic missing");

  // 1. the polynomial itself
  if (cert.polynomial) {
    const IntPolynomial& f = *cert.polynomial;
    if (!ck.require(f.degree() == static_cast<int>(n), "degree of polynomial is " + std::to_string(n))) return v;
    if (!ck.require(z_irreducible(f, seed), "polynomial is irreducible over Q")) return v;
  }

  // 2. construction parameters and ramified-prime witnesses
  if (c.family == "compositum") {
    std::uint64_t product = 1;
    for (const auto& comp : c.components) {
      product *= comp.degree;
      const std::string tag = "period field (" + std::to_string(comp.conductor) + ", " + std::to_string(comp.degree) + ")";
      if (!ck.require(is_prime(comp.conductor) && comp.degree >= 1 && (comp.conductor - 1) % comp.degree == 0,
                      tag + " has prime conductor and degree dividing conductor - 1")) {
        return v;
      }
      if (!ck.require(period_minpoly(comp.conductor, comp.degree).minpoly == comp.minpoly, tag + " minpoly re-derived")) return v;
    }
    if (!ck.require(product == n, "component degrees multiply to " + std::to_string(n))) return v;
    if (c.p_star) {
      if (!ck.require(is_prime(c.p_star) && c.m > 0 && (c.p_star - 1) % c.m == 0,
                      "p* = " + std::to_string(c.p_star) + " is a prime = 1 mod m")) {
        return v;
      }
      const std::set<std::uint64_t> others = cert.mode == Mode::PAdic ? std::set<std::uint64_t>{c.ell, c.r}
                                                                      : std::set<std::uint64_t>{c.ell1, c.ell2};
      if (!ck.require(!others.count(c.p_star), "p* differs from the other conductors")) return v;
    }
  }
  if (cert.mode == Mode::PAdic && c.family == "compositum") {
    const std::string q = std::to_string(c.q);
    if (!ck.require(is_prime(c.ell) && (c.ell - 1) % c.q == 0, "l = " + std::to_string(c.ell) + " is a prime = 1 mod q")) return v;
    if (!ck.require(is_prime(c.r) && c.r != c.ell && c.r != c.q, "r = " + std::to_string(c.r) + " is a prime outside {q, l}")) return v;
    if (!ck.require((c.r - 1) % c.q == 0, "condition5: r = " + std::to_string(c.r) + " = 1 mod " + q)) return v;
    if (!ck.require(is_dth_power_mod(static_cast<unsigned long>(c.r), c.ell, c.q),
                    "condition6: " + std::to_string(c.r) + " is a " + q + "-th power mod " + std::to_string(c.ell))) {
      return v;
    }
    if (!ck.require(is_dth_power_mod(static_cast<unsigned long>(c.ell), c.r, c.q),
                    "condition7: " + std::to_string(c.ell) + " is a " + q + "-th power mod " + std::to_string(c.r))) {
      return v;
    }
    const bool have_ell = c.components.size() >= 2 && c.components[0].conductor == c.ell && c.components[1].conductor == c.r;
    if (!ck.require(have_ell, "components are the period fields of l and r")) return v;
    for (const auto& w : cert.witnesses) {
      const std::string at = " (witness at " + std::to_string(w.p) + ")";
      if (w.reason == "condition6" || w.reason == "condition7") {
        const auto a = witness_number(w, "a");
        const auto mod = witness_number(w, "modulus");
        const auto d = witness_number(w, "d");
        const bool consistent = w.reason == "condition6" ? (w.p == c.r && a == c.r && mod == c.ell)
                                                         : (w.p == c.ell && a == c.ell && mod == c.r);
        if (!ck.require(consistent && d == c.q, w.reason + " witness matches the construction" + at)) return v;
        if (!ck.require(is_dth_power_mod(static_cast<unsigned long>(a), mod, d),
                        w.reason + ": " + std::to_string(a) + " is a " + std::to_string(d) + "-th power mod " +
                            std::to_string(mod) + at)) {
          return v;
        }
      } else if (w.reason == "ramified-in-single-component") {
        if (!ck.require(w.p == c.p_star && witness_number(w, "conductor") == c.p_star && witness_number(w, "degree") == c.m,
                        "p* is ramified only in the degree-m component" + at)) {
          return v;
        }
      } else if (w.reason == "group-exponent") {
        if (!ck.require(witness_number(w, "exponent") == cert.claims.exponent && cert.claims.exponent < n,
                        "abelian exponent bound below n" + at)) {
          return v;
        }
      } else {
        throw Error(ErrorCode::MalformedCertificate, "unknown witness reason " + w.reason);
      }
    }
  }
  if (c.family == "a4-pair-sum") {
    if (!ck.require(is_a4_quartic(*c.base_quartic), "base quartic has Galois group A_4")) return v;
  }

  // 3. group claims
  {
    const GroupFamily fam = build_from_descriptor(cert.claims.group);
    const auto& g = fam.group;
    if (!ck.require(g.order() == cert.claims.order, "group order " + std::to_string(cert.claims.order))) return v;
    if (!ck.require(exponent(g) == cert.claims.exponent, "group exponent " + std::to_string(cert.claims.exponent))) return v;
    const auto l1 = check_lemma1(fam.designated, n);
    if (!ck.require(cert.claims.index == n && l1.pass == cert.claims.lemma1 && l1.pass, "lemma 1: " + l1.message)) return v;
    if (cert.claims.lemma3) {
      const auto l3 = check_lemma3(fam.designated, n);
      if (!ck.require(l3.pass == *cert.claims.lemma3 && l3.pass, "lemma 3: " + l3.message)) return v;
    }
    if (cert.claims.local_degree_bound) {
      if (!ck.require(*cert.claims.local_degree_bound == c.q * c.m && c.q * c.m < n,
                      "local degree bound q*m = " + std::to_string(c.q * c.m) + " < " + std::to_string(n))) {
        return v;
      }
    }
    if (c.family == "compositum") {
      const auto expected = std::string("abelian:q=") + std::to_string(c.q) + ",m=" + std::to_string(c.m);
      if (!ck.require(cert.claims.group == expected, "group matches the compositum shape")) return v;
    }
  }

  if (!cert.polynomial) {
    ck.gap("certificate-only: no polynomial over Q is constructed");
    v.status = VerdictStatus::Inconclusive;
    return v;
  }
  const IntPolynomial& f = *cert.polynomial;

  // 4. scan
  {
    const std::uint64_t bound = scan_bound.value_or(cert.scan ? cert.scan->bound : 1000);
    const ScanRecord rec = scan(f, bound, seed);
    std::string first = rec.any_irreducible() ? std::to_string(rec.irreducible_primes.front()) : "";
    if (!ck.require(!rec.any_irreducible(), "no irreducible reduction mod p <= " + std::to_string(bound) +
                                                (first.empty() ? "" : " (irreducible mod " + first + ")"))) {
      return v;
    }
    if (cert.scan && cert.scan->bound == bound) {
      if (!ck.require(cert.scan->digest == rec.digest, "scan digest matches the recorded one")) return v;
    }
  }

  // 5. local certificates at the primes dividing the discriminant
  if (cert.mode == Mode::PAdic) {
    Integer leftover = 1;
    const auto primes = prime_factors(discriminant(f), &leftover);
    if (leftover != 1) ck.gap("discriminant cofactor " + to_decimal(leftover) + " not factored");
    std::set<std::uint64_t> covered;
    for (const auto& w : cert.witnesses) covered.insert(w.p);
    for (const auto& pz : primes) {
      const auto p = to_u64(pz);
      const LocalVerdict lv = qp_certificate(f, p);
      const std::string at = "Q_" + std::to_string(p) + ": " + lv.describe();
      if (lv.status == LocalStatus::ProvedIrreducible) {
        ck.require(false, "reducible over " + at);
        return v;
      }
      if (lv.status == LocalStatus::ProvedReducible) {
        ck.require(check_local_verdict(f, p, lv), "reducible over " + at);
      } else if (covered.count(p)) {
        ck.require(true, "Unknown at " + std::to_string(p) + ", covered by the construction witness");
      } else {
        ck.gap("no local certificate at " + std::to_string(p));
      }
    }
  }

  // 6. the polynomial is the one the construction produces
  if (c.family == "compositum") {
    IntPolynomial g = c.components.front().minpoly;
    std::vector<Integer> mults;
    for (std::size_t i = 1; i < c.components.size(); ++i) {
      Integer mult;
      g = compositum_minpoly(g, c.components[i].minpoly, &mult);
      mults.push_back(mult);
    }
    if (!ck.require(g == f && mults == c.multipliers, "polynomial re-derived from the components")) return v;
  } else if (c.family == "a4-pair-sum") {
    if (!ck.require(pair_sum_resolvent(*c.base_quartic) == f, "polynomial is the pair-sum resolvent of the quartic")) {
      return v;
    }
  }

  if (ck.falsified()) return v;
  if (!v.gaps.empty()) v.status = VerdictStatus::Inconclusive;
  return v;
}

}  // namespace locred
