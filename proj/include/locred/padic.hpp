#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "locred/arith.hpp"
#include "locred/finitefield.hpp"
#include "locred/intpoly.hpp"

namespace locred {

struct NewtonPolygon {
  std::uint64_t p = 2;
  int x_power = 0;  // index of the first nonzero coefficient
  std::vector<std::pair<int, int>> points;  // (i, v_p(a_i)) for a_i != 0
  std::vector<std::pair<int, int>> hull;    // lower hull vertices, collinear ones merged
  std::vector<std::pair<Rational, int>> slopes;  // (slope, horizontal length), increasing
};

NewtonPolygon newton_polygon(const IntPolynomial& f, std::uint64_t p);

enum class LocalStatus { ProvedReducible, ProvedIrreducible, Unknown };
enum class WitnessKind { None, HenselSplit, MultiSlope, EisensteinSlope, ConstructionCertificate };

std::string_view to_string(LocalStatus s);
std::string_view to_string(WitnessKind k);

struct LocalWitness {
  WitnessKind kind = WitnessKind::None;
  // HenselSplit: f = lc(f) * first * second mod p, both monic and coprime.
  std::vector<std::uint64_t> first;
  std::vector<std::uint64_t> second;
  // MultiSlope: two distinct slopes of the polygon of f(x + shift).
  Rational slope_a;
  Rational slope_b;
  // EisensteinSlope: f(x + shift) has a single slope -a/n, gcd(a, n) = 1;
  // `slope_a` holds a/n.
  Integer shift;
  std::string reference;  // ConstructionCertificate
};

struct LocalVerdict {
  LocalStatus status = LocalStatus::Unknown;
  LocalWitness witness;

  std::string describe() const;
};

/// Default shift range 2p + 2.
int default_shift_range(std::uint64_t p);

/// Tries a coprime split of f mod p (needs p not dividing lc(f)), then the
/// Newton polygons of f(x + c) for c = 0..shift_range. Shifts where the
/// polygon is necessarily flat (p not dividing lc(f) nor f(c)) are skipped.
/// Every strategy is evaluated and a disagreement between a reducibility
/// and an irreducibility witness throws std::logic_error.
LocalVerdict qp_certificate(const IntPolynomial& f, std::uint64_t p, int shift_range);
LocalVerdict qp_certificate(const IntPolynomial& f, std::uint64_t p);

/// Independent re-check of a witness against f.
bool check_local_verdict(const IntPolynomial& f, std::uint64_t p, const LocalVerdict& verdict);

}  // namespace locred
