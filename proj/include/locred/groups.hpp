#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locred/finitefield.hpp"

namespace locred {

/// A finite group given by explicit enumeration of its elements 0..n-1.
/// Multiplication is either a stored table or a structural rule; copies
/// share the same immutable data, and subgroups refer to their parent by it.
class Group {
 public:
  using Elem = std::uint32_t;

  /// table[a][b] = a*b. Identity, inverses and closure are checked
  /// exhaustively, associativity fully up to order 200 and on 1000 random
  /// triples above that.
  static Group from_table(std::vector<std::vector<Elem>> table, std::string name = "table");
  static Group cyclic(std::uint32_t n);
  /// C_{n1} x C_{n2} x ...
  static Group direct_cyclic(const std::vector<std::uint32_t>& orders);
  /// C_m acting on the additive group of ctx via v -> v * zeta (zeta of
  /// multiplicative order dividing m). Element (i, v) has index i*|V| + v
  /// and (i, v)(j, w) = (i + j, v * zeta^j + w).
  static Group semidirect(std::uint32_t m, const FqContext& ctx, FqContext::Elem zeta, std::string name);

  std::size_t order() const;
  Elem identity() const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  std::uint64_t element_order(Elem a) const;
  const std::string& name() const;
  std::string element_label(Elem a) const;

  /// Associativity (full up to order 200, else 1000 random triples),
  /// identity and inverses.
  bool validate(std::uint64_t seed = 0) const;

  bool same_as(const Group& other) const { return impl_ == other.impl_; }

  struct Impl;

 private:
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

class Subgroup {
 public:
  using Elem = Group::Elem;

  /// Checks closure under multiplication and inverses (NotASubgroup).
  Subgroup(Group parent, std::vector<Elem> elements);

  const Group& parent() const { return parent_; }
  const std::vector<Elem>& elements() const { return elements_; }  // sorted
  std::size_t size() const { return elements_.size(); }
  bool contains(Elem a) const;
  bool operator==(const Subgroup& o) const { return parent_.same_as(o.parent_) && elements_ == o.elements_; }

  static Subgroup whole(const Group& g);
  static Subgroup trivial(const Group& g);
  static Subgroup generated(const Group& g, const std::vector<Elem>& gens);
  /// No closure check; the caller guarantees `elements` is a subgroup.
  static Subgroup from_closed(Group parent, std::vector<Elem> elements);

 private:
  Subgroup(Group parent, std::vector<Elem> elements, bool check);
  Group parent_;
  std::vector<Elem> elements_;
};

struct SemidirectParams {
  std::uint64_t q = 2;
  std::uint32_t m = 1;
  int t = 1;
  FqContext field = fq_context(2, 1);
  FqContext::Elem zeta = 1;
};

/// A constructed group with its designated subgroup H.
struct GroupFamily {
  Group group;
  Subgroup designated;
  std::string descriptor;
  std::optional<SemidirectParams> semidirect;
  std::string subcase;  // "4.1" / "4.2" for the t4 family
};

/// C_m x| V, V = F_{q^t}, t = ord_m(q); zeta = gamma^((q^t-1)/m) with gamma
/// the smallest-encoding generator. H is the hyperplane of V whose last
/// coordinate vanishes, of index m*q in G.
GroupFamily build_semidirect(std::uint64_t q, std::uint32_t m);
/// C_q x C_q x C_m with the trivial subgroup designated.
GroupFamily build_abelian(std::uint64_t q, std::uint32_t m);

enum class T4Subcase { Auto, Sub41, Sub42 };
/// Auto picks 4.1 when p does not divide s - 1 and 4.2 otherwise.
/// 4.1: C_p x| F_{s^u}, u = ord_p(s), acting by an element of order p.
/// 4.2: C_s x| F_p[x]/(phi), phi the first irreducible factor of
/// (x^s - 1)/(x - 1) over F_p, acting by multiplication with x; dimension 1
/// raises DegenerateModule. H is the hyperplane of V in both cases.
GroupFamily build_theorem4_group(std::uint64_t p, std::uint64_t s, T4Subcase subcase = T4Subcase::Auto);

/// Parses "semidirect:q=2,m=5", "abelian:q=3,m=2", "t4:p=2,s=5[,sub=4.1]",
/// "cyclic:n=6".
GroupFamily build_from_descriptor(const std::string& descriptor);

std::optional<Group::Elem> element_of_order(const Group& g, std::uint64_t n);
bool has_element_of_order(const Group& g, std::uint64_t n);
std::map<std::uint64_t, std::size_t> order_statistics(const Group& g);
std::uint64_t exponent(const Group& g);

struct CosetAction {
  std::size_t degree = 0;
  Subgroup kernel;  // core of H
  std::size_t image_order = 0;
  std::vector<std::uint32_t> coset_of;  // coset index of every element
  std::vector<Group::Elem> representatives;
};
CosetAction coset_action(const Subgroup& h);
/// Permutation induced by g on the cosets (left multiplication).
std::vector<std::uint32_t> coset_permutation(const CosetAction& action, const Group& g, Group::Elem a);

Subgroup intersection(const Subgroup& a, const Subgroup& b);
std::size_t subgroup_product_size(const Subgroup& d, const Subgroup& h);
bool is_normal(const Subgroup& n);
bool is_cyclic(const Subgroup& s);

constexpr std::size_t kSubgroupEnumerationCap = 5000;
/// All subgroups, ordered by size then elements. Cyclic subgroups seed a
/// worklist that is closed under joins with cyclic subgroups.
std::vector<Subgroup> enumerate_subgroups(const Group& g);
/// Some cyclic normal N with M/N cyclic.
bool is_metacyclic(const Subgroup& m);

struct Lemma1Report {
  bool pass = false;
  std::size_t index = 0;
  std::optional<Group::Elem> violating;  // element of order n, if any
  std::string message;
};
Lemma1Report check_lemma1(const Subgroup& h, std::uint64_t n);

struct Lemma3Report {
  bool pass = false;
  std::size_t index = 0;
  bool core_trivial = false;
  std::size_t metacyclic_count = 0;
  std::size_t max_product = 0;
  std::optional<Subgroup> maximizer;
  std::string message;
};
Lemma3Report check_lemma3(const Subgroup& h, std::uint64_t n);

constexpr std::size_t kNormalityCheckCap = 1u << 16;
/// True iff no nontrivial cyclic subgroup is normal. Uses elements of prime
/// order only: a cyclic normal subgroup has a characteristic one of prime
/// order.
bool check_no_cyclic_normal(const Group& g);

/// Metacyclic subgroups of a semidirect family against two descriptions:
/// "cyclic of order q or dividing m" and "inside V or cyclic of order
/// dividing m".
struct MetacyclicCensus {
  std::size_t subgroups = 0;
  std::size_t metacyclic = 0;
  std::size_t outside_cyclic_q_or_m = 0;
  std::size_t outside_v_or_cyclic_m = 0;
  std::optional<Subgroup> first_outside_cyclic_q_or_m;
};
MetacyclicCensus metacyclic_census(const GroupFamily& family);

}  // namespace locred
