#include "locred/groups.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "locred/error.hpp"

namespace locred {

struct Group::Impl {
  enum class Kind { Table, Direct, Semidirect } kind = Kind::Table;
  std::size_t n = 1;
  std::string name;
  Elem identity = 0;
  std::vector<Elem> table;  // n*n when present
  std::vector<Elem> inverse;

  std::vector<std::uint32_t> orders;  // Direct: mixed radix, first factor least significant

  std::uint32_t m = 1;  // Semidirect
  std::uint64_t vsize = 1;
  std::optional<FqContext> ctx;
  std::vector<std::vector<FqContext::Elem>> scale;  // scale[j][v] = v * zeta^j
  std::vector<std::uint32_t> addtab;                // vsize^2 when small

  Elem rule_mul(Elem a, Elem b) const {
    switch (kind) {
      case Kind::Table:
        return table[static_cast<std::size_t>(a) * n + b];
      case Kind::Direct: {
        Elem out = 0;
        Elem radix = 1;
        for (auto o : orders) {
          const Elem x = (a / radix) % o;
          const Elem y = (b / radix) % o;
          out += ((x + y) % o) * radix;
          radix *= o;
        }
        return out;
      }
      case Kind::Semidirect: {
        const std::uint64_t i = a / vsize, v = a % vsize;
        const std::uint64_t j = b / vsize, w = b % vsize;
        const std::uint64_t sv = scale[j][v];
        const std::uint64_t sum = addtab.empty() ? ctx->add(sv, w) : addtab[sv * vsize + w];
        return static_cast<Elem>(((i + j) % m) * vsize + sum);
      }
    }
    return 0;
  }

  Elem mul(Elem a, Elem b) const {
    if (!table.empty()) return table[static_cast<std::size_t>(a) * n + b];
    return rule_mul(a, b);
  }

  void finish() {
    constexpr std::size_t kTableLimit = 1500;
    if (table.empty() && n <= kTableLimit) {
      std::vector<Elem> t(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = rule_mul(static_cast<Elem>(a), static_cast<Elem>(b));
      }
      table = std::move(t);
    }
    inverse.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      Elem x = static_cast<Elem>(a);
      Elem prev = identity;
      std::size_t guard = 0;
      while (x != identity) {
        prev = x;
        x = mul(x, static_cast<Elem>(a));
        if (++guard > n) throw Error(ErrorCode::InvalidArgument, "element without finite order");
      }
      inverse[a] = a == identity ? identity : prev;
    }
  }
};

namespace {

constexpr std::uint64_t kMaxGroupOrder = 1u << 22;

}  // namespace

Group Group::from_table(std::vector<std::vector<Elem>> table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty multiplication table");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Table;
  impl->n = n;
  impl->name = std::move(name);
  impl->table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(ErrorCode::InvalidArgument, "multiplication table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw Error(ErrorCode::InvalidArgument, "table entry out of range");
      impl->table[a * n + b] = table[a][b];
    }
  }
  std::optional<Elem> id;
  for (std::size_t e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      ok = impl->table[e * n + a] == a && impl->table[a * n + e] == a;
    }
    if (ok) id = static_cast<Elem>(e);
  }
  if (!id) throw Error(ErrorCode::InvalidArgument, "table has no identity");
  impl->identity = *id;
  impl->inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      if (impl->table[a * n + b] == *id && impl->table[b * n + a] == *id) {
        impl->inverse[a] = static_cast<Elem>(b);
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::InvalidArgument, "element " + std::to_string(a) + " has no inverse");
  }
  Group g(std::move(impl));
  if (!g.validate()) throw Error(ErrorCode::InvalidArgument, "table is not associative");
  return g;
}

Group Group::cyclic(std::uint32_t n) { return direct_cyclic({n}); }

Group Group::direct_cyclic(const std::vector<std::uint32_t>& orders) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Direct;
  std::uint64_t n = 1;
  std::ostringstream name;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0) throw Error(ErrorCode::InvalidArgument, "cyclic factor of order 0");
    n *= orders[i];
    if (n > kMaxGroupOrder) throw Error(ErrorCode::TooLarge, "group order above " + std::to_string(kMaxGroupOrder));
    if (orders[i] == 1 && orders.size() > 1) continue;
    if (name.tellp() > 0) name << " x ";
    name << "C" << orders[i];
    impl->orders.push_back(orders[i]);
  }
  if (impl->orders.empty()) impl->orders.push_back(1);
  impl->n = n;
  impl->name = name.str().empty() ? "C1" : name.str();
  impl->finish();
  return Group(std::move(impl));
}

Group Group::semidirect(std::uint32_t m, const FqContext& ctx, FqContext::Elem zeta, std::string name) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m = 0");
  const std::uint64_t n = static_cast<std::uint64_t>(m) * ctx.order();
  if (n > kMaxGroupOrder) throw Error(ErrorCode::TooLarge, "group order " + std::to_string(n));
  if (ctx.pow(zeta, static_cast<std::uint64_t>(m)) != 1) throw Error(ErrorCode::InvalidArgument, "zeta^m != 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Semidirect;
  impl->n = n;
  impl->name = std::move(name);
  impl->m = m;
  impl->vsize = ctx.order();
  impl->ctx = ctx;
  impl->scale.assign(m, std::vector<FqContext::Elem>(impl->vsize));
  FqContext::Elem z = 1;
  for (std::uint32_t j = 0; j < m; ++j) {
    for (std::uint64_t v = 0; v < impl->vsize; ++v) impl->scale[j][v] = ctx.mul(v, z);
    z = ctx.mul(z, zeta);
  }
  if (impl->vsize <= 1024) {
    impl->addtab.resize(impl->vsize * impl->vsize);
    for (std::uint64_t a = 0; a < impl->vsize; ++a) {
      for (std::uint64_t b = 0; b < impl->vsize; ++b) {
        impl->addtab[a * impl->vsize + b] = static_cast<std::uint32_t>(ctx.add(a, b));
      }
    }
  }
  impl->finish();
  return Group(std::move(impl));
}

std::size_t Group::order() const { return impl_->n; }
Group::Elem Group::identity() const { return impl_->identity; }
Group::Elem Group::mul(Elem a, Elem b) const { return impl_->mul(a, b); }
Group::Elem Group::inv(Elem a) const { return impl_->inverse[a]; }
const std::string& Group::name() const { return impl_->name; }

Group::Elem Group::pow(Elem a, std::uint64_t e) const {
  Elem result = identity();
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t Group::element_order(Elem a) const {
  std::uint64_t k = 1;
  Elem x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::string Group::element_label(Elem a) const {
  if (impl_->kind == Impl::Kind::Semidirect) {
    return "(" + std::to_string(a / impl_->vsize) + "," + std::to_string(a % impl_->vsize) + ")";
  }
  return std::to_string(a);
}

bool Group::validate(std::uint64_t seed) const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a) {
    const Elem x = static_cast<Elem>(a);
    if (mul(identity(), x) != x || mul(x, identity()) != x) return false;
    if (mul(x, inv(x)) != identity() || mul(inv(x), x) != identity()) return false;
  }
  auto assoc = [&](Elem a, Elem b, Elem c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (n <= 200) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c))) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (int i = 0; i < 1000; ++i) {
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

Subgroup::Subgroup(Group parent, std::vector<Elem> elements) : Subgroup(std::move(parent), std::move(elements), true) {}

Subgroup::Subgroup(Group parent, std::vector<Elem> elements, bool check)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!check) return;
  if (elements_.empty()) throw Error(ErrorCode::NotASubgroup, "empty set");
  for (auto a : elements_) {
    if (a >= parent_.order()) throw Error(ErrorCode::NotASubgroup, "element out of range");
  }
  if (!contains(parent_.identity())) throw Error(ErrorCode::NotASubgroup, "identity missing");
  for (auto a : elements_) {
    if (!contains(parent_.inv(a))) throw Error(ErrorCode::NotASubgroup, "not closed under inverses");
    for (auto b : elements_) {
      if (!contains(parent_.mul(a, b))) {
        throw Error(ErrorCode::NotASubgroup, "not closed: " + parent_.element_label(a) + "*" + parent_.element_label(b));
      }
    }
  }
  if (parent_.order() % elements_.size() != 0) throw Error(ErrorCode::NotASubgroup, "order does not divide |G|");
}

bool Subgroup::contains(Elem a) const { return std::binary_search(elements_.begin(), elements_.end(), a); }

Subgroup Subgroup::from_closed(Group parent, std::vector<Elem> elements) {
  return Subgroup(std::move(parent), std::move(elements), false);
}

Subgroup Subgroup::whole(const Group& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return from_closed(g, std::move(all));
}

Subgroup Subgroup::trivial(const Group& g) { return from_closed(g, {g.identity()}); }

namespace {

// Closure of `base` (already a subgroup, given as a membership mask) with
// extra generators.
std::vector<Group::Elem> close_up(const Group& g, std::vector<char>& mask, std::vector<Group::Elem> members,
                                  const std::vector<Group::Elem>& gens) {
  std::vector<Group::Elem> frontier = members;
  while (!frontier.empty()) {
    std::vector<Group::Elem> next;
    for (auto x : frontier) {
      for (auto s : gens) {
        const auto y = g.mul(x, s);
        if (!mask[y]) {
          mask[y] = 1;
          members.push_back(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return members;
}

}  // namespace

Subgroup Subgroup::generated(const Group& g, const std::vector<Elem>& gens) {
  for (auto s : gens) {
    if (s >= g.order()) throw Error(ErrorCode::InvalidArgument, "generator out of range");
  }
  std::vector<char> mask(g.order(), 0);
  mask[g.identity()] = 1;
  auto members = close_up(g, mask, {g.identity()}, gens);
  return from_closed(g, std::move(members));
}

GroupFamily build_semidirect(std::uint64_t q, std::uint32_t m) {
  if (!is_prime(q)) throw Error(ErrorCode::NotPrime, std::to_string(q));
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "m must exceed 1");
  if (gcd_u64(q, m) != 1) throw Error(ErrorCode::NotCoprime, "gcd(q, m) != 1");
  const std::uint64_t t = multiplicative_order(q % m, m);
  if (t > 62) throw Error(ErrorCode::TooLarge, "t = " + std::to_string(t));
  const FqContext ctx = fq_context(q, static_cast<int>(t));
  if (ctx.order() > kMaxGroupOrder) throw Error(ErrorCode::TooLarge, "q^t = " + std::to_string(ctx.order()));
  const auto gamma = ctx.smallest_generator();
  const auto zeta = ctx.pow(gamma, (ctx.order() - 1) / m);
  std::ostringstream name;
  name << "semidirect:q=" << q << ",m=" << m;
  Group g = Group::semidirect(m, ctx, zeta, name.str());
  std::vector<Group::Elem> hyper(ctx.order() / q);
  std::iota(hyper.begin(), hyper.end(), 0);
  GroupFamily fam{g, Subgroup::from_closed(g, std::move(hyper)), name.str(), SemidirectParams{q, m, static_cast<int>(t), ctx, zeta}, ""};
  return fam;
}

GroupFamily build_abelian(std::uint64_t q, std::uint32_t m) {
  if (!is_prime(q)) throw Error(ErrorCode::NotPrime, std::to_string(q));
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  const auto qq = static_cast<std::uint32_t>(q);
  Group g = Group::direct_cyclic({qq, qq, m});
  std::ostringstream name;
  name << "abelian:q=" << q << ",m=" << m;
  return GroupFamily{g, Subgroup::trivial(g), name.str(), std::nullopt, ""};
}

GroupFamily build_theorem4_group(std::uint64_t p, std::uint64_t s, T4Subcase subcase) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (!is_prime(s)) throw Error(ErrorCode::NotPrime, std::to_string(s));
  if (p == s) throw Error(ErrorCode::InvalidArgument, "p = s");
  if (subcase == T4Subcase::Auto) subcase = (s - 1) % p != 0 ? T4Subcase::Sub41 : T4Subcase::Sub42;
  std::ostringstream name;
  name << "t4:p=" << p << ",s=" << s;
  if (subcase == T4Subcase::Sub41) {
    // C_p acting on F_{s^u} through an element of order p.
    const std::uint64_t u = multiplicative_order(s % p, p);
    if (u > 62) throw Error(ErrorCode::TooLarge, "u = " + std::to_string(u));
    const FqContext ctx = fq_context(s, static_cast<int>(u));
    if (ctx.order() > kMaxGroupOrder) throw Error(ErrorCode::TooLarge, "s^u = " + std::to_string(ctx.order()));
    const auto zeta = ctx.pow(ctx.smallest_generator(), (ctx.order() - 1) / p);
    name << ",sub=4.1";
    Group g = Group::semidirect(static_cast<std::uint32_t>(p), ctx, zeta, name.str());
    std::vector<Group::Elem> hyper(ctx.order() / s);
    std::iota(hyper.begin(), hyper.end(), 0);
    return GroupFamily{g, Subgroup::from_closed(g, std::move(hyper)), name.str(),
                       SemidirectParams{s, static_cast<std::uint32_t>(p), static_cast<int>(u), ctx, zeta}, "4.1"};
  }
  // C_s acting on a faithful irreducible constituent of F_p C_s.
  const FqContext fp = fq_context(p, 1);
  std::vector<FqContext::Elem> ones(s, 1);  // (x^s - 1)/(x - 1)
  const auto factors = fq_poly_factor(FqPoly(fp, ones));
  const FqPoly& phi = factors.front().factor;
  if (phi.degree() == 1) {
    throw Error(ErrorCode::DegenerateModule,
                "faithful constituent of F_" + std::to_string(p) + "C_" + std::to_string(s) + " has dimension 1");
  }
  const std::uint64_t u = static_cast<std::uint64_t>(phi.degree());
  std::vector<std::uint64_t> modulus(phi.coefficients().begin(), phi.coefficients().end());
  const FqContext ctx = FqContext::with_modulus(p, modulus);
  if (ctx.order() > kMaxGroupOrder) throw Error(ErrorCode::TooLarge, "p^u = " + std::to_string(ctx.order()));
  const FqContext::Elem zeta = p;  // the class of x
  name << ",sub=4.2";
  Group g = Group::semidirect(static_cast<std::uint32_t>(s), ctx, zeta, name.str());
  std::vector<Group::Elem> hyper(ctx.order() / p);
  std::iota(hyper.begin(), hyper.end(), 0);
  return GroupFamily{g, Subgroup::from_closed(g, std::move(hyper)), name.str(),
                     SemidirectParams{p, static_cast<std::uint32_t>(s), static_cast<int>(u), ctx, zeta}, "4.2"};
}

GroupFamily build_from_descriptor(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "descriptor needs family:key=value,...");
  const std::string family = descriptor.substr(0, colon);
  std::map<std::string, std::string> kv;
  std::stringstream rest(descriptor.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "bad descriptor item '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  auto num = [&](const std::string& key) -> std::uint64_t {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorCode::ParseError, "descriptor lacks " + key);
    try {
      std::size_t used = 0;
      const auto v = std::stoull(it->second, &used);
      if (used != it->second.size()) throw Error(ErrorCode::ParseError, "bad number " + it->second);
      return v;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad number " + it->second);
    }
  };
  if (family == "semidirect") return build_semidirect(num("q"), static_cast<std::uint32_t>(num("m")));
  if (family == "abelian") return build_abelian(num("q"), static_cast<std::uint32_t>(num("m")));
  if (family == "cyclic") {
    Group g = Group::cyclic(static_cast<std::uint32_t>(num("n")));
    return GroupFamily{g, Subgroup::trivial(g), descriptor, std::nullopt, ""};
  }
  if (family == "t4") {
    T4Subcase sub = T4Subcase::Auto;
    if (auto it = kv.find("sub"); it != kv.end()) {
      if (it->second == "4.1") sub = T4Subcase::Sub41;
      else if (it->second == "4.2") sub = T4Subcase::Sub42;
      else throw Error(ErrorCode::ParseError, "sub must be 4.1 or 4.2");
    }
    return build_theorem4_group(num("p"), num("s"), sub);
  }
  throw Error(ErrorCode::ParseError, "unknown group family '" + family + "'");
}

std::optional<Group::Elem> element_of_order(const Group& g, std::uint64_t n) {
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (g.element_order(static_cast<Group::Elem>(a)) == n) return static_cast<Group::Elem>(a);
  }
  return std::nullopt;
}

bool has_element_of_order(const Group& g, std::uint64_t n) { return element_of_order(g, n).has_value(); }

std::map<std::uint64_t, std::size_t> order_statistics(const Group& g) {
  std::map<std::uint64_t, std::size_t> out;
  for (std::size_t a = 0; a < g.order(); ++a) ++out[g.element_order(static_cast<Group::Elem>(a))];
  return out;
}

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (const auto& [o, count] : order_statistics(g)) e = std::lcm(e, o);
  return e;
}

CosetAction coset_action(const Subgroup& h) {
  const Group& g = h.parent();
  const std::size_t n = g.order();
  std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
  std::vector<Group::Elem> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset_of[a] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(static_cast<Group::Elem>(a));
    for (auto x : h.elements()) coset_of[g.mul(static_cast<Group::Elem>(a), x)] = id;
  }
  std::vector<Group::Elem> kernel;
  for (std::size_t a = 0; a < n; ++a) {
    bool fixes = true;
    for (std::size_t c = 0; c < reps.size() && fixes; ++c) {
      fixes = coset_of[g.mul(static_cast<Group::Elem>(a), reps[c])] == c;
    }
    if (fixes) kernel.push_back(static_cast<Group::Elem>(a));
  }
  const std::size_t ksize = kernel.size();
  return CosetAction{reps.size(), Subgroup::from_closed(g, std::move(kernel)), n / ksize, std::move(coset_of),
                     std::move(reps)};
}

std::vector<std::uint32_t> coset_permutation(const CosetAction& action, const Group& g, Group::Elem a) {
  std::vector<std::uint32_t> perm(action.degree);
  for (std::size_t c = 0; c < action.degree; ++c) perm[c] = action.coset_of[g.mul(a, action.representatives[c])];
  return perm;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_as(b.parent())) throw Error(ErrorCode::DifferentParents, "intersection");
  std::vector<Group::Elem> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return Subgroup::from_closed(a.parent(), std::move(out));
}

std::size_t subgroup_product_size(const Subgroup& d, const Subgroup& h) {
  if (!d.parent().same_as(h.parent())) throw Error(ErrorCode::DifferentParents, "subgroup_product_size");
  return d.size() * h.size() / intersection(d, h).size();
}

bool is_normal(const Subgroup& n) {
  const Group& g = n.parent();
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto x = static_cast<Group::Elem>(a);
    const auto xi = g.inv(x);
    for (auto y : n.elements()) {
      if (!n.contains(g.mul(g.mul(x, y), xi))) return false;
    }
  }
  return true;
}

bool is_cyclic(const Subgroup& s) {
  for (auto a : s.elements()) {
    if (s.parent().element_order(a) == s.size()) return true;
  }
  return false;
}

namespace {

std::vector<Group::Elem> cyclic_closure(const Group& g, Group::Elem a) {
  std::vector<Group::Elem> out{g.identity()};
  for (auto x = a; x != g.identity(); x = g.mul(x, a)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const Group& g) {
  if (g.order() > kSubgroupEnumerationCap) {
    throw Error(ErrorCode::TooLarge, "subgroup enumeration capped at " + std::to_string(kSubgroupEnumerationCap));
  }
  // Each entry keeps the element list and a generating set.
  struct Node {
    std::vector<Group::Elem> elems;
    std::vector<Group::Elem> gens;
  };
  std::vector<Node> nodes;
  std::set<std::vector<Group::Elem>> seen;
  std::vector<Group::Elem> cyclic_gens;
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto c = cyclic_closure(g, static_cast<Group::Elem>(a));
    if (seen.insert(c).second) {
      nodes.push_back({c, {static_cast<Group::Elem>(a)}});
      cyclic_gens.push_back(static_cast<Group::Elem>(a));
    }
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (auto c : cyclic_gens) {
      if (std::binary_search(nodes[k].elems.begin(), nodes[k].elems.end(), c)) continue;
      std::vector<char> mask(g.order(), 0);
      for (auto x : nodes[k].elems) mask[x] = 1;
      std::vector<Group::Elem> gens = nodes[k].gens;
      gens.push_back(c);
      auto members = close_up(g, mask, nodes[k].elems, gens);
      std::sort(members.begin(), members.end());
      if (seen.insert(members).second) nodes.push_back({std::move(members), std::move(gens)});
    }
  }
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  std::vector<Subgroup> out;
  out.reserve(nodes.size());
  for (auto& node : nodes) out.push_back(Subgroup::from_closed(g, std::move(node.elems)));
  return out;
}

bool is_metacyclic(const Subgroup& m) {
  const Group& g = m.parent();
  std::set<std::vector<Group::Elem>> tried;
  for (auto a : m.elements()) {
    auto n = cyclic_closure(g, a);
    if (!tried.insert(n).second) continue;
    const auto in_n = [&](Group::Elem x) { return std::binary_search(n.begin(), n.end(), x); };
    bool normal = true;
    for (auto x : m.elements()) {
      if (!in_n(g.mul(g.mul(x, a), g.inv(x)))) {
        normal = false;
        break;
      }
    }
    if (!normal) continue;
    const std::size_t quotient = m.size() / n.size();
    for (auto x : m.elements()) {
      std::size_t k = 1;
      auto y = x;
      while (!in_n(y)) {
        y = g.mul(y, x);
        ++k;
      }
      if (k == quotient) return true;
    }
  }
  return false;
}

Lemma1Report check_lemma1(const Subgroup& h, std::uint64_t n) {
  Lemma1Report r;
  const Group& g = h.parent();
  r.index = g.order() / h.size();
  r.violating = element_of_order(g, n);
  const bool index_ok = r.index == n;
  r.pass = index_ok && !r.violating;
  std::ostringstream os;
  os << g.name() << ": [G:H] = " << r.index;
  if (!index_ok) os << " (expected " << n << ")";
  if (r.violating) os << "; element " << g.element_label(*r.violating) << " has order " << n;
  else os << "; no element of order " << n;
  r.message = os.str();
  return r;
}

Lemma3Report check_lemma3(const Subgroup& h, std::uint64_t n) {
  Lemma3Report r;
  const Group& g = h.parent();
  r.index = g.order() / h.size();
  const auto action = coset_action(h);
  r.core_trivial = action.kernel.size() == 1;
  for (const auto& m : enumerate_subgroups(g)) {
    if (!is_metacyclic(m)) continue;
    ++r.metacyclic_count;
    const std::size_t prod = subgroup_product_size(m, h);
    if (prod > r.max_product) {
      r.max_product = prod;
      r.maximizer = m;
    }
  }
  r.pass = r.index == n && r.core_trivial && r.max_product < g.order();
  std::ostringstream os;
  os << g.name() << ": [G:H] = " << r.index << ", core " << (r.core_trivial ? "trivial" : "nontrivial") << ", "
     << r.metacyclic_count << " metacyclic subgroups, max |MH| = " << r.max_product << " vs |G| = " << g.order();
  r.message = os.str();
  return r;
}

bool check_no_cyclic_normal(const Group& g) {
  if (g.order() > kNormalityCheckCap) {
    throw Error(ErrorCode::TooLarge, "normality check capped at " + std::to_string(kNormalityCheckCap));
  }
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto x = static_cast<Group::Elem>(a);
    const auto o = g.element_order(x);
    if (o == 1 || !is_prime(static_cast<std::uint64_t>(o))) continue;
    if (is_normal(Subgroup::from_closed(g, cyclic_closure(g, x)))) return false;
  }
  return true;
}

MetacyclicCensus metacyclic_census(const GroupFamily& family) {
  if (!family.semidirect) throw Error(ErrorCode::InvalidArgument, "census needs a semidirect family");
  const auto& params = *family.semidirect;
  const Group& g = family.group;
  const std::uint64_t vsize = params.field.order();
  MetacyclicCensus c;
  const auto subgroups = enumerate_subgroups(g);
  c.subgroups = subgroups.size();
  for (const auto& m : subgroups) {
    if (!is_metacyclic(m)) continue;
    ++c.metacyclic;
    const bool cyclic = is_cyclic(m);
    const bool divides_m = params.m % m.size() == 0;
    const bool literal = cyclic && (m.size() == params.q || divides_m);
    const bool inside_v = std::all_of(m.elements().begin(), m.elements().end(), [&](auto x) { return x < vsize; });
    const bool corrected = inside_v || (cyclic && divides_m);
    if (!literal) {
      ++c.outside_cyclic_q_or_m;
      if (!c.first_outside_cyclic_q_or_m) c.first_outside_cyclic_q_or_m = m;
    }
    if (!corrected) ++c.outside_v_or_cyclic_m;
  }
  return c;
}

}  // namespace locred
