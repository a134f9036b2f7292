#include <doctest.h>

#include "locred/error.hpp"
#include "locred/groups.hpp"
#include "oracles.hpp"

using namespace locred;

TEST_CASE("semidirect(2,3) is A_4 shaped") {
  const auto fam = build_semidirect(2, 3);
  const auto& g = fam.group;
  CHECK(g.order() == 12);
  CHECK(g.validate());
  CHECK(fam.designated.size() == 2);
  CHECK_FALSE(has_element_of_order(g, 6));
  CHECK(exponent(g) == 6);
  const auto stats = order_statistics(g);
  CHECK(stats.at(1) == 1);
  CHECK(stats.at(2) == 3);
  CHECK(stats.at(3) == 8);
  CHECK(enumerate_subgroups(g).size() == oracle::brute_force_subgroup_count(g));
}

TEST_CASE("subgroup lattice matches brute force on small groups") {
  for (const auto& g : {Group::cyclic(12), Group::direct_cyclic({2, 2, 2}), Group::direct_cyclic({2, 6}),
                        build_theorem4_group(2, 3, T4Subcase::Sub41).group}) {
    CHECK(enumerate_subgroups(g).size() == oracle::brute_force_subgroup_count(g));
  }
}

TEST_CASE("table groups are validated") {
  // Z/3 from a table
  const auto g = Group::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(g.order() == 3);
  CHECK(is_cyclic(Subgroup::whole(g)));
  CHECK_THROWS_AS(Group::from_table({{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(Group::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), Error);
}

TEST_CASE("subgroup construction checks closure") {
  const auto g = Group::cyclic(6);
  CHECK_NOTHROW(Subgroup(g, {0, 2, 4}));
  CHECK_THROWS_AS(Subgroup(g, {0, 1}), Error);
  CHECK(Subgroup::generated(g, {4}).size() == 3);
}

TEST_CASE("coset action kernel is the core") {
  const auto fam = build_semidirect(2, 3);
  const auto act = coset_action(fam.designated);
  CHECK(act.degree == 6);
  CHECK(act.kernel.size() == 1);
  CHECK(act.image_order == 12);
  // the core of a normal subgroup is itself
  const Subgroup v = Subgroup::generated(fam.group, {1, 2});
  CHECK(is_normal(v));
  CHECK(coset_action(v).kernel == v);
}

TEST_CASE("products and intersections") {
  const auto g = Group::cyclic(12);
  const Subgroup a = Subgroup::generated(g, {4});
  const Subgroup b = Subgroup::generated(g, {6});
  CHECK(intersection(a, b).size() == 1);
  CHECK(subgroup_product_size(a, b) == 6);
}

TEST_CASE("index-n subgroup and no element of order n") {
  const auto s23 = build_semidirect(2, 3);
  const auto r1 = check_lemma1(s23.designated, 6);
  CHECK(r1.pass);
  CHECK(r1.index == 6);
  const auto s25 = build_semidirect(2, 5);
  CHECK(s25.group.order() == 80);
  CHECK(check_lemma1(s25.designated, 10).pass);
  for (std::uint64_t q : {2, 3, 5}) {
    const auto ab = build_abelian(q, 1);
    CHECK(check_lemma1(ab.designated, q * q).pass);
  }
  // a cyclic group has an element of order n
  const auto c = Group::cyclic(6);
  CHECK_FALSE(check_lemma1(Subgroup::trivial(c), 6).pass);
}

TEST_CASE("metacyclic set products and the V_4 negative control") {
  const auto s23 = build_semidirect(2, 3);
  const auto r = check_lemma3(s23.designated, 6);
  CHECK(r.pass);
  CHECK(r.core_trivial);
  CHECK(r.max_product == 6);
  CHECK(check_lemma3(build_semidirect(2, 5).designated, 10).pass);
  const auto v4 = build_abelian(2, 1);
  CHECK_FALSE(check_lemma3(v4.designated, 4).pass);
}

TEST_CASE("metacyclic census") {
  const auto a4 = build_semidirect(2, 3);
  const auto c = metacyclic_census(a4);
  CHECK(c.subgroups == 10);
  CHECK(c.metacyclic == 9);
  // the Klein four subgroup is metacyclic but not cyclic
  CHECK(c.outside_cyclic_q_or_m == 1);
  REQUIRE(c.first_outside_cyclic_q_or_m.has_value());
  CHECK(c.first_outside_cyclic_q_or_m->size() == 4);
  CHECK(c.outside_v_or_cyclic_m == 0);
  CHECK(metacyclic_census(build_semidirect(2, 5)).outside_v_or_cyclic_m == 0);
}

TEST_CASE("t4 family groups") {
  const auto s3 = build_theorem4_group(2, 3, T4Subcase::Sub41);
  CHECK(s3.group.order() == 6);
  const auto g = build_theorem4_group(2, 5);
  CHECK(g.group.order() == 80);
  CHECK(g.subcase == "4.2");  // 2 divides 5 - 1
  CHECK(check_no_cyclic_normal(g.group));
  CHECK_FALSE(check_no_cyclic_normal(Group::cyclic(6)));
  CHECK_FALSE(check_no_cyclic_normal(build_abelian(2, 1).group));
}

TEST_CASE("descriptors") {
  CHECK(build_from_descriptor("semidirect:q=2,m=3").group.order() == 12);
  CHECK(build_from_descriptor("abelian:q=3,m=2").group.order() == 18);
  CHECK(build_from_descriptor("cyclic:n=7").group.order() == 7);
  CHECK(build_from_descriptor("t4:p=2,s=3,sub=4.1").group.order() == 6);
  CHECK_THROWS_AS(build_from_descriptor("dihedral:n=4"), Error);
  CHECK_THROWS_AS(build_from_descriptor("semidirect:q=4,m=3"), Error);
}

TEST_CASE("metacyclic test") {
  const auto a4 = build_semidirect(2, 3);
  CHECK_FALSE(is_metacyclic(Subgroup::whole(a4.group)));
  CHECK(is_metacyclic(Subgroup::whole(Group::direct_cyclic({2, 2}))));
  CHECK_FALSE(is_metacyclic(Subgroup::whole(Group::direct_cyclic({2, 2, 2}))));
}
