#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "equichar/group.hpp"

using namespace equichar;

namespace {

GroupPtr sym3() { return CayleyGroup::semidirect_pc(3, 1, 2, {{2}}); }

}  // namespace

TEST_CASE("cyclic groups") {
  auto g = CayleyGroup::cyclic(3);
  CHECK(g->order() == 3);
  CHECK(g->class_count() == 3);
  CHECK(g->is_abelian());
  CHECK(g->element_order(1) == 3);
}

TEST_CASE("semidirect product with inversion is the symmetric group on 3 letters") {
  auto g = sym3();
  CHECK(g->order() == 6);
  CHECK_FALSE(g->is_abelian());
  CHECK(g->class_count() == 3);
  REQUIRE(g->semidirect_info());
  CHECK(g->semidirect_info()->free_action);
  // |P| == 1 mod |C| whenever the action is free
  CHECK((3 - 1) % 2 == 0);
}

TEST_CASE("semidirect product with trivial action is the direct product") {
  std::vector<std::vector<long>> trivial{{1}};
  auto g = CayleyGroup::semidirect_pc(3, 1, 2, trivial);
  CHECK(g->order() == 6);
  CHECK(g->is_abelian());
  CHECK(g->class_count() == 6);
  CHECK_FALSE(g->semidirect_info()->free_action);
}

TEST_CASE("class sizes partition the group and divide its order") {
  for (GroupPtr g : {sym3(), CayleyGroup::cyclic(12), CayleyGroup::semidirect_pc_free(5, 1, 4),
                     CayleyGroup::elementary_abelian(2, 3)}) {
    long total = std::accumulate(g->class_sizes().begin(), g->class_sizes().end(), 0L);
    CHECK(total == g->order());
    for (long size : g->class_sizes()) CHECK(g->order() % size == 0);
  }
}

TEST_CASE("p-regular classes") {
  CHECK(CayleyGroup::cyclic(3)->p_regular_class_reps(3) == std::vector<int>{0});
  CHECK(sym3()->p_regular_class_reps(3).size() == 2);  // identity and the involutions
  CHECK(CayleyGroup::cyclic(6)->p_regular_class_reps(5).size() == 6);
}

TEST_CASE("double cosets") {
  auto g = sym3();
  Subgroup whole = Subgroup::whole(g);
  Subgroup triv = Subgroup::trivial(g);
  CHECK(double_coset_representatives(*g, whole, whole) == std::vector<int>{0});
  CHECK(double_coset_representatives(*g, triv, triv).size() == 6);

  // An order-2 subgroup on both sides: two double cosets, of sizes 2 and 4.
  int involution = -1;
  for (int x = 1; x < g->order(); ++x)
    if (g->element_order(x) == 2) {
      involution = x;
      break;
    }
  Subgroup h = Subgroup::generated(g, {involution});
  auto reps = double_coset_representatives(*g, h, h);
  CHECK(reps.size() == 2);
  long covered = 0;
  for (int rep : reps) {
    std::set<int> coset;
    for (int a : h.members())
      for (int b : h.members()) coset.insert(g->mul(g->mul(a, rep), b));
    covered += coset.size();
    CHECK((coset.size() == 2 || coset.size() == 4));
  }
  CHECK(covered == 6);
}

TEST_CASE("wild inertia structure checks") {
  auto g = sym3();
  std::vector<int> p_part;
  for (int x = 0; x < g->order(); ++x)
    if (g->element_order(x) == 1 || g->element_order(x) == 3) p_part.push_back(x);
  Subgroup wild = Subgroup::from_members(g, p_part);
  InertiaReport report = validate_wild_inertia(wild, 3);
  CHECK(report.all_pass());
  CHECK(report.e_wild == 3);
  CHECK(report.e_tame == 2);
  CHECK((report.e_wild - 1) % report.e_tame == 0);

  // Cyclic of order 6: the order-3 subgroup is normal but conjugation is
  // trivial, so the free-action requirement fails.
  auto c6 = CayleyGroup::cyclic(6);
  Subgroup sub3 = Subgroup::generated(c6, {2});
  REQUIRE(sub3.size() == 3);
  InertiaReport r6 = validate_wild_inertia(sub3, 3);
  CHECK_FALSE(r6.conjugation_free);
  CHECK_FALSE(r6.all_pass());

  // The whole cyclic group of order p: passes with trivial tame quotient.
  auto c3 = CayleyGroup::cyclic(3);
  InertiaReport r3 = validate_wild_inertia(Subgroup::whole(c3), 3);
  CHECK(r3.all_pass());
  CHECK(r3.e_tame == 1);
}

TEST_CASE("non-normal subgroup is a domain error") {
  auto g = sym3();
  int involution = -1;
  for (int x = 1; x < g->order(); ++x)
    if (g->element_order(x) == 2) involution = x;
  Subgroup h = Subgroup::generated(g, {involution});
  CHECK_THROWS_AS(validate_wild_inertia(h, 3), Error);
}

TEST_CASE("quotient group and projection") {
  auto g = sym3();
  Subgroup n = Subgroup::generated(g, {g->semidirect_info()->p_part[1]});
  auto [q, proj] = quotient_group(g, n);
  CHECK(q->order() == 2);
  for (int x = 0; x < g->order(); ++x)
    for (int y = 0; y < g->order(); ++y)
      CHECK(q->mul(proj[x], proj[y]) == proj[g->mul(x, y)]);
}

TEST_CASE("subgroup enumeration of the order-6 nonabelian group") {
  auto subs = all_subgroups(sym3());
  CHECK(subs.size() == 6);  // 1, three of order 2, one of order 3, whole
  std::map<long, int> by_order;
  for (const auto& s : subs) by_order[s.size()]++;
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 3);
  CHECK(by_order[3] == 1);
  CHECK(by_order[6] == 1);
}

TEST_CASE("invalid tables are rejected") {
  CHECK_THROWS_AS(CayleyGroup::from_table({0, 1, 1, 0}), Error);      // not a Latin square
  CHECK_THROWS_AS(CayleyGroup::from_table({1, 0, 0, 1}), Error);      // identity not at 0
  std::vector<std::vector<long>> singular{{0}};
  CHECK_THROWS_AS(CayleyGroup::semidirect_pc(3, 1, 2, singular), Error);
}

TEST_CASE("free semidirect builders satisfy the orbit-count congruence") {
  for (auto [p, a, t] : {std::tuple<long, long, long>{3, 1, 2}, {5, 1, 4}, {2, 2, 3}, {2, 3, 7}}) {
    auto g = CayleyGroup::semidirect_pc_free(p, a, t);
    REQUIRE(g->semidirect_info());
    CHECK(g->semidirect_info()->free_action);
    long pw = 1;
    for (long i = 0; i < a; ++i) pw *= p;
    CHECK((pw - 1) % t == 0);
  }
}
