#include <doctest.h>

#include "equichar/cover.hpp"
#include "equichar/oracle.hpp"

using namespace equichar;

namespace {

// Cyclic degree-p cover data, totally ramified at one point with the given
// ramification jump.
CoverDescription cyclic_cover(long p, long jump, long base_genus) {
  CoverDescription cover;
  cover.group = CayleyGroup::cyclic(p);
  cover.p = p;
  cover.base_genus = base_genus;
  RamificationOrbit orbit;
  orbit.name = "infty";
  orbit.decomposition = Subgroup::whole(cover.group);
  for (long s = 0; s <= jump; ++s) orbit.filtration.push_back(Subgroup::whole(cover.group));
  orbit.filtration.push_back(Subgroup::trivial(cover.group));
  for (int c = 0; c < p; ++c) orbit.cotangent_exponent[c] = 0;
  cover.orbits.push_back(std::move(orbit));
  cover.validate();
  return cover;
}

CoverDescription trivial_cover(long genus, long p = 3) {
  CoverDescription cover;
  cover.group = CayleyGroup::cyclic(1);
  cover.p = p;
  cover.base_genus = genus;
  cover.validate();
  return cover;
}

}  // namespace

TEST_CASE("ramification invariants") {
  CoverDescription as = cyclic_cover(3, 1, 0);
  RamificationInvariants inv = as.orbits[0].invariants();
  CHECK(inv.e == 3);
  CHECK(inv.e_wild == 3);
  CHECK(inv.e_tame == 1);
  CHECK(inv.different_order == 2 * (3 - 1));

  ExplicitCover affine = ExplicitCover::affine(3);
  RamificationInvariants wild = affine.derived().orbit("infty").invariants();
  CHECK(wild.e == 6);
  CHECK(wild.e_wild == 3);
  CHECK(wild.e_tame == 2);
  CHECK(wild.different_order == 5 + 2);

  RamificationInvariants tame = affine.derived().orbit("tame").invariants();
  CHECK(tame.e == 2);
  CHECK(tame.different_order == 1);
}

TEST_CASE("genus from the Hurwitz formula") {
  CHECK(genus_upstairs(trivial_cover(2)) == 2);
  CHECK(genus_upstairs(cyclic_cover(3, 2, 0)) == 1);  // jump 2, order 3
  CHECK(ExplicitCover::affine(3).genus() == 0);
}

TEST_CASE("inconsistent Hurwitz data is rejected") {
  // Odd total different: cyclic of order 2 with jump 2 gives
  // 2g - 2 = -4 + 3, which is odd.
  CHECK_THROWS_AS(cyclic_cover(2, 2, 0), Error);
}

TEST_CASE("ramification classification") {
  CHECK(classify_ramification(trivial_cover(1)) == Ramification::unramified);
  CHECK(classify_ramification(cyclic_cover(3, 1, 0)) == Ramification::weakly_ramified);
  CHECK(classify_ramification(cyclic_cover(3, 2, 0)) == Ramification::wild);
  CHECK(classify_ramification(ExplicitCover::kummer(2, 3).derived()) == Ramification::tame);
  CHECK(classify_ramification(ExplicitCover::affine(3).derived()) ==
        Ramification::weakly_ramified);
}

TEST_CASE("divisor to sheaf") {
  ExplicitCover kummer = ExplicitCover::kummer(2, 3);
  const CoverDescription& cover = kummer.derived();

  EquivariantSheafData zero = divisor_to_sheaf(cover, EquivariantDivisor{});
  CHECK(zero.rank == 1);
  CHECK(zero.degree == 0);
  for (const auto& o : cover.orbits)
    CHECK(zero.fibres.at(o.name) ==
          BrauerClassFunction::trivial_char(o.decomposition.group(), cover.p));

  EquivariantDivisor d;
  d.ramified["zero"] = -1;
  d.ramified["infty"] = -1;
  EquivariantSheafData sheaf = divisor_to_sheaf(cover, d);
  CHECK(sheaf.degree == -2);
  for (const auto& o : cover.orbits) {
    // fibre is chi^{+1}, the sign character of the order-2 group
    const BrauerClassFunction& fibre = sheaf.fibres.at(o.name);
    CHECK(fibre.values()[0] == Cyclotomic(1));
    CHECK(fibre.values()[1] == Cyclotomic(-1));
  }

  ExplicitCover as = ExplicitCover::artin_schreier(3, 1);
  EquivariantDivisor d5;
  d5.ramified["infty"] = 5;
  EquivariantSheafData s5 = divisor_to_sheaf(as.derived(), d5);
  CHECK(s5.degree == 5);
  CHECK(s5.fibres.at("infty") ==
        BrauerClassFunction::trivial_char(as.derived().orbits[0].decomposition.group(), 3));
}

TEST_CASE("divisor degree is additive") {
  ExplicitCover affine = ExplicitCover::affine(3);
  EquivariantDivisor a, b;
  a.ramified["infty"] = 2;
  a.unramified.push_back({1, 2});
  b.ramified["infty"] = -1;
  b.ramified["tame"] = 3;
  EquivariantDivisor sum;
  sum.ramified["infty"] = 1;
  sum.ramified["tame"] = 3;
  sum.unramified.push_back({1, 2});
  CHECK(divisor_degree(affine.derived(), a) + divisor_degree(affine.derived(), b) ==
        divisor_degree(affine.derived(), sum));
}

TEST_CASE("canonical divisor coefficients in the weakly ramified case") {
  // n'_P - e_P r = (e_P - 1) + (e^w_P - 1) when G_{P,2} = 1.
  for (auto cover : {ExplicitCover::kummer(2, 3).derived(), ExplicitCover::kummer(3, 5).derived(),
                     ExplicitCover::affine(3).derived(), ExplicitCover::affine(5).derived(),
                     ExplicitCover::artin_schreier(3, 1).derived()}) {
    EquivariantDivisor k = canonical_divisor(cover, {{"infty", -2}}, {});
    for (const auto& o : cover.orbits) {
      RamificationInvariants inv = o.invariants();
      long r = o.name == "infty" ? -2 : 0;
      CHECK(k.ramified.at(o.name) - inv.e * r == (inv.e - 1) + (inv.e_wild - 1));
    }
    CHECK(divisor_degree(cover, k) == 2 * genus_upstairs(cover) - 2);
  }
}

TEST_CASE("the canonical divisor helper rejects wrong base data") {
  CoverDescription cover = ExplicitCover::kummer(2, 3).derived();
  CHECK_THROWS_AS(canonical_divisor(cover, {{"infty", -1}}, {}), Error);
}

TEST_CASE("subcover of the whole group and of the trivial subgroup") {
  ExplicitCover affine = ExplicitCover::affine(3);
  const CoverDescription& cover = affine.derived();

  SubcoverResult whole = derive_subcover(cover, Subgroup::whole(cover.group));
  CHECK(whole.cover.base_genus == cover.base_genus);
  CHECK(whole.cover.orbits.size() == cover.orbits.size());
  for (std::size_t i = 0; i < cover.orbits.size(); ++i) {
    CHECK(whole.cover.orbits[i].invariants().e == cover.orbits[i].invariants().e);
    CHECK(whole.cover.orbits[i].invariants().different_order ==
          cover.orbits[i].invariants().different_order);
  }

  SubcoverResult trivial = derive_subcover(cover, Subgroup::trivial(cover.group));
  CHECK(trivial.cover.orbits.empty());
  CHECK(trivial.cover.base_genus == genus_upstairs(cover));
}

TEST_CASE("subcover along the translation subgroup of the affine cover") {
  ExplicitCover affine = ExplicitCover::affine(3);
  const CoverDescription& cover = affine.derived();
  // the p-part: translations
  Subgroup h = Subgroup::from_members(cover.group, cover.group->semidirect_info()->p_part);
  SubcoverResult sub = derive_subcover(cover, h);
  REQUIRE(sub.cover.orbits.size() == 1);  // only the wild point stays ramified
  RamificationInvariants inv = sub.cover.orbits[0].invariants();
  CHECK(inv.e == 3);
  CHECK(inv.e_wild == 3);
  CHECK(inv.different_order == 4);
  CHECK(sub.cover.base_genus == 0);
  CHECK(classify_ramification(sub.cover) == Ramification::weakly_ramified);

  // the tame orbit becomes one free orbit over one base point
  EquivariantDivisor d;
  d.ramified["tame"] = 2;
  EquivariantDivisor moved = sub.transport_divisor(d);
  CHECK(moved.ramified.empty());
  REQUIRE(moved.unramified.size() == 1);
  CHECK(moved.unramified[0] == std::pair<long, long>{2, 1});
}

TEST_CASE("genus is preserved along every subgroup") {
  ExplicitCover affine = ExplicitCover::affine(3);
  const CoverDescription& cover = affine.derived();
  long g_x = genus_upstairs(cover);
  for (const auto& h : all_subgroups(cover.group)) {
    SubcoverResult sub = derive_subcover(cover, h);
    CHECK(genus_upstairs(sub.cover) == g_x);
  }
}

TEST_CASE("orbit validation rejects broken cotangent data") {
  auto g = CayleyGroup::cyclic(4);
  CoverDescription cover;
  cover.group = g;
  cover.p = 3;
  cover.base_genus = 1;
  RamificationOrbit orbit;
  orbit.name = "bad";
  orbit.decomposition = Subgroup::whole(g);
  orbit.filtration = {Subgroup::whole(g), Subgroup::trivial(g)};
  for (int i = 0; i < 4; ++i) orbit.cotangent_exponent[i] = 0;  // not injective
  cover.orbits.push_back(orbit);
  CHECK_THROWS_AS(cover.validate(), Error);
}
