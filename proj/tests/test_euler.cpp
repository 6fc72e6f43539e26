#include <doctest.h>

#include "equichar/euler.hpp"
#include "equichar/oracle.hpp"

using namespace equichar;

namespace {

CoverDescription trivial_cover(long genus, long p = 3) {
  CoverDescription cover;
  cover.group = CayleyGroup::cyclic(1);
  cover.p = p;
  cover.base_genus = genus;
  cover.validate();
  return cover;
}

}  // namespace

TEST_CASE("trivial group: the formula degenerates to Riemann-Roch") {
  CoverDescription cover = trivial_cover(2);
  EquivariantSheafData o = structure_sheaf(cover);
  BrauerClassFunction chi = euler_characteristic(cover, o);
  CHECK(chi.dimension() == Cyclotomic(-1));
  CHECK(riemann_roch_dim(cover, o) == -1);
}

TEST_CASE("weakly wild degree-3 cover of the line") {
  ExplicitCover as = ExplicitCover::artin_schreier(3, 1);
  EquivariantSheafData o = structure_sheaf(as.derived());
  BrauerClassFunction chi = euler_characteristic(as.derived(), o);
  // (1/3) [k[G]]: the only p-regular class is the identity, value 1.
  CHECK(chi.values().size() == 1);
  CHECK(chi.dimension() == Cyclotomic(1));
  CHECK(riemann_roch_dim(as.derived(), o) == 1);
}

TEST_CASE("tame degree-2 cover: chi(O) is the trivial class") {
  for (long p : {3L, 5L, 7L}) {
    ExplicitCover kummer = ExplicitCover::kummer(2, p);
    EquivariantSheafData o = structure_sheaf(kummer.derived());
    BrauerClassFunction chi = euler_characteristic(kummer.derived(), o);
    CHECK(chi == BrauerClassFunction::trivial_char(kummer.derived().group, p));
  }
}

TEST_CASE("riemann-roch dimensions") {
  ExplicitCover as1 = ExplicitCover::artin_schreier(3, 1);
  EquivariantDivisor d;
  d.ramified["infty"] = 5;
  CHECK(riemann_roch_dim(as1.derived(), divisor_to_sheaf(as1.derived(), d)) == 6);

  ExplicitCover as2 = ExplicitCover::artin_schreier(3, 2);
  CHECK(as2.genus() == 1);
  CHECK(riemann_roch_dim(as2.derived(), structure_sheaf(as2.derived())) == 0);
}

TEST_CASE("dimension identity: identity value equals Riemann-Roch") {
  for (auto cover : {ExplicitCover::artin_schreier(3, 2).derived(),
                     ExplicitCover::artin_schreier(5, 3).derived(),
                     ExplicitCover::kummer(4, 3).derived(), ExplicitCover::affine(5).derived()}) {
    for (long n : {-1L, 0L, 3L, 7L}) {
      EquivariantDivisor d;
      d.ramified["infty"] = n;
      EquivariantSheafData sheaf = divisor_to_sheaf(cover, d);
      BrauerClassFunction chi = euler_characteristic(cover, sheaf);
      CHECK(chi.dimension() == Cyclotomic(riemann_roch_dim(cover, sheaf)));
    }
  }
}

TEST_CASE("lefschetz values at involutions") {
  ExplicitCover kummer = ExplicitCover::kummer(2, 3);
  EquivariantSheafData o = structure_sheaf(kummer.derived());
  // two fixed points, trace 1, chi = -1 at each: 1/2 + 1/2 = 1
  CHECK(lefschetz_value(kummer.derived(), o, 1) == Cyclotomic(1));

  ExplicitCover affine = ExplicitCover::affine(3);
  EquivariantSheafData oa = structure_sheaf(affine.derived());
  BrauerClassFunction chi = euler_characteristic(affine.derived(), oa);
  for (int rep : chi.class_reps()) {
    if (rep == 0) continue;
    CHECK(lefschetz_value(affine.derived(), oa, rep) == chi.value_at_element(rep));
  }
}

TEST_CASE("an element with no fixed points has lefschetz value zero") {
  // Klein four group, tame orbit stabilized by one factor; an involution
  // outside that factor moves every point of the orbit.
  auto g = CayleyGroup::elementary_abelian(2, 2);
  CoverDescription cover;
  cover.group = g;
  cover.p = 3;
  cover.base_genus = 1;
  RamificationOrbit orbit;
  orbit.name = "a";
  orbit.decomposition = Subgroup::from_members(g, {0, 1});
  orbit.filtration = {orbit.decomposition, Subgroup::trivial(g)};
  orbit.cotangent_exponent[0] = 0;
  orbit.cotangent_exponent[1] = 1;
  cover.orbits.push_back(orbit);
  cover.validate();
  EquivariantSheafData o = structure_sheaf(cover);
  CHECK(fixed_point_data(cover, o, 2).empty());
  CHECK(lefschetz_value(cover, o, 2) == Cyclotomic(0));
  CHECK(euler_characteristic(cover, o).value_at_element(2) == Cyclotomic(0));
}

TEST_CASE("lefschetz matches the euler class on explicit tame covers") {
  for (long m : {2L, 3L, 4L}) {
    ExplicitCover kummer = ExplicitCover::kummer(m, 5);
    EquivariantDivisor d;
    d.ramified["zero"] = 1;
    d.ramified["infty"] = 2;
    EquivariantSheafData sheaf = divisor_to_sheaf(kummer.derived(), d);
    BrauerClassFunction chi = euler_characteristic(kummer.derived(), sheaf);
    for (int rep : chi.class_reps()) {
      if (rep == 0) continue;
      CHECK(lefschetz_value(kummer.derived(), sheaf, rep) == chi.value_at_element(rep));
    }
  }
}

TEST_CASE("induced-character divisibility by the group order") {
  // unramified: the zero element, trivially divisible
  CoverDescription unramified;
  unramified.group = CayleyGroup::cyclic(3);
  unramified.p = 3;
  unramified.base_genus = 2;
  unramified.validate();
  InductionDivisibility zero = induction_divisibility(unramified);
  CHECK(zero.element.is_zero());
  CHECK(zero.divisible);

  // weakly wild degree 3: single coefficient 6 on the trivial character
  ExplicitCover as = ExplicitCover::artin_schreier(3, 1);
  InductionDivisibility res = induction_divisibility(as.derived());
  CHECK(res.element ==
        BrauerClassFunction::trivial_char(as.derived().group, 3).scaled(Rational(6)));
  CHECK(res.divisible);
  REQUIRE(res.quotient);
  CHECK(res.quotient->dimension() == Cyclotomic(2));

  // the order-6 affine cover: divisible by 6
  ExplicitCover affine = ExplicitCover::affine(3);
  InductionDivisibility res6 = induction_divisibility(affine.derived());
  CHECK(res6.divisible);

  ExplicitCover as2 = ExplicitCover::artin_schreier(2, 1);
  CHECK_THROWS_AS(induction_divisibility(as2.derived()), Error);  // needs odd p
}

TEST_CASE("restriction identity for a subgroup of the affine cover") {
  ExplicitCover affine = ExplicitCover::affine(3);
  const CoverDescription& cover = affine.derived();
  EquivariantSheafData o = structure_sheaf(cover);
  BrauerClassFunction chi = euler_characteristic(cover, o);
  Subgroup h = Subgroup::from_members(cover.group, cover.group->semidirect_info()->p_part);
  SubcoverResult sub = derive_subcover(cover, h);
  BrauerClassFunction restricted = restrict_to(chi, h);
  BrauerClassFunction direct = euler_characteristic(sub.cover, structure_sheaf(sub.cover));
  CHECK(restricted == direct);
}
