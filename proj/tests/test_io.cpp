#include <doctest.h>

#include "equichar/cover_io.hpp"
#include "equichar/oracle.hpp"

using namespace equichar;
using nlohmann::json;

TEST_CASE("cyclotomic JSON round trip") {
  for (const Cyclotomic& value :
       {Cyclotomic(Rational(-3, 7)), Cyclotomic::root_of_unity(8, 3),
        Cyclotomic::root_of_unity(12, 1) + Cyclotomic(Rational(1, 2)), Cyclotomic(0)}) {
    CHECK(cyclotomic_from_json(cyclotomic_to_json(value)) == value);
  }
  CHECK(cyclotomic_from_json(json("2/3")) == Cyclotomic(Rational(2, 3)));
  CHECK(cyclotomic_from_json(json(-5)) == Cyclotomic(-5));
}

TEST_CASE("divisor JSON round trip") {
  EquivariantDivisor d;
  d.ramified["infty"] = -1;
  d.ramified["tame"] = 4;
  d.unramified.push_back({2, 3});
  EquivariantDivisor back = divisor_from_json(divisor_to_json(d));
  CHECK(back.ramified == d.ramified);
  CHECK(back.unramified == d.unramified);
}

TEST_CASE("group JSON round trip preserves the multiplication table") {
  for (GroupPtr g : {CayleyGroup::cyclic(6), CayleyGroup::semidirect_pc_free(3, 1, 2),
                     CayleyGroup::elementary_abelian(2, 2),
                     CayleyGroup::semidirect_pc_free(5, 1, 4)}) {
    GroupPtr back = group_from_json(group_to_json(g));
    CHECK(back->table() == g->table());
  }
}

TEST_CASE("cover files emitted from explicit covers reload identically") {
  for (auto cover : {ExplicitCover::artin_schreier(3, 1), ExplicitCover::artin_schreier(5, 2),
                     ExplicitCover::kummer(4, 3), ExplicitCover::affine(3),
                     ExplicitCover::affine(5)}) {
    CoverFile file;
    file.cover = cover.derived();
    EquivariantDivisor d;
    d.ramified[cover.derived().orbits[0].name] = 5;
    file.divisors["D"] = d;
    json j = cover_file_to_json(file);
    CoverFile back = cover_file_from_json(j);
    CHECK(covers_structurally_equal(back.cover, file.cover));
    CHECK(back.divisors.at("D").ramified == d.ramified);
    // serialization is stable
    CHECK(cover_file_to_json(back) == j);
  }
}

TEST_CASE("schema violations are parse errors") {
  CHECK_THROWS_AS(cover_file_from_json(json{{"format", "nope"}}), Error);
  json missing{{"format", "equichar-cover"}, {"version", 1}};
  CHECK_THROWS_AS(cover_file_from_json(missing), Error);
  json bad_version{{"format", "equichar-cover"}, {"version", 99}};
  CHECK_THROWS_AS(cover_file_from_json(bad_version), Error);
}

TEST_CASE("user-supplied tables ride along in cover files") {
  CoverFile file;
  file.cover = ExplicitCover::kummer(2, 3).derived();
  std::vector<std::vector<Cyclotomic>> rows{{Cyclotomic(1), Cyclotomic(1)},
                                            {Cyclotomic(1), Cyclotomic(-1)}};
  file.table = user_brauer_table(file.cover.group, file.cover.p, rows);
  CoverFile back = cover_file_from_json(cover_file_to_json(file));
  REQUIRE(back.table);
  CHECK(back.table->rows.size() == 2);
  CHECK(back.table->provenance == BrauerTable::Provenance::user_supplied);
}
