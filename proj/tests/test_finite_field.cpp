#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "equichar/linalg.hpp"

using namespace equichar;

TEST_CASE("deterministic construction of small fields") {
  auto f4 = FiniteField::get(2, 2);
  CHECK(f4->size() == 4);
  CHECK(f4->modulus() == std::vector<long>{1, 1, 1});  // x^2 + x + 1
  CHECK(f4->generator() == 2);                          // the class of x

  auto f3 = FiniteField::get(3, 1);
  CHECK(f3->generator() == 2);
  auto f5 = FiniteField::get(5, 1);
  CHECK(f5->generator() == 2);
}

TEST_CASE("lift sends designated generator powers to roots of unity") {
  auto f3 = FiniteField::get(3, 1);
  CHECK(brauer_lift(*f3, 1) == Cyclotomic(1));
  CHECK(brauer_lift(*f3, 2) == Cyclotomic(-1));  // 2 = g^1, lift zeta_2

  auto f5 = FiniteField::get(5, 1);
  CHECK(brauer_lift(*f5, 4) == Cyclotomic(-1));  // 4 = g^2, lift zeta_4^2

  CHECK_THROWS_AS(brauer_lift(*f5, 0), Error);
}

TEST_CASE("lift is an injective homomorphism") {
  for (auto [p, s] : {std::pair<long, long>{3, 2}, {2, 3}, {5, 1}, {7, 1}}) {
    auto f = FiniteField::get(p, s);
    std::set<std::string> images;
    for (FiniteField::Elt x = 1; x < static_cast<FiniteField::Elt>(f->size()); ++x) {
      images.insert(f->lift(x).to_string());
      for (FiniteField::Elt y = 1; y < static_cast<FiniteField::Elt>(f->size()); ++y)
        CHECK(f->lift(f->mul(x, y)) == f->lift(x) * f->lift(y));
    }
    CHECK(images.size() == static_cast<std::size_t>(f->size() - 1));
  }
}

TEST_CASE("lifts are compatible along the designated embeddings") {
  // A lift computed in a subfield agrees with the lift computed after
  // embedding into any extension.
  for (auto [p, s, t] : {std::tuple<long, long, long>{3, 1, 2}, {3, 2, 4}, {2, 1, 2},
                         {2, 2, 4}, {5, 1, 2}}) {
    auto small = FiniteField::get(p, s);
    auto big = FiniteField::get(p, t);
    for (FiniteField::Elt x = 1; x < static_cast<FiniteField::Elt>(small->size()); ++x) {
      FiniteField::Elt y = small->embed(x, *big);
      CHECK(small->lift(x) == big->lift(y));
      // and the embedding respects addition (it is a field embedding)
      for (FiniteField::Elt z = 1; z < static_cast<FiniteField::Elt>(small->size()); ++z)
        CHECK(small->embed(small->add(x, z), *big) == big->add(y, small->embed(z, *big)));
    }
  }
}

TEST_CASE("jordan type of unipotent matrices") {
  auto f3 = FiniteField::get(3, 1);
  FFMatrix id3 = FFMatrix::identity(f3, 3);
  CHECK(jordan_type_of_unipotent(id3) == std::map<std::size_t, std::size_t>{{1, 3}});

  FFMatrix block(f3, 3, 3);  // one unipotent Jordan block
  for (int i = 0; i < 3; ++i) {
    block.at(i, i) = 1;
    if (i + 1 < 3) block.at(i, i + 1) = 1;
  }
  CHECK(jordan_type_of_unipotent(block) == std::map<std::size_t, std::size_t>{{3, 1}});

  // sigma : y -> y + 1 acting on {1, y, y^2} over F_3; binomial expansion
  // gives the action matrix, whose ranks of powers of (M - I) force one
  // block of size 3.
  FFMatrix m(f3, 3, 3);
  // columns are images: 1 -> 1; y -> 1 + y; y^2 -> 1 + 2y + y^2
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 1) = 1;
  m.at(0, 2) = 1;
  m.at(1, 2) = 2;
  m.at(2, 2) = 1;
  CHECK(jordan_type_of_unipotent(m) == std::map<std::size_t, std::size_t>{{3, 1}});

  FFMatrix not_unipotent(f3, 2, 2);
  not_unipotent.at(0, 0) = 2;
  not_unipotent.at(1, 1) = 1;
  CHECK_THROWS_AS(jordan_type_of_unipotent(not_unipotent), Error);
}

TEST_CASE("rank plus kernel dimension equals column count") {
  std::mt19937 rng(7);
  auto f = FiniteField::get(5, 1);
  std::uniform_int_distribution<int> entry(0, 4);
  std::uniform_int_distribution<int> dims(1, 6);
  for (int trial = 0; trial < 25; ++trial) {
    FFMatrix m(f, dims(rng), dims(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    CHECK(rank(m) + kernel_basis(m).size() == m.cols());
  }
}

TEST_CASE("eigenspace dimensions") {
  auto f5 = FiniteField::get(5, 1);
  FFMatrix m(f5, 2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 3;
  CHECK(eigenspace_dimension(m, 2) == 1);
  CHECK(eigenspace_dimension(m, 3) == 1);
  CHECK(eigenspace_dimension(m, 1) == 0);
  FFMatrix rect(f5, 2, 3);
  CHECK_THROWS_AS(eigenspace_dimension(rect, 1), Error);
}
