#include <doctest.h>

#include <random>

#include "equichar/cyclotomic.hpp"

using namespace equichar;

namespace {

Cyclotomic zeta(long m, long k = 1) { return Cyclotomic::root_of_unity(m, k); }

// Uniform random element of Q(zeta_m) with small numerators.
Cyclotomic random_element(std::mt19937& rng, long m) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<long> exp(0, m - 1);
  Cyclotomic out;
  for (int t = 0; t < 3; ++t)
    out += Cyclotomic(Rational(num(rng), den(rng))) * zeta(m, exp(rng));
  return out;
}

}  // namespace

TEST_CASE("roots of unity reduce to canonical form") {
  CHECK(zeta(4) * zeta(4) == Cyclotomic(-1));
  CHECK(zeta(2) == Cyclotomic(-1));
  CHECK(zeta(1) == Cyclotomic(1));
  CHECK(zeta(6).conductor() == 3);  // zeta_6 = -zeta_3^2 lives in Q(zeta_3)
  CHECK(zeta(12, 2).conductor() == 3);
  CHECK(zeta(12, 3) == zeta(4));

  Cyclotomic sum;
  for (long k = 0; k < 5; ++k) sum += zeta(5, k);
  CHECK(sum.is_zero());
  CHECK(sum.conductor() == 1);
}

TEST_CASE("partial-sum identity for m(zeta-1)^{-1}") {
  // m (zeta - 1)^{-1} = sum_{d=1}^{m-1} d zeta^d for every m-th root
  // zeta != 1; the spelled-out case used everywhere: m = 3.
  Cyclotomic lhs = (zeta(3) - Cyclotomic(1)).inverse() * Cyclotomic(3);
  Cyclotomic rhs = zeta(3) + Cyclotomic(2) * zeta(3, 2);
  CHECK(lhs == rhs);

  for (long m = 2; m <= 30; ++m) {
    for (long k = 1; k < m; ++k) {
      Cyclotomic z = zeta(m, k);
      Cyclotomic left = z - Cyclotomic(1);
      Cyclotomic inv = left.inverse() * Cyclotomic(m);
      Cyclotomic sum;
      for (long d = 1; d < m; ++d) sum += Cyclotomic(d) * z.pow(d);
      CHECK(inv == sum);
    }
  }
}

TEST_CASE("field axioms hold on random elements") {
  std::mt19937 rng(20240811);
  for (long m : {3L, 4L, 8L, 12L, 15L, 24L}) {
    for (int trial = 0; trial < 12; ++trial) {
      Cyclotomic a = random_element(rng, m);
      Cyclotomic b = random_element(rng, m);
      Cyclotomic c = random_element(rng, m);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Cyclotomic(1));
        CHECK((a.inverse().conductor()) == a.conductor());
      }
    }
  }
}

TEST_CASE("mixed-conductor arithmetic lands at the minimal conductor") {
  Cyclotomic x = zeta(3) + zeta(4);
  CHECK(x.conductor() == 12);
  CHECK(x - zeta(4) == zeta(3));
  CHECK((x - zeta(4)).conductor() == 3);
  // A disguised rational: zeta_3 + zeta_3^2 = -1.
  CHECK(zeta(3) + zeta(3, 2) == Cyclotomic(-1));
}

TEST_CASE("conjugation inverts roots of unity") {
  for (long m : {3L, 5L, 8L, 12L}) {
    CHECK(zeta(m).conjugate() == zeta(m, m - 1));
    Cyclotomic x = zeta(m) + Cyclotomic(Rational(1, 2));
    CHECK(x.conjugate().conjugate() == x);
  }
}

TEST_CASE("inverse of zero is an arithmetic error") {
  CHECK_THROWS_AS(Cyclotomic().inverse(), Error);
  CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(), Error);
}

TEST_CASE("rational values expose numerator data") {
  Cyclotomic half(Rational(1, 2));
  CHECK(half.is_rational());
  CHECK(half.rational_value() == Rational(1, 2));
  CHECK_THROWS_AS(zeta(5).rational_value(), Error);
}
