#include <doctest.h>

#include "equichar/local.hpp"

using namespace equichar;

TEST_CASE("freeness criterion for fractional ideals") {
  LocalExtensionData tame{{6, 2, 1}, 3};
  for (long b = -6; b <= 6; ++b) CHECK(decide_free(tame, b));

  LocalExtensionData weakly{{3, 3, 3, 1}, 3};
  CHECK(decide_free(weakly, 1));
  CHECK(decide_free(weakly, 4));
  CHECK(decide_free(weakly, -2));
  CHECK_FALSE(decide_free(weakly, 0));
  CHECK_FALSE(decide_free(weakly, 2));

  LocalExtensionData wild{{9, 9, 3, 3, 1}, 3};  // |G_2| = 3
  for (long b = -6; b <= 6; ++b) CHECK_FALSE(decide_free(wild, b));
}

TEST_CASE("freeness is periodic in b with period |G_1|") {
  for (auto ext : {LocalExtensionData{{5, 5, 5, 1}, 5}, LocalExtensionData{{6, 6, 3, 1}, 3},
                   LocalExtensionData{{4, 2, 1}, 2}}) {
    long period = ext.order_at(1);
    for (long b = -10; b <= 10; ++b)
      CHECK(decide_free(ext, b) == decide_free(ext, b + period));
  }
}

TEST_CASE("invariant and trace valuations") {
  CHECK(invariant_valuation(1, 5) == 1);
  CHECK(invariant_valuation(0, 2) == 0);
  CHECK(invariant_valuation(-(5 - 1), 5) == 0);

  CHECK(trace_valuation(0, 1, 0) == 0);  // unramified: trace is surjective
  for (long p : {2L, 3L, 5L})
    CHECK(trace_valuation(1, p, 2 * (p - 1)) == 1 + floor_div(0, p));
  // e = p, different (s+1)(p-1)
  CHECK(trace_valuation(4, 3, 3 * 2) == floor_div(6 + 4, 3));
}

TEST_CASE("trace surjectivity in the cyclic degree-p case") {
  for (long p : {2L, 3L, 5L}) {
    LocalExtensionData jump1{{p, p, p, 1}, p};
    CHECK(surjectivity_of_trace(jump1, 1));
    CHECK_FALSE(surjectivity_of_trace(jump1, 0));
    LocalExtensionData jump2{{p, p, p, p, 1}, p};
    CHECK_FALSE(surjectivity_of_trace(jump2, 1));
  }

  // the comparison is the freeness criterion itself over two periods
  for (long p : {3L, 5L}) {
    LocalExtensionData ext{{p, p, p, 1}, p};
    for (long b = -p; b < p; ++b)
      CHECK(surjectivity_of_trace(ext, b) == decide_free(ext, b));
  }

  LocalExtensionData not_cyclic_p{{6, 6, 3, 1}, 3};
  CHECK_THROWS_AS(surjectivity_of_trace(not_cyclic_p, 1), Error);
}

TEST_CASE("square root of the inverse different is free for odd totally wild groups") {
  for (long p : {3L, 5L, 7L}) {
    LocalExtensionData ext{{p, p, p, 1}, p};  // G = G_1 of order p, weakly ramified
    long b = -(ext.order_at(1) - 1);
    CHECK(decide_free(ext, b));
  }
}

TEST_CASE("validation rejects malformed filtrations") {
  CHECK_THROWS_AS(decide_free(LocalExtensionData{{4, 2, 3, 1}, 3}, 0), Error);  // increasing
  CHECK_THROWS_AS(decide_free(LocalExtensionData{{6, 6, 6, 1}, 3}, 0), Error);  // |G_1| not a p-power
  CHECK_THROWS_AS(decide_free(LocalExtensionData{{9, 9, 3, 1}, 2}, 0), Error);  // tame part not coprime
}
