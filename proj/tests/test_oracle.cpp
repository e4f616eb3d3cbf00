#include <catch2/catch_amalgamated.hpp>

#include "aritylab/aritylab.hpp"

using namespace aritylab;

TEST_CASE("naive automorphism filter on stock structures", "[oracle]") {
  Limits lim;
  lim.work_cap = 100'000'000;
  REQUIRE(naive_automorphisms(pure_set(4, lim), lim).size() == 24);
  REQUIRE(naive_automorphisms(linear_order(4, lim), lim).size() == 1);
  REQUIRE(naive_automorphisms(circular_order(6, lim), lim).size() == 6);
}

TEST_CASE("naive orbit partition agrees with direct counting", "[oracle]") {
  Limits lim;
  lim.work_cap = 100'000'000;
  FinStructure s = circular_order(4, lim);
  auto autos = naive_automorphisms(s, lim);
  TuplePartition p = naive_orbit_partition(autos, 4, 2, lim);
  REQUIRE(p.class_count == 4);
  REQUIRE(p.class_of[encode_tuple({0, 1}, 4)] == p.class_of[encode_tuple({3, 0}, 4)]);
  REQUIRE(p.class_of[encode_tuple({0, 1}, 4)] != p.class_of[encode_tuple({1, 0}, 4)]);
}

TEST_CASE("naive subtype partition clamps to orbits", "[oracle]") {
  Limits lim;
  lim.work_cap = 100'000'000;
  FinStructure s = circular_order(4, lim);
  auto autos = naive_automorphisms(s, lim);
  REQUIRE(naive_subtype_partition(autos, 4, 2, 3, lim).class_of ==
          naive_orbit_partition(autos, 4, 2, lim).class_of);
  REQUIRE(naive_subtype_partition(autos, 4, 3, 0, lim).class_count == 1);
}

TEST_CASE("naive n-arity decisions on the circular order", "[oracle]") {
  Limits lim;
  lim.work_cap = 100'000'000;
  FinStructure s = circular_order(5, lim);
  auto autos = naive_automorphisms(s, lim);
  DefSet k3 = s.relation(0);
  REQUIRE(!naive_is_n_ary(autos, 5, k3, 0, lim));
  REQUIRE(!naive_is_n_ary(autos, 5, k3, 1, lim));
  REQUIRE(naive_is_n_ary(autos, 5, k3, 2, lim));
  REQUIRE(naive_is_n_ary(autos, 5, k3, 3, lim));
  REQUIRE(naive_relation_arity(autos, 5, k3, lim) == 2);
  REQUIRE_THROWS_AS(naive_is_n_ary(autos, 5, DefSet(1, {{0}}), 1, lim), validation_error);
}

TEST_CASE("naive structure arity matches the fast path on small cases", "[oracle]") {
  Limits lim;
  lim.work_cap = 200'000'000;
  for (int m = 2; m <= 4; ++m) {
    FinStructure co = circular_order(m + 2, lim);
    ArityContext ctx(co, lim);
    REQUIRE(naive_structure_arity(co, 0, lim) == structure_arity(ctx).value);
  }
  FinStructure r = random_structure(4, 3, lim);
  ArityContext rkx(r, lim);
  REQUIRE(naive_structure_arity(r, 0, lim) == structure_arity(rkx).value);
}
