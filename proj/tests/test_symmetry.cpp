#include <catch2/catch_amalgamated.hpp>

#include "aritylab/aritylab.hpp"

using namespace aritylab;

TEST_CASE("permutation helpers", "[symmetry]") {
  Perm a{1, 2, 0};
  Perm b{0, 2, 1};
  REQUIRE(perm_compose(a, b) == Perm{1, 0, 2});
  REQUIRE(perm_compose(b, a) == Perm{2, 1, 0});
  REQUIRE(perm_inverse(a) == Perm{2, 0, 1});
  REQUIRE(perm_is_identity(perm_compose(a, perm_inverse(a))));
  REQUIRE(perm_apply(a, {0, 0, 2}) == std::vector<int>{1, 1, 0});
  REQUIRE(perm_valid({1, 0}));
  REQUIRE(!perm_valid({1, 1}));
}

TEST_CASE("group order from generators", "[symmetry]") {
  REQUIRE(group_order({}) == 1);
  REQUIRE(group_order({{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}) == 120);
  REQUIRE(group_order({{1, 2, 3, 4, 5, 6, 0}}) == 7);
  REQUIRE(group_order({{1, 0, 3, 2}}) == 2);
}

TEST_CASE("group elements closure", "[symmetry]") {
  auto els = group_elements({{1, 2, 0}}, 3);
  REQUIRE(els.size() == 3);
  REQUIRE_THROWS_AS(group_elements({{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, 5, 10), cap_error);
}

TEST_CASE("automorphism groups of the stock structures", "[symmetry]") {
  Limits lim;
  REQUIRE(automorphism_group(pure_set(4, lim), lim).order == 24);
  REQUIRE(automorphism_group(linear_order(5, lim), lim).order == 1);
  REQUIRE(automorphism_group(circular_order(5, lim), lim).order == 5);
  REQUIRE(automorphism_group(pure_set(1, lim), lim).order == 1);
}

TEST_CASE("every reported generator preserves the structure", "[symmetry]") {
  Limits lim;
  for (int m = 3; m <= 6; ++m) {
    FinStructure s = circular_order(m, lim);
    AutGroup g = automorphism_group(s, lim);
    for (const Perm& p : g.generators) REQUIRE(perm_preserves(s, p));
  }
}

TEST_CASE("fast group order matches the naive filter", "[symmetry]") {
  Limits lim;
  lim.work_cap = 100'000'000;
  for (int m = 2; m <= 6; ++m) {
    FinStructure s = spherical_chain(m, 4, ChainVariant::cyclic, lim);
    REQUIRE(automorphism_group(s, lim).order == naive_automorphisms(s, lim).size());
  }
  FinStructure r = random_structure(5, 7, lim);
  REQUIRE(automorphism_group(r, lim).order == naive_automorphisms(r, lim).size());
}

TEST_CASE("orbit partitions match the naive ones elementwise", "[symmetry]") {
  Limits lim;
  lim.work_cap = 100'000'000;
  for (int m : {4, 5}) {
    FinStructure s = circular_order(m, lim);
    AutGroup g = automorphism_group(s, lim);
    auto autos = naive_automorphisms(s, lim);
    for (int k = 1; k <= 3; ++k) {
      TuplePartition fast = orbit_partition(g, k, lim);
      TuplePartition slow = naive_orbit_partition(autos, m, k, lim);
      REQUIRE(fast.class_of == slow.class_of);
      REQUIRE(fast.class_count == slow.class_count);
    }
  }
}

TEST_CASE("orbit partition representatives are class minima", "[symmetry]") {
  Limits lim;
  FinStructure s = circular_order(5, lim);
  AutGroup g = automorphism_group(s, lim);
  TuplePartition p = orbit_partition(g, 2, lim);
  REQUIRE(p.class_count == 5);
  for (int c = 0; c < p.class_count; ++c) {
    std::uint64_t rep = p.reps[static_cast<std::size_t>(c)];
    REQUIRE(p.class_of[rep] == c);
    for (std::uint64_t i = 0; i < rep; ++i) REQUIRE(p.class_of[i] != c);
  }
}

TEST_CASE("defset invariance test", "[symmetry]") {
  Limits lim;
  FinStructure s = circular_order(5, lim);
  AutGroup g = automorphism_group(s, lim);
  REQUIRE(defset_invariant(s.relation(0), g.generators));
  REQUIRE(!defset_invariant(DefSet(1, {{0}}), g.generators));
}
