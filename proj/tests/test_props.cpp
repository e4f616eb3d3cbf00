#include <catch2/catch_amalgamated.hpp>

#include "aritylab/aritylab.hpp"

using namespace aritylab;

namespace {

// every class of fine sits inside one class of coarse
bool refines(const TuplePartition& fine, const TuplePartition& coarse) {
  std::vector<int> image(static_cast<std::size_t>(fine.class_count), -1);
  for (std::size_t i = 0; i < fine.class_of.size(); ++i) {
    int f = fine.class_of[i], c = coarse.class_of[i];
    std::size_t fi = static_cast<std::size_t>(f);
    if (image[fi] < 0)
      image[fi] = c;
    else if (image[fi] != c)
      return false;
  }
  return true;
}

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

TEST_CASE("refinement ladder over the corpus", "[props]") {
  Limits lim;
  lim.work_cap = 200'000'000;
  for (const FinStructure& s : corpus(kDefaultSeed, lim)) {
    ArityContext ctx(s, lim);
    for (int k = 1; k <= 3; ++k) {
      const TuplePartition& orb = ctx.orbits(k);
      for (int n = 0; n <= 3; ++n) REQUIRE(refines(orb, ctx.subtypes(k, n)));
      for (int n = 0; n <= 2; ++n)
        REQUIRE(refines(ctx.subtypes(k, n + 1), ctx.subtypes(k, n)));
    }
  }
}

TEST_CASE("group order divides the symmetric group order", "[props]") {
  Limits lim;
  lim.work_cap = 200'000'000;
  for (const FinStructure& s : corpus(kDefaultSeed, lim)) {
    AutGroup g = automorphism_group(s, lim);
    REQUIRE(factorial(s.size()) % g.order == 0);
  }
}

TEST_CASE("arity is invariant under relabeling and renaming", "[props]") {
  Limits lim;
  lim.work_cap = 100'000'000;
  FinStructure s = circular_order(5, lim);
  ArityContext base(s, lim);
  int want = structure_arity(base).value;

  Perm p{2, 4, 0, 3, 1};
  StructureData d = s.data();
  for (RelData& rel : d.rels)
    for (std::vector<int>& t : rel.tuples)
      for (int& v : t) v = p[static_cast<std::size_t>(v)];
  d.rels[0].name = "Other";
  ArityContext moved(FinStructure::from_data(d, lim), lim);
  REQUIRE(structure_arity(moved).value == want);
}

TEST_CASE("witness arity bounds the structure arity", "[props]") {
  Limits lim;
  lim.work_cap = 200'000'000;
  for (int m : {4, 5}) {
    FinStructure s = circular_order(m, lim);
    ArityContext ctx(s, lim);
    WitnessReport rep = witness_degree_search(ctx, 1, 2);
    REQUIRE(rep.found);
    if (rep.degree.m > 0) {
      int r = 0;
      for (const DefSet& w : rep.witnesses) r = std::max(r, w.arity());
      int k = std::max(1, r);
      // almost 1-ary with witnesses of arity r forces plain k-arity
      REQUIRE(structure_arity(ctx).value <= k);
    }
  }
}

TEST_CASE("degree search outputs are admissible across the corpus", "[props]") {
  Limits lim;
  lim.work_cap = 200'000'000;
  for (const FinStructure& s : corpus(kDefaultSeed, lim)) {
    if (s.size() > 4) continue;
    ArityContext ctx(s, lim);
    WitnessReport rep = witness_degree_search(ctx, 1, 2, 3);
    if (!rep.found) continue;
    bool admissible =
        (rep.degree == DegreePair{0, 0}) || (rep.degree.m >= 1 && rep.degree.r > 1);
    REQUIRE(admissible);
    REQUIRE(rep.names.size() == static_cast<std::size_t>(rep.degree.m));
  }
}

TEST_CASE("corpus generation is deterministic", "[props]") {
  Limits lim;
  std::vector<FinStructure> a = corpus(kDefaultSeed, lim);
  std::vector<FinStructure> b = corpus(kDefaultSeed, lim);
  REQUIRE(a.size() == 40);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i] == b[i]);
  FinStructure r1 = random_structure(4, 5, lim);
  FinStructure r2 = random_structure(4, 6, lim);
  REQUIRE(!(r1 == r2));
}
