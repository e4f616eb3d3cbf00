#include <catch2/catch_amalgamated.hpp>

#include "aritylab/aritylab.hpp"

using namespace aritylab;

TEST_CASE("disjoint union of two copies of the two chain", "[algebra]") {
  Limits lim;
  FinStructure lo = linear_order(2, lim);
  FinStructure u = disjoint_union(lo, lo, lim);
  REQUIRE(serialize_structure(u) ==
          "structure lo2_u_lo2\n"
          "size 4\n"
          "rel K2@1/2\n"
          "( 0 , 1 )\n"
          "rel K2@2/2\n"
          "( 2 , 3 )\n"
          "rel P1/1\n"
          "( 0 )\n"
          "( 1 )\n"
          "rel P2/1\n"
          "( 2 )\n"
          "( 3 )\n");
}

TEST_CASE("union keeps distinct names and shifts the second part", "[algebra]") {
  Limits lim;
  FinStructure u = disjoint_union(linear_order(3, lim), pure_set(2, lim), lim);
  REQUIRE(u.size() == 5);
  REQUIRE(u.rel_index("K2"));
  REQUIRE(u.relation(*u.rel_index("K2")) == DefSet(2, {{0, 1}, {0, 2}, {1, 2}}));
  REQUIRE(u.relation(*u.rel_index("P1")) == DefSet(1, {{0}, {1}, {2}}));
  REQUIRE(u.relation(*u.rel_index("P2")) == DefSet(1, {{3}, {4}}));
}

TEST_CASE("part predicates dodge a name collision", "[algebra]") {
  Limits lim;
  StructureData d;
  d.name = "clash";
  d.size = 2;
  d.rels.push_back({"P1", 1, {{0}}});
  FinStructure a = FinStructure::from_data(d, lim);
  FinStructure u = disjoint_union(a, pure_set(2, lim), lim);
  REQUIRE(u.rel_index("P1"));
  REQUIRE(u.relation(*u.rel_index("P1")) == DefSet(1, {{0}}));
  REQUIRE(u.rel_index("P1@u"));
  REQUIRE(u.relation(*u.rel_index("P1@u")) == DefSet(1, {{0}, {1}}));
  REQUIRE(u.rel_index("P2"));
}

TEST_CASE("composition universe and class relation", "[algebra]") {
  Limits lim;
  FinStructure c = composition(pure_set(2, lim), pure_set(2, lim), lim);
  REQUIRE(c.size() == 4);
  REQUIRE(c.rel_count() == 1);
  REQUIRE(c.relation(*c.rel_index("E")) ==
          DefSet(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}));
}

TEST_CASE("first factor relations constrain first coordinates only", "[algebra]") {
  Limits lim;
  FinStructure c = composition(linear_order(2, lim), pure_set(2, lim), lim);
  REQUIRE(c.relation(*c.rel_index("K2")) == DefSet(2, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST_CASE("second factor relations live inside single classes", "[algebra]") {
  Limits lim;
  FinStructure c = composition(pure_set(2, lim), linear_order(2, lim), lim);
  REQUIRE(c.relation(*c.rel_index("K2")) == DefSet(2, {{0, 1}, {2, 3}}));
}

TEST_CASE("projection returns the first factor relation", "[algebra]") {
  Limits lim;
  FinStructure a = circular_order(3, lim);
  FinStructure c = composition(a, pure_set(2, lim), lim);
  DefSet lifted = c.relation(*c.rel_index("K3"));
  std::vector<std::vector<int>> proj;
  for (const std::vector<int>& t : lifted.tuples()) {
    std::vector<int> p(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) p[i] = t[i] / 2;
    proj.push_back(std::move(p));
  }
  REQUIRE(DefSet(3, std::move(proj)) == a.relation(0));
}

TEST_CASE("shared names merge by disjunction", "[algebra]") {
  Limits lim;
  StructureData da;
  da.name = "m1";
  da.size = 2;
  da.rels.push_back({"S", 1, {{0}}});
  StructureData db;
  db.name = "m2";
  db.size = 2;
  db.rels.push_back({"S", 1, {{1}}});
  FinStructure c =
      composition(FinStructure::from_data(da, lim), FinStructure::from_data(db, lim), lim);
  REQUIRE(c.relation(*c.rel_index("S")) == DefSet(1, {{0}, {1}, {3}}));

  db.rels[0].arity = 2;
  db.rels[0].tuples = {{0, 1}};
  REQUIRE_THROWS_AS(
      composition(FinStructure::from_data(da, lim), FinStructure::from_data(db, lim), lim),
      validation_error);
}

TEST_CASE("an input relation named E steps aside", "[algebra]") {
  Limits lim;
  StructureData d;
  d.name = "hasE";
  d.size = 2;
  d.rels.push_back({"E", 1, {{0}}});
  FinStructure c = composition(FinStructure::from_data(d, lim), pure_set(2, lim), lim);
  REQUIRE(c.rel_index("E@1"));
  REQUIRE(c.symbol(*c.rel_index("E")).arity == 2);
  REQUIRE(c.relation(*c.rel_index("E@1")) == DefSet(1, {{0}, {1}}));
}

TEST_CASE("class relation is an equivalence with the right shape", "[algebra]") {
  Limits lim;
  FinStructure c = composition(linear_order(3, lim), pure_set(2, lim), lim);
  DefSet e = c.relation(*c.rel_index("E"));
  int sz = c.size();
  for (int x = 0; x < sz; ++x) REQUIRE(e.contains({x, x}));
  for (const std::vector<int>& t : e.tuples()) REQUIRE(e.contains({t[1], t[0]}));
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y)
      for (int z = 0; z < sz; ++z)
        if (e.contains({x, y}) && e.contains({y, z})) REQUIRE(e.contains({x, z}));
  REQUIRE(e.size() == 3u * 4u);
}

TEST_CASE("singleton compositions keep the arity of the other factor", "[algebra]") {
  Limits lim;
  lim.work_cap = 100'000'000;
  FinStructure co = circular_order(4, lim);
  FinStructure one = pure_set(1, lim);
  ArityContext left(composition(one, co, lim), lim);
  REQUIRE(structure_arity(left).value == 2);
  ArityContext right(composition(co, one, lim), lim);
  REQUIRE(structure_arity(right).value == 2);
}

TEST_CASE("union witness transport works in both directions", "[algebra]") {
  Limits lim;
  lim.work_cap = 200'000'000;
  FinStructure a = circular_order(4, lim);
  FinStructure b = linear_order(3, lim);
  ArityContext actx(a, lim);
  WitnessReport wa = witness_degree_search(actx, 1, 2);
  REQUIRE(wa.found);

  FinStructure u = disjoint_union(a, b, lim);
  ArityContext uctx(u, lim);
  REQUIRE(!is_almost_n_ary(uctx, 1, {}, 4));

  std::vector<DefSet> lifted;
  for (const DefSet& w : wa.witnesses) lifted.push_back(union_lift_first(w));
  REQUIRE(is_almost_n_ary(uctx, 1, lifted, 4));

  std::vector<DefSet> back;
  for (const DefSet& w : lifted) back.push_back(union_section(w, 0, a.size()));
  REQUIRE(is_almost_n_ary(actx, 1, back));
}

TEST_CASE("composition transport needs the class relation at level one", "[algebra]") {
  Limits lim;
  lim.work_cap = 200'000'000;
  FinStructure b = circular_order(4, lim);
  ArityContext bctx(b, lim);
  WitnessReport wb = witness_degree_search(bctx, 1, 2);
  REQUIRE(wb.found);

  FinStructure c = composition(pure_set(2, lim), b, lim);
  ArityContext cctx(c, lim);
  std::vector<DefSet> lifted;
  for (const DefSet& w : wb.witnesses) lifted.push_back(comp_lift_second(w, 2, b.size()));
  REQUIRE(!is_almost_n_ary(cctx, 1, lifted, 3));
  lifted.push_back(c.relation(*c.rel_index("E")));
  REQUIRE(is_almost_n_ary(cctx, 1, lifted, 3));

  // and back down: the section of the lifted witness works on the factor
  std::vector<DefSet> back{comp_section_second(lifted[0], b.size())};
  REQUIRE(is_almost_n_ary(bctx, 1, back));
}
