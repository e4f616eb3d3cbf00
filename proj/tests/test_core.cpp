#include <catch2/catch_amalgamated.hpp>

#include "aritylab/aritylab.hpp"

using namespace aritylab;

TEST_CASE("DefSet sorts and deduplicates", "[core]") {
  DefSet d(2, {{1, 0}, {0, 1}, {1, 0}});
  REQUIRE(d.size() == 2);
  REQUIRE(d.tuples()[0] == std::vector<int>{0, 1});
  REQUIRE(d.tuples()[1] == std::vector<int>{1, 0});
  REQUIRE(d.contains({1, 0}));
  REQUIRE(!d.contains({1, 1}));
  REQUIRE(d.max_entry() == 1);
}

TEST_CASE("DefSet rejects ragged tuples", "[core]") {
  REQUIRE_THROWS_AS(DefSet(2, {{0, 1, 2}}), validation_error);
  REQUIRE_THROWS_AS(DefSet(-1, {}), validation_error);
}

TEST_CASE("DefSet nullary truth values", "[core]") {
  REQUIRE(DefSet::truth(true).size() == 1);
  REQUIRE(DefSet::truth(false).empty());
  REQUIRE(DefSet::truth(true).arity() == 0);
}

TEST_CASE("DefSet mask round trip", "[core]") {
  DefSet d(2, {{0, 2}, {2, 1}});
  std::vector<char> m = d.mask(3);
  REQUIRE(m.size() == 9);
  REQUIRE(DefSet::from_mask(2, 3, m) == d);
  REQUIRE(!d.is_full(3));
  DefSet full(1, {{0}, {1}, {2}});
  REQUIRE(full.is_full(3));
}

TEST_CASE("relation names are vetted", "[core]") {
  REQUIRE(valid_rel_name("K3"));
  REQUIRE(valid_rel_name("_x"));
  REQUIRE(valid_rel_name("E@1"));
  REQUIRE(!valid_rel_name(""));
  REQUIRE(!valid_rel_name("3K"));
  REQUIRE(!valid_rel_name("@x"));
  REQUIRE(!valid_rel_name("a b"));
}

TEST_CASE("validate_structure flags each problem in a bad description", "[core]") {
  StructureData d;
  d.name = "bad";
  d.size = 2;
  d.rels.push_back({"R", 2, {{0, 1}, {0, 1}}});
  d.rels.push_back({"R", 1, {{0}}});
  d.rels.push_back({"S", 1, {{5}}});
  ValidationReport r = validate_structure(d);
  REQUIRE(!r.ok);
  REQUIRE(r.issues.size() >= 3);
  REQUIRE_THROWS_AS(FinStructure::from_data(d), validation_error);
}

TEST_CASE("FinStructure accessors", "[core]") {
  StructureData d;
  d.name = "s";
  d.size = 3;
  d.rels.push_back({"R", 2, {{0, 1}, {1, 2}}});
  FinStructure s = FinStructure::from_data(d);
  REQUIRE(s.name() == "s");
  REQUIRE(s.size() == 3);
  REQUIRE(s.rel_count() == 1);
  REQUIRE(s.symbol(0).name == "R");
  REQUIRE(s.rel_index("R") == 0);
  REQUIRE(!s.rel_index("Q"));
  REQUIRE(s.relation(0) == DefSet(2, {{0, 1}, {1, 2}}));
  REQUIRE(s.holds(0, encode_tuple({0, 1}, 3)));
  REQUIRE(!s.holds(0, encode_tuple({1, 0}, 3)));
}

TEST_CASE("expand_with adds a relation and keeps the rest", "[core]") {
  Limits lim;
  FinStructure s = linear_order(3, lim);
  FinStructure e = s.expand_with("Top", DefSet(1, {{2}}), lim);
  REQUIRE(e.rel_count() == 2);
  REQUIRE(e.relation(*e.rel_index("Top")) == DefSet(1, {{2}}));
  REQUIRE(e.relation(*e.rel_index("K2")) == s.relation(0));
  REQUIRE_THROWS_AS(s.expand_with("K2", DefSet(1, {{0}}), lim), validation_error);
  REQUIRE_THROWS_AS(s.expand_with("X", DefSet(0, {}), lim), validation_error);
}

TEST_CASE("restrict_signature and renamed", "[core]") {
  Limits lim;
  FinStructure s = linear_order(3, lim).expand_with("Top", DefSet(1, {{2}}), lim);
  FinStructure r = s.restrict_signature({"K2"}, lim);
  REQUIRE(r.rel_count() == 1);
  REQUIRE(r.rel_index("K2"));
  REQUIRE(!r.rel_index("Top"));
  REQUIRE_THROWS_AS(s.restrict_signature({"Nope"}, lim), validation_error);
  REQUIRE(s.renamed("other").name() == "other");
}

TEST_CASE("tuple encoding is big endian lexicographic", "[core]") {
  REQUIRE(encode_tuple({0, 0}, 5) == 0);
  REQUIRE(encode_tuple({0, 1}, 5) == 1);
  REQUIRE(encode_tuple({1, 0}, 5) == 5);
  REQUIRE(encode_tuple({2, 3, 4}, 5) == 2 * 25 + 3 * 5 + 4);
  std::vector<int> t(3);
  decode_tuple(encode_tuple({2, 3, 4}, 5), 5, 3, t);
  REQUIRE(t == std::vector<int>{2, 3, 4});
  std::vector<int> odo{0, 0};
  std::vector<std::vector<int>> seen;
  do seen.push_back(odo); while (next_tuple(odo, 2));
  REQUIRE(seen == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}
