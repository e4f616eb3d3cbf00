#include <catch2/catch_amalgamated.hpp>

#include "aritylab/aritylab.hpp"

using namespace aritylab;

TEST_CASE("parser handles precedence and associativity", "[formula]") {
  REQUIRE(to_string(parse_formula("a = b & c = d | e = f")) ==
          "a = b & c = d | e = f");
  REQUIRE(to_string(parse_formula("(a = b & c = d) | e = f")) ==
          "a = b & c = d | e = f");
  REQUIRE(to_string(parse_formula("a = b & (c = d | e = f)")) ==
          "a = b & (c = d | e = f)");
  REQUIRE(to_string(parse_formula("a = a -> b = b -> c = c")) ==
          "a = a -> b = b -> c = c");
  REQUIRE(to_string(parse_formula("(a = a -> b = b) -> c = c")) ==
          "(a = a -> b = b) -> c = c");
  REQUIRE(to_string(parse_formula("!a = b & c = d")) == "!a = b & c = d");
  REQUIRE(to_string(parse_formula("!(a = b & c = d)")) == "!(a = b & c = d)");
}

TEST_CASE("parser round trips through to_string", "[formula]") {
  const char* samples[] = {
      "R(x, y)",
      "forall x exists y (R(x, y))",
      "forall x (R(x, x) -> exists y (R(x, y) & !x = y))",
      "K3(x, y, z) <-> K3(y, z, x)",
      "x = y | !x = y",
  };
  for (const char* s : samples) {
    Formula f = parse_formula(s);
    REQUIRE(to_string(parse_formula(to_string(f))) == to_string(f));
  }
}

TEST_CASE("free variables come in first occurrence order", "[formula]") {
  Formula f = parse_formula("R(y, x) & exists z (R(z, w) | x = z)");
  REQUIRE(free_variables(f) == std::vector<std::string>{"y", "x", "w"});
  REQUIRE(free_variables(parse_formula("forall x (R(x, x))")).empty());
}

TEST_CASE("parse errors carry a position", "[formula]") {
  try {
    parse_formula("R(x, ");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    REQUIRE(std::string(e.what()).find("offset") != std::string::npos);
  }
  REQUIRE_THROWS_AS(parse_formula(""), parse_error);
  REQUIRE_THROWS_AS(parse_formula("R(x,y) R"), parse_error);
  REQUIRE_THROWS_AS(parse_formula("forall = x = y"), parse_error);
  REQUIRE_THROWS_AS(parse_formula("x ="), parse_error);
  REQUIRE_THROWS_AS(parse_formula("(x = y"), parse_error);
}

TEST_CASE("reserved words cannot name variables", "[formula]") {
  REQUIRE_THROWS_AS(parse_formula("forall forall x = x"), parse_error);
  REQUIRE_THROWS_AS(parse_formula("exists exists x = x"), parse_error);
}

TEST_CASE("comments and whitespace are skipped", "[formula]") {
  Formula f = parse_formula("R(x, y) # trailing words\n & x = y");
  REQUIRE(to_string(f) == "R(x, y) & x = y");
}

TEST_CASE("builder helpers agree with the parser", "[formula]") {
  Formula byhand = f_forall("x", f_implies(f_atom("R", {"x", "x"}),
                                           f_exists("y", f_eq("x", "y"))));
  Formula parsed = parse_formula("forall x (R(x, x) -> exists y (x = y))");
  REQUIRE(to_string(byhand) == to_string(parsed));
  Formula folded = f_fold(FKind::And, {f_eq("a", "a"), f_eq("b", "b"), f_eq("c", "c")});
  REQUIRE(to_string(folded) == "a = a & b = b & c = c");
}
