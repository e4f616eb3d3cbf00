// prints the canonical text of a disjoint union and a composition,
// with the arities of the parts and the whole

#include <iostream>

#include "aritylab/aritylab.hpp"

namespace al = aritylab;

static int ar(const al::FinStructure& s) {
  al::Limits lim;
  lim.work_cap = 100'000'000;
  al::ArityContext ctx(s, lim);
  return al::structure_arity(ctx).value;
}

int main() {
  al::Limits lim;
  al::FinStructure a = al::linear_order(2, lim);
  al::FinStructure u = al::disjoint_union(a, a, lim);
  std::cout << al::serialize_structure(u);
  std::cout << "# ar parts " << ar(a) << "," << ar(a) << " whole " << ar(u) << "\n\n";

  al::FinStructure p = al::pure_set(2, lim);
  al::FinStructure c = al::composition(p, p, lim);
  std::cout << al::serialize_structure(c);
  std::cout << "# ar parts " << ar(p) << "," << ar(p) << " whole " << ar(c) << "\n";
  return 0;
}
