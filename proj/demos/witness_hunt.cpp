// degree search walkthrough: for a couple of structures, find the least
// witness degree that makes them almost 1-ary

#include <iostream>

#include "aritylab/aritylab.hpp"

namespace al = aritylab;

static void hunt(const al::FinStructure& s, int rmax) {
  al::Limits lim;
  lim.work_cap = 100'000'000;
  al::ArityContext ctx(s, lim);
  al::WitnessReport rep = al::witness_degree_search(ctx, 1, rmax);
  std::cout << s.name() << " (ar = " << al::structure_arity(ctx).value << "): ";
  if (!rep.found) {
    std::cout << "no witness set with arity <= " << rmax << "\n";
    return;
  }
  std::cout << "degree (" << rep.degree.m << "," << rep.degree.r << ")"
            << (rep.optimal ? "" : " [greedy]") << " via";
  for (const std::string& w : rep.names) std::cout << " " << w;
  std::cout << "\n";
}

int main() {
  al::Limits lim;
  hunt(al::pure_set(5, lim), 3);
  hunt(al::linear_order(5, lim), 3);
  hunt(al::circular_order(5, lim), 2);
  hunt(al::spherical_chain(5, 4, al::ChainVariant::cyclic, lim), 3);
  return 0;
}
