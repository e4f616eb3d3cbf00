// builds circular orders of a few sizes, prints |Aut|, arity, and axiom verdicts

#include <iostream>

#include "aritylab/aritylab.hpp"

namespace al = aritylab;

int main() {
  al::Limits lim;
  for (int m = 3; m <= 6; ++m) {
    al::FinStructure s = al::circular_order(m, lim);
    al::ArityContext ctx(s, lim);
    std::cout << s.name() << ": |Aut| = " << ctx.group().order
              << ", ar = " << al::structure_arity(ctx).value << "\n";
    for (const al::AxiomVerdict& v : al::check_axioms(s, "K3", lim))
      std::cout << "  " << v.axiom << " full=" << (v.holds_full ? "yes" : "no")
                << " distinct=" << (v.holds_distinct ? "yes" : "no") << "\n";
    al::DensityVerdict dv = al::check_density(s, "K3", lim);
    std::cout << "  density " << (dv.holds ? "holds" : "fails") << "\n";
  }
  return 0;
}
