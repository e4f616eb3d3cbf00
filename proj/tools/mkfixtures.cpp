// regenerates the frozen cross-check tables under fixtures/
// usage: mkfixtures [outdir]

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "aritylab/aritylab.hpp"

namespace al = aritylab;

namespace {

void write_aut_orders(const std::string& dir) {
  al::Limits lim;
  lim.work_cap = 200'000'000;
  std::ofstream out(dir + "/aut_orders.txt");
  out << "# structure  naive |Aut|\n";
  for (const al::FinStructure& s : al::corpus(al::kDefaultSeed, lim)) {
    auto autos = al::naive_automorphisms(s, lim);
    out << s.name() << " " << autos.size() << "\n";
  }
  for (int m = 3; m <= 7; ++m) {
    al::FinStructure s = al::circular_order(m, lim);
    auto autos = al::naive_automorphisms(s, lim);
    out << s.name() << " " << autos.size() << "\n";
  }
}

void write_spherical_axioms(const std::string& dir) {
  al::Limits lim;
  lim.work_cap = 500'000'000;
  std::ofstream out(dir + "/spherical_axioms.txt");
  out << "# structure  variant  axiom  full  distinct\n";
  const al::ChainVariant variants[] = {al::ChainVariant::cyclic, al::ChainVariant::literal,
                                       al::ChainVariant::allwindows};
  for (int n : {4, 5}) {
    for (int m = 3; m <= 7; ++m) {
      for (al::ChainVariant v : variants) {
        al::FinStructure s = al::spherical_chain(m, n, v, lim);
        std::string rel = "K" + std::to_string(n);
        for (const al::AxiomVerdict& av : al::check_axioms(s, rel, lim)) {
          out << "sp" << m << "_" << n << " " << al::variant_name(v) << " " << av.axiom << " "
              << (av.holds_full ? "yes" : "no") << " " << (av.holds_distinct ? "yes" : "no")
              << "\n";
        }
      }
    }
  }
}

void write_naive_nary(const std::string& dir) {
  al::Limits lim;
  lim.work_cap = 200'000'000;
  std::ofstream out(dir + "/naive_nary.txt");
  out << "# structure  relation  n  n-ary\n";
  for (const al::FinStructure& s : al::corpus(al::kDefaultSeed, lim)) {
    auto autos = al::naive_automorphisms(s, lim);
    for (int i = 0; i < s.rel_count(); ++i) {
      al::DefSet r = s.relation(i);
      for (int n = 0; n <= 3; ++n) {
        bool v = al::naive_is_n_ary(autos, s.size(), r, n, lim);
        out << s.name() << " " << s.symbol(i).name << " " << n << " " << (v ? "yes" : "no")
            << "\n";
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  try {
    write_aut_orders(dir);
    write_spherical_axioms(dir);
    write_naive_nary(dir);
  } catch (const std::exception& e) {
    std::cerr << "mkfixtures: " << e.what() << "\n";
    return 1;
  }
  std::cout << "fixtures written to " << dir << "\n";
  return 0;
}
