#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aritylab/core.hpp"
#include "aritylab/factory.hpp"
#include "aritylab/limits.hpp"
#include "aritylab/tuples.hpp"

namespace aritylab {

inline constexpr std::uint64_t kDefaultSeed = 1729;

// One random structure: a binary relation drawn at density 1/2 and a
// ternary one at density 1/4, both over the same universe. mt19937_64
// is pinned by the standard, so the draw is reproducible everywhere.
inline FinStructure random_structure(int m, std::uint64_t seed, const Limits& lim = {}) {
  std::mt19937_64 rng(seed);
  StructureData d;
  d.name = "rnd" + std::to_string(m) + "_s" + std::to_string(seed % 1000003);
  d.size = m;
  RelData r2;
  r2.name = "R2";
  r2.arity = 2;
  std::vector<int> t2(2, 0);
  do {
    if (rng() & 1) r2.tuples.push_back(t2);
  } while (next_tuple(t2, m));
  RelData r3;
  r3.name = "R3";
  r3.arity = 3;
  std::vector<int> t3(3, 0);
  do {
    if ((rng() & 3) == 0) r3.tuples.push_back(t3);
  } while (next_tuple(t3, m));
  d.rels.push_back(std::move(r2));
  d.rels.push_back(std::move(r3));
  return FinStructure::from_data(d, lim);
}

// Every builder at sizes 2..5 plus five seeded random structures per
// size: forty structures, fixed order, fully determined by the seed.
inline std::vector<FinStructure> corpus(std::uint64_t seed = kDefaultSeed,
                                        const Limits& lim = {}) {
  std::vector<FinStructure> out;
  for (int m = 2; m <= 5; ++m) {
    out.push_back(pure_set(m, lim));
    out.push_back(linear_order(m, lim));
    out.push_back(circular_order(m, lim));
    out.push_back(spherical_chain(m, 4, ChainVariant::cyclic, lim));
    out.push_back(spherical_chain(m, 5, ChainVariant::cyclic, lim));
  }
  for (int m = 2; m <= 5; ++m)
    for (int i = 0; i < 5; ++i)
      out.push_back(random_structure(
          m, seed * 1000003ull + static_cast<std::uint64_t>(m) * 101ull +
                 static_cast<std::uint64_t>(i),
          lim));
  return out;
}

}  // namespace aritylab
