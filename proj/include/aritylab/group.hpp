#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "aritylab/core.hpp"
#include "aritylab/perm.hpp"
#include "aritylab/tuples.hpp"

namespace aritylab {

struct AutGroup {
  int degree = 0;
  std::vector<Perm> generators;  // identity omitted unless group is trivial
  std::uint64_t order = 1;
};

// Orbit of a point with transversal: reps[x] maps base to x for x in orbit.
inline std::vector<int> point_orbit(int base, const std::vector<Perm>& gens,
                                    std::vector<Perm>* reps = nullptr) {
  std::size_t m = gens.empty() ? static_cast<std::size_t>(base) + 1 : gens[0].size();
  std::vector<char> seen(m, 0);
  std::vector<Perm> trans(m);
  std::vector<int> orbit{base};
  seen[static_cast<std::size_t>(base)] = 1;
  trans[static_cast<std::size_t>(base)] = perm_identity(static_cast<int>(m));
  for (std::size_t q = 0; q < orbit.size(); ++q) {
    int x = orbit[q];
    for (const Perm& g : gens) {
      int y = g[static_cast<std::size_t>(x)];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        trans[static_cast<std::size_t>(y)] = perm_compose(g, trans[static_cast<std::size_t>(x)]);
        orbit.push_back(y);
      }
    }
  }
  if (reps) *reps = std::move(trans);
  return orbit;
}

// Schreier-Sims style order computation, adequate at small degree.
inline std::uint64_t group_order(std::vector<Perm> gens) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), perm_is_identity), gens.end());
  if (gens.empty()) return 1;
  std::size_t m = gens[0].size();
  int base = -1;
  for (std::size_t i = 0; i < m && base < 0; ++i)
    for (const Perm& g : gens)
      if (g[i] != static_cast<int>(i)) { base = static_cast<int>(i); break; }
  if (base < 0) return 1;
  std::vector<Perm> trans;
  std::vector<int> orbit = point_orbit(base, gens, &trans);
  std::set<Perm> schreier;
  for (int x : orbit) {
    const Perm& ux = trans[static_cast<std::size_t>(x)];
    for (const Perm& g : gens) {
      const Perm& ugx = trans[static_cast<std::size_t>(g[static_cast<std::size_t>(x)])];
      Perm s = perm_compose(perm_inverse(ugx), perm_compose(g, ux));
      if (!perm_is_identity(s)) schreier.insert(std::move(s));
    }
  }
  return static_cast<std::uint64_t>(orbit.size()) *
         group_order(std::vector<Perm>(schreier.begin(), schreier.end()));
}

// Full closure enumeration; only for groups known to be small.
inline std::vector<Perm> group_elements(const std::vector<Perm>& gens, int degree,
                                        std::uint64_t cap = 1u << 20) {
  std::set<Perm> elems;
  elems.insert(perm_identity(degree));
  std::vector<Perm> queue{perm_identity(degree)};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Perm cur = queue[q];
    for (const Perm& g : gens) {
      Perm nxt = perm_compose(g, cur);
      if (elems.insert(nxt).second) {
        if (elems.size() > cap) throw cap_error("group enumeration exceeds cap");
        queue.push_back(std::move(nxt));
      }
    }
  }
  return std::vector<Perm>(elems.begin(), elems.end());
}

// Does p map every relation of s onto itself?
inline bool perm_preserves(const FinStructure& s, const Perm& p) {
  for (int ri = 0; ri < s.rel_count(); ++ri) {
    int ar = s.signature()[static_cast<std::size_t>(ri)].arity;
    const std::vector<std::uint64_t>& enc = s.encoded(ri);
    std::vector<int> t(static_cast<std::size_t>(ar));
    for (std::uint64_t e : enc) {
      decode_tuple(e, s.size(), ar, t);
      for (auto& v : t) v = p[static_cast<std::size_t>(v)];
      if (!s.holds(ri, encode_tuple(t, s.size()))) return false;
    }
  }
  return true;
}

// Invariance of a definable set under the generated group.
inline bool defset_invariant(const DefSet& d, const std::vector<Perm>& gens) {
  for (const Perm& g : gens)
    for (const std::vector<int>& t : d.tuples())
      if (!d.contains(perm_apply(g, t))) return false;
  return true;
}

}  // namespace aritylab
