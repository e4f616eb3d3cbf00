#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "aritylab/core.hpp"
#include "aritylab/group.hpp"
#include "aritylab/limits.hpp"
#include "aritylab/orbits.hpp"
#include "aritylab/perm.hpp"
#include "aritylab/tuples.hpp"

namespace aritylab {

// Brute force reference path. Everything here trades speed for
// directness: full permutation filtering, full group application,
// explicit indicator bits. Kept free of the search machinery so the
// two paths can be compared against each other.

inline std::vector<Perm> naive_automorphisms(const FinStructure& s, const Limits& lim = {}) {
  int m = s.size();
  std::uint64_t fact = 1;
  for (int i = 2; i <= m; ++i) fact *= static_cast<std::uint64_t>(i);
  charge(fact * static_cast<std::uint64_t>(m), lim, "permutation sweep");
  std::vector<Perm> out;
  Perm p = perm_identity(m);
  do {
    if (perm_preserves(s, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Orbit partition by applying every group element to each tuple.
inline TuplePartition naive_orbit_partition(const std::vector<Perm>& autos, int m, int k,
                                            const Limits& lim = {}) {
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(m);
    if (total > lim.work_cap) throw cap_error("orbit table exceeds work cap");
  }
  charge(total * autos.size(), lim, "full group application");
  TuplePartition part;
  part.k = k;
  part.m = m;
  part.class_of.assign(total, -1);
  std::vector<int> t(static_cast<std::size_t>(k));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (part.class_of[idx] >= 0) continue;
    int cls = part.class_count++;
    part.reps.push_back(idx);
    decode_tuple(idx, m, k, t);
    for (const Perm& a : autos)
      part.class_of[encode_tuple(perm_apply(a, t), m)] = cls;
    part.class_of[idx] = cls;
  }
  return part;
}

// Classification of k-tuples by indicator bits: one bit per pair of a
// position map mu in [k]^n and a single n-orbit, true when the pulled
// back subtuple lands in that orbit, plus coordinate equality bits when
// n is exactly 1. Class ids follow first appearance in index order.
inline TuplePartition naive_subtype_partition(const std::vector<Perm>& autos, int m, int k, int n,
                                              const Limits& lim = {}) {
  if (n >= k) return naive_orbit_partition(autos, m, k, lim);
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(m);
    if (total > lim.work_cap) throw cap_error("subtype table exceeds work cap");
  }
  TuplePartition sub = naive_orbit_partition(autos, m, n, lim);
  std::uint64_t maps = 1;
  for (int i = 0; i < n; ++i) maps *= static_cast<std::uint64_t>(k);
  charge(total * maps * static_cast<std::uint64_t>(sub.class_count), lim, "indicator bits");

  TuplePartition part;
  part.k = k;
  part.m = m;
  part.class_of.assign(total, -1);
  std::map<std::vector<char>, int> ids;
  std::vector<int> t(static_cast<std::size_t>(k));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_tuple(idx, m, k, t);
    std::vector<char> bits;
    std::vector<int> mu(static_cast<std::size_t>(n), 0);
    for (std::uint64_t mi = 0; mi < maps; ++mi) {
      std::uint64_t enc = 0;
      for (int pos : mu)
        enc = enc * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(t[static_cast<std::size_t>(pos)]);
      for (int cls = 0; cls < sub.class_count; ++cls)
        bits.push_back(sub.class_of[enc] == cls);
      next_tuple(mu, k);
    }
    if (n == 1)
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          bits.push_back(t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)]);
    auto [it, fresh] = ids.emplace(std::move(bits), part.class_count);
    if (fresh) {
      part.reps.push_back(idx);
      ++part.class_count;
    }
    part.class_of[idx] = it->second;
  }
  return part;
}

inline bool naive_is_n_ary(const std::vector<Perm>& autos, int m, const DefSet& r, int n,
                           const Limits& lim = {}) {
  for (const Perm& a : autos)
    for (const std::vector<int>& t : r.tuples())
      if (!r.contains(perm_apply(a, t)))
        throw validation_error("relation is not invariant");
  TuplePartition part = naive_subtype_partition(autos, m, r.arity(), n, lim);
  charge(pow_u64(static_cast<std::uint64_t>(m), r.arity()), lim, "relation mask");
  std::vector<char> mask = r.mask(m);
  std::vector<char> saw_in(static_cast<std::size_t>(part.class_count), 0);
  std::vector<char> saw_out(static_cast<std::size_t>(part.class_count), 0);
  for (std::uint64_t idx = 0; idx < mask.size(); ++idx) {
    std::size_t cls = static_cast<std::size_t>(part.class_of[idx]);
    (mask[idx] ? saw_in : saw_out)[cls] = 1;
  }
  for (int c = 0; c < part.class_count; ++c)
    if (saw_in[static_cast<std::size_t>(c)] && saw_out[static_cast<std::size_t>(c)]) return false;
  return true;
}

inline bool naive_is_n_ary(const FinStructure& s, const DefSet& r, int n, const Limits& lim = {}) {
  return naive_is_n_ary(naive_automorphisms(s, lim), s.size(), r, n, lim);
}

inline int naive_relation_arity(const std::vector<Perm>& autos, int m, const DefSet& r,
                                const Limits& lim = {}) {
  for (int n = 0; n <= r.arity(); ++n)
    if (naive_is_n_ary(autos, m, r, n, lim)) return n;
  throw error("arity scan fell through");
}

// Smallest n making every invariant relation of arity up to k_max an
// n-ary one. The indicator partition always coarsens the orbit
// partition, so agreement is just equality of class counts.
inline int naive_structure_arity(const FinStructure& s, int k_max, const Limits& lim = {}) {
  if (k_max <= 0) k_max = s.size();
  std::vector<Perm> autos = naive_automorphisms(s, lim);
  int best = 0;
  for (int k = 1; k <= k_max; ++k) {
    TuplePartition orbits = naive_orbit_partition(autos, s.size(), k, lim);
    for (int n = 0; n <= k; ++n) {
      if (naive_subtype_partition(autos, s.size(), k, n, lim).class_count == orbits.class_count) {
        best = std::max(best, n);
        break;
      }
    }
  }
  return best;
}

}  // namespace aritylab
