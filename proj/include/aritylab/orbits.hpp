#pragma once

#include <cstdint>
#include <vector>

#include "aritylab/group.hpp"
#include "aritylab/limits.hpp"
#include "aritylab/perm.hpp"
#include "aritylab/tuples.hpp"

namespace aritylab {

// Partition of universe^k into group orbits. Classes are numbered in
// discovery order while scanning encoded indices upward, so class ids
// sort by each class's lexicographically least tuple.
struct TuplePartition {
  int k = 0;
  int m = 0;
  int class_count = 0;
  std::vector<int> class_of;           // indexed by encoded tuple
  std::vector<std::uint64_t> reps;     // least encoded tuple per class

  std::vector<int> rep_tuple(int cls) const {
    return decode_tuple(reps[static_cast<std::size_t>(cls)], m, k);
  }
};

inline TuplePartition orbit_partition(const AutGroup& g, int k, const Limits& lim = {}) {
  if (k < 0) throw validation_error("tuple length must be nonnegative");
  int m = g.degree;
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(m);
    if (total > lim.work_cap) throw cap_error("orbit table exceeds work cap");
  }
  charge(total * (g.generators.size() + 1), lim, "orbit expansion");
  TuplePartition part;
  part.k = k;
  part.m = m;
  part.class_of.assign(total, -1);
  std::vector<std::uint64_t> queue;
  std::vector<int> t(static_cast<std::size_t>(k));
  for (std::uint64_t start = 0; start < total; ++start) {
    if (part.class_of[start] >= 0) continue;
    int cls = part.class_count++;
    part.reps.push_back(start);
    part.class_of[start] = cls;
    queue.assign(1, start);
    while (!queue.empty()) {
      std::uint64_t cur = queue.back();
      queue.pop_back();
      decode_tuple(cur, m, k, t);
      for (const Perm& p : g.generators) {
        std::uint64_t img = 0;
        for (int v : t)
          img = img * static_cast<std::uint64_t>(m) +
                static_cast<std::uint64_t>(p[static_cast<std::size_t>(v)]);
        if (part.class_of[img] < 0) {
          part.class_of[img] = cls;
          queue.push_back(img);
        }
      }
    }
  }
  return part;
}

}  // namespace aritylab
