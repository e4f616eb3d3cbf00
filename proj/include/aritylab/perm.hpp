#pragma once

#include <numeric>
#include <vector>

#include "aritylab/limits.hpp"

namespace aritylab {

// A permutation of {0..m-1} stored as its image vector.
using Perm = std::vector<int>;

inline Perm perm_identity(int m) {
  Perm p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// (a * b)(x) = a(b(x)), b applied first.
inline Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw error("permutation size mismatch");
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

inline Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

inline std::vector<int> perm_apply(const Perm& p, const std::vector<int>& tuple) {
  std::vector<int> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i)
    out[i] = p[static_cast<std::size_t>(tuple[i])];
  return out;
}

inline bool perm_valid(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

}  // namespace aritylab
