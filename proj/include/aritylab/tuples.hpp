#pragma once

#include <cstdint>
#include <vector>

namespace aritylab {

// k-tuples over {0..m-1} are addressed by their big-endian mixed-radix rank,
// so index order equals lexicographic tuple order.
inline std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline std::uint64_t encode_tuple(const std::vector<int>& t, int m) {
  std::uint64_t r = 0;
  for (int v : t) r = r * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(v);
  return r;
}

inline void decode_tuple(std::uint64_t idx, int m, int k, std::vector<int>& out) {
  out.resize(k);
  for (int i = k - 1; i >= 0; --i) {
    out[i] = static_cast<int>(idx % m);
    idx /= m;
  }
}

inline std::vector<int> decode_tuple(std::uint64_t idx, int m, int k) {
  std::vector<int> t;
  decode_tuple(idx, m, k, t);
  return t;
}

// steps t through {0..m-1}^k in lexicographic order; returns false after the last tuple
inline bool next_tuple(std::vector<int>& t, int m) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < m) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace aritylab
