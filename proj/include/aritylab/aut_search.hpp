#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "aritylab/core.hpp"
#include "aritylab/group.hpp"
#include "aritylab/limits.hpp"
#include "aritylab/perm.hpp"
#include "aritylab/tuples.hpp"

namespace aritylab {
namespace detail {

// Backtracking automorphism finder. Vertices are pre-colored by an
// iterated refinement that is invariant under every automorphism, so
// restricting candidate images to equal colors never loses solutions.
class AutSearcher {
 public:
  AutSearcher(const FinStructure& s, const Limits& lim) : s_(s), lim_(lim), m_(s.size()) {
    load_tuples();
    refine_colors();
  }

  const std::vector<int>& colors() const { return color_; }

  // First automorphism fixing 0..fix-1 pointwise and sending fix to target,
  // or nothing if no such automorphism exists. Exhaustive search.
  std::optional<Perm> complete(int fix, int target) {
    if (color_[static_cast<std::size_t>(fix)] != color_[static_cast<std::size_t>(target)])
      return std::nullopt;
    p_.assign(static_cast<std::size_t>(m_), -1);
    used_.assign(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < fix; ++i)
      if (!assign(i, i)) throw error("identity prefix rejected");
    if (!assign(fix, target)) return std::nullopt;
    if (!dfs(0)) return std::nullopt;
    return Perm(p_.begin(), p_.end());
  }

 private:
  const FinStructure& s_;
  const Limits& lim_;
  int m_;
  std::vector<std::vector<std::vector<int>>> rel_tuples_;
  std::vector<std::vector<std::pair<int, int>>> incidence_;  // vertex -> (rel, tuple)
  std::vector<int> color_;
  std::vector<int> p_;
  std::vector<char> used_;
  std::uint64_t nodes_ = 0;

  void load_tuples() {
    rel_tuples_.resize(static_cast<std::size_t>(s_.rel_count()));
    incidence_.resize(static_cast<std::size_t>(m_));
    for (int ri = 0; ri < s_.rel_count(); ++ri) {
      int ar = s_.signature()[static_cast<std::size_t>(ri)].arity;
      for (std::uint64_t e : s_.encoded(ri)) {
        std::vector<int> t(static_cast<std::size_t>(ar));
        decode_tuple(e, m_, ar, t);
        int ti = static_cast<int>(rel_tuples_[static_cast<std::size_t>(ri)].size());
        std::vector<char> seen(static_cast<std::size_t>(m_), 0);
        for (int v : t) {
          if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            incidence_[static_cast<std::size_t>(v)].push_back({ri, ti});
          }
        }
        rel_tuples_[static_cast<std::size_t>(ri)].push_back(std::move(t));
      }
    }
  }

  void refine_colors() {
    color_.assign(static_cast<std::size_t>(m_), 0);
    int count = 1;
    while (true) {
      std::map<std::vector<std::uint64_t>, int> ids;
      std::vector<std::vector<std::uint64_t>> keys(static_cast<std::size_t>(m_));
      for (int v = 0; v < m_; ++v) keys[static_cast<std::size_t>(v)] = key_of(v);
      for (const auto& k : keys) ids.emplace(k, 0);
      int next = 0;
      for (auto& kv : ids) kv.second = next++;
      for (int v = 0; v < m_; ++v)
        color_[static_cast<std::size_t>(v)] = ids[keys[static_cast<std::size_t>(v)]];
      if (next == count) break;
      count = next;
    }
  }

  std::vector<std::uint64_t> key_of(int v) {
    std::vector<std::uint64_t> key{static_cast<std::uint64_t>(color_[static_cast<std::size_t>(v)])};
    for (std::size_t ri = 0; ri < rel_tuples_.size(); ++ri) {
      std::vector<std::vector<std::uint64_t>> items;
      for (const auto& [r, ti] : incidence_[static_cast<std::size_t>(v)]) {
        if (static_cast<std::size_t>(r) != ri) continue;
        const std::vector<int>& t = rel_tuples_[ri][static_cast<std::size_t>(ti)];
        for (std::size_t p = 0; p < t.size(); ++p) {
          if (t[p] != v) continue;
          std::vector<std::uint64_t> item{static_cast<std::uint64_t>(p)};
          for (int x : t)
            item.push_back(static_cast<std::uint64_t>(color_[static_cast<std::size_t>(x)]));
          items.push_back(std::move(item));
        }
      }
      std::sort(items.begin(), items.end());
      key.push_back(~0ull);
      for (const auto& item : items) {
        key.push_back(item.size());
        key.insert(key.end(), item.begin(), item.end());
      }
    }
    return key;
  }

  bool assign(int v, int w) {
    if (used_[static_cast<std::size_t>(w)] ||
        color_[static_cast<std::size_t>(v)] != color_[static_cast<std::size_t>(w)])
      return false;
    if (++nodes_ > lim_.work_cap) throw cap_error("automorphism search exceeds work cap");
    p_[static_cast<std::size_t>(v)] = w;
    used_[static_cast<std::size_t>(w)] = 1;
    for (const auto& [ri, ti] : incidence_[static_cast<std::size_t>(v)]) {
      const std::vector<int>& t = rel_tuples_[static_cast<std::size_t>(ri)][static_cast<std::size_t>(ti)];
      std::uint64_t enc = 0;
      bool full = true;
      for (int x : t) {
        int img = p_[static_cast<std::size_t>(x)];
        if (img < 0) { full = false; break; }
        enc = enc * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(img);
      }
      if (full && !s_.holds(ri, enc)) {
        unassign(v, w);
        return false;
      }
    }
    return true;
  }

  void unassign(int v, int w) {
    p_[static_cast<std::size_t>(v)] = -1;
    used_[static_cast<std::size_t>(w)] = 0;
  }

  bool dfs(int v) {
    while (v < m_ && p_[static_cast<std::size_t>(v)] >= 0) ++v;
    if (v == m_) return true;
    for (int w = 0; w < m_; ++w) {
      if (!assign(v, w)) continue;
      if (dfs(v + 1)) return true;
      unassign(v, w);
    }
    return false;
  }
};

}  // namespace detail

// Base and strong generators along the point stabilizer chain for the
// natural base 0, 1, ..., m-1; the order is the product of the orbit
// lengths. Each missing coset is settled by one completion search.
inline AutGroup automorphism_group(const FinStructure& s, const Limits& lim = {}) {
  detail::AutSearcher searcher(s, lim);
  const std::vector<int>& color = searcher.colors();
  int m = s.size();
  AutGroup g;
  g.degree = m;
  for (int i = 0; i < m; ++i) {
    std::vector<Perm> level;
    for (const Perm& p : g.generators) {
      bool fixes = true;
      for (int j = 0; j < i && fixes; ++j) fixes = p[static_cast<std::size_t>(j)] == j;
      if (fixes) level.push_back(p);
    }
    std::vector<char> in_orbit(static_cast<std::size_t>(m), 0);
    for (int x : point_orbit(i, level)) in_orbit[static_cast<std::size_t>(x)] = 1;
    for (int w = i + 1; w < m; ++w) {
      if (in_orbit[static_cast<std::size_t>(w)] ||
          color[static_cast<std::size_t>(w)] != color[static_cast<std::size_t>(i)])
        continue;
      std::optional<Perm> found = searcher.complete(i, w);
      if (!found) continue;
      g.generators.push_back(*found);
      level.push_back(*found);
      for (int x : point_orbit(i, level)) in_orbit[static_cast<std::size_t>(x)] = 1;
    }
    std::uint64_t orbit_size = 0;
    for (char c : in_orbit) orbit_size += c != 0;
    g.order *= orbit_size;
  }
  return g;
}

}  // namespace aritylab
