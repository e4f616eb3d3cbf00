#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "aritylab/core.hpp"
#include "aritylab/limits.hpp"
#include "aritylab/tuples.hpp"

namespace aritylab {

// Side by side union. The second universe is shifted up by the first
// size; colliding relation names get @1 and @2; the parts are marked by
// fresh unary predicates P1 and P2.
inline FinStructure disjoint_union(const FinStructure& a, const FinStructure& b,
                                   const Limits& lim = {}) {
  int m1 = a.size();
  StructureData d;
  d.name = a.name() + "_u_" + b.name();
  d.size = m1 + b.size();
  auto collides = [&](const std::string& n) {
    return a.rel_index(n).has_value() && b.rel_index(n).has_value();
  };
  for (int i = 0; i < a.rel_count(); ++i) {
    RelData r;
    r.name = a.symbol(i).name + (collides(a.symbol(i).name) ? "@1" : "");
    r.arity = a.symbol(i).arity;
    r.tuples = a.relation(i).tuples();
    d.rels.push_back(std::move(r));
  }
  for (int i = 0; i < b.rel_count(); ++i) {
    RelData r;
    r.name = b.symbol(i).name + (collides(b.symbol(i).name) ? "@2" : "");
    r.arity = b.symbol(i).arity;
    DefSet rel = b.relation(i);
    for (std::vector<int> t : rel.tuples()) {
      for (int& v : t) v += m1;
      r.tuples.push_back(std::move(t));
    }
    d.rels.push_back(std::move(r));
  }
  auto fresh = [&](std::string n) {
    auto taken = [&](const std::string& s) {
      for (const RelData& r : d.rels)
        if (r.name == s) return true;
      return false;
    };
    while (taken(n)) n += "@u";
    return n;
  };
  RelData p1, p2;
  p1.name = fresh("P1");
  p1.arity = 1;
  for (int i = 0; i < m1; ++i) p1.tuples.push_back({i});
  p2.name = fresh("P2");
  p2.arity = 1;
  for (int i = m1; i < d.size; ++i) p2.tuples.push_back({i});
  d.rels.push_back(std::move(p1));
  d.rels.push_back(std::move(p2));
  return FinStructure::from_data(d, lim);
}

// Composition a[b]: the universe is the pair set, (x, y) stored as
// x*|b|+y. Relations of a constrain first coordinates only; relations
// of b require one shared block and constrain second coordinates; a
// name occurring on both sides takes the disjunction of the two
// readings. The block equivalence comes out as a fresh binary E, with
// preexisting relations called E stepping aside as E@1 / E@2.
inline FinStructure composition(const FinStructure& a, const FinStructure& b,
                                const Limits& lim = {}) {
  int m1 = a.size(), m2 = b.size();
  StructureData d;
  d.name = a.name() + "_o_" + b.name();
  d.size = m1 * m2;
  auto outname = [&](const FinStructure& s, int i, const char* side) {
    std::string n = s.symbol(i).name;
    return n == "E" ? n + side : n;
  };
  for (int i = 0; i < a.rel_count(); ++i)
    for (int j = 0; j < b.rel_count(); ++j)
      if (outname(a, i, "@1") == outname(b, j, "@2") &&
          a.symbol(i).arity != b.symbol(j).arity)
        throw validation_error("shared relation '" + a.symbol(i).name +
                               "' has conflicting arities");
  std::uint64_t cells = 0;
  for (int i = 0; i < a.rel_count(); ++i)
    cells += a.relation(i).size() *
             pow_u64(static_cast<std::uint64_t>(m2), a.symbol(i).arity);
  for (int j = 0; j < b.rel_count(); ++j)
    cells += b.relation(j).size() * static_cast<std::uint64_t>(m1);
  charge(cells + static_cast<std::uint64_t>(m1) * m2 * m2, lim, "composition tuples");

  auto blockwise = [&](const FinStructure& src, int i) {
    // condition on second coordinates within one block
    std::vector<std::vector<int>> out;
    DefSet rel = src.relation(i);
    for (const std::vector<int>& t : rel.tuples())
      for (int blk = 0; blk < m1; ++blk) {
        std::vector<int> enc(t.size());
        for (std::size_t q = 0; q < t.size(); ++q) enc[q] = blk * m2 + t[q];
        out.push_back(std::move(enc));
      }
    return out;
  };
  auto firstwise = [&](const FinStructure& src, int i) {
    // condition on first coordinates, second coordinates free
    std::vector<std::vector<int>> out;
    int ar = src.symbol(i).arity;
    DefSet rel = src.relation(i);
    for (const std::vector<int>& t : rel.tuples()) {
      std::vector<int> bs(static_cast<std::size_t>(ar), 0);
      do {
        std::vector<int> enc(t.size());
        for (std::size_t q = 0; q < t.size(); ++q)
          enc[q] = t[q] * m2 + bs[q];
        out.push_back(std::move(enc));
      } while (next_tuple(bs, m2));
    }
    return out;
  };

  std::vector<char> used_b(static_cast<std::size_t>(b.rel_count()), 0);
  for (int i = 0; i < a.rel_count(); ++i) {
    RelData r;
    r.name = outname(a, i, "@1");
    r.arity = a.symbol(i).arity;
    r.tuples = firstwise(a, i);
    for (int j = 0; j < b.rel_count(); ++j) {
      if (outname(b, j, "@2") != r.name) continue;
      used_b[static_cast<std::size_t>(j)] = 1;
      std::vector<std::vector<int>> more = blockwise(b, j);
      r.tuples.insert(r.tuples.end(), more.begin(), more.end());
      std::sort(r.tuples.begin(), r.tuples.end());
      r.tuples.erase(std::unique(r.tuples.begin(), r.tuples.end()), r.tuples.end());
    }
    d.rels.push_back(std::move(r));
  }
  for (int j = 0; j < b.rel_count(); ++j) {
    if (used_b[static_cast<std::size_t>(j)]) continue;
    RelData r;
    r.name = outname(b, j, "@2");
    r.arity = b.symbol(j).arity;
    r.tuples = blockwise(b, j);
    d.rels.push_back(std::move(r));
  }
  RelData e;
  e.name = "E";
  e.arity = 2;
  for (int blk = 0; blk < m1; ++blk)
    for (int x = 0; x < m2; ++x)
      for (int y = 0; y < m2; ++y)
        e.tuples.push_back({blk * m2 + x, blk * m2 + y});
  d.rels.push_back(std::move(e));
  return FinStructure::from_data(d, lim);
}

// Witness transport between a structure pair and their union or
// composition. Lifts go into the combined structure, sections come
// back out by pinning the foreign coordinate to element 0.

inline DefSet union_lift_first(const DefSet& w) { return w; }

inline DefSet union_lift_second(const DefSet& w, int m1) {
  std::vector<std::vector<int>> out;
  for (std::vector<int> t : w.tuples()) {
    for (int& v : t) v += m1;
    out.push_back(std::move(t));
  }
  return DefSet(w.arity(), std::move(out));
}

// tuples of the union lying inside one part, mapped back to that part
inline DefSet union_section(const DefSet& w, int lo, int hi) {
  std::vector<std::vector<int>> out;
  for (std::vector<int> t : w.tuples()) {
    bool inside = true;
    for (int v : t) inside = inside && v >= lo && v < hi;
    if (!inside) continue;
    for (int& v : t) v -= lo;
    out.push_back(std::move(t));
  }
  return DefSet(w.arity(), std::move(out));
}

inline DefSet comp_lift_first(const DefSet& w, int m2) {
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& t : w.tuples()) {
    std::vector<int> bs(t.size(), 0);
    do {
      std::vector<int> enc(t.size());
      for (std::size_t q = 0; q < t.size(); ++q) enc[q] = t[q] * m2 + bs[q];
      out.push_back(std::move(enc));
    } while (next_tuple(bs, m2));
  }
  return DefSet(w.arity(), std::move(out));
}

inline DefSet comp_lift_second(const DefSet& w, int m1, int m2) {
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& t : w.tuples())
    for (int blk = 0; blk < m1; ++blk) {
      std::vector<int> enc(t.size());
      for (std::size_t q = 0; q < t.size(); ++q) enc[q] = blk * m2 + t[q];
      out.push_back(std::move(enc));
    }
  return DefSet(w.arity(), std::move(out));
}

inline DefSet comp_section_first(const DefSet& w, int m2) {
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& t : w.tuples()) {
    bool base = true;
    for (int v : t) base = base && v % m2 == 0;
    if (!base) continue;
    std::vector<int> proj(t.size());
    for (std::size_t q = 0; q < t.size(); ++q) proj[q] = t[q] / m2;
    out.push_back(std::move(proj));
  }
  return DefSet(w.arity(), std::move(out));
}

inline DefSet comp_section_second(const DefSet& w, int m2) {
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& t : w.tuples()) {
    bool block0 = true;
    for (int v : t) block0 = block0 && v / m2 == 0;
    if (!block0) continue;
    out.push_back(t);
  }
  return DefSet(w.arity(), std::move(out));
}

}  // namespace aritylab
