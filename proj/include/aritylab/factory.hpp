#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "aritylab/core.hpp"
#include "aritylab/eval.hpp"
#include "aritylab/formula.hpp"
#include "aritylab/limits.hpp"
#include "aritylab/tuples.hpp"

namespace aritylab {

// How one chain step assembles K_{j+1} from the j+1 cyclic windows of
// length j. "literal" pairs windows 1-2, 2-3, 3-4 only; "cyclic" pairs
// every window with its successor, wrapping around; "allwindows"
// demands every window. The cyclic closure is the default: it is the
// only one of the three that keeps rotation closure and swap totality
// on distinct tuples past the ternary step, and at the ternary step
// all pairings coincide with the literal rule anyway.
enum class ChainVariant { cyclic, literal, allwindows };

inline const char* variant_name(ChainVariant v) {
  switch (v) {
    case ChainVariant::cyclic: return "cyclic";
    case ChainVariant::literal: return "literal";
    case ChainVariant::allwindows: return "allwindows";
  }
  return "?";
}

inline std::optional<ChainVariant> variant_from(const std::string& s) {
  if (s == "cyclic") return ChainVariant::cyclic;
  if (s == "literal") return ChainVariant::literal;
  if (s == "allwindows") return ChainVariant::allwindows;
  return std::nullopt;
}

inline FinStructure pure_set(int m, const Limits& lim = {}) {
  StructureData d;
  d.name = "pure" + std::to_string(m);
  d.size = m;
  return FinStructure::from_data(d, lim);
}

inline FinStructure linear_order(int m, const Limits& lim = {}) {
  StructureData d;
  d.name = "lo" + std::to_string(m);
  d.size = m;
  RelData r;
  r.name = "K2";
  r.arity = 2;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) r.tuples.push_back({i, j});
  d.rels.push_back(std::move(r));
  return FinStructure::from_data(d, lim);
}

// Distinct triples in cyclic position order; every triple with a
// repeated entry is a member, which is what makes the second and
// fourth circular axioms hold verbatim on a finite universe.
inline FinStructure circular_order(int m, const Limits& lim = {}) {
  StructureData d;
  d.name = "co" + std::to_string(m);
  d.size = m;
  RelData r;
  r.name = "K3";
  r.arity = 3;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        bool rep = a == b || b == c || a == c;
        bool cyc = (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
        if (rep || cyc) r.tuples.push_back({a, b, c});
      }
  d.rels.push_back(std::move(r));
  return FinStructure::from_data(d, lim);
}

namespace detail {

inline std::vector<char> chain_step(const std::vector<char>& kj, int j, int m, ChainVariant v,
                                    const Limits& lim) {
  int width = j + 1;
  std::uint64_t total = pow_u64(static_cast<std::uint64_t>(m), width);
  charge(total * static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(j), lim,
         "chain step");
  std::vector<char> out(total);
  std::vector<int> t(static_cast<std::size_t>(width), 0);
  std::vector<char> w(static_cast<std::size_t>(width));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (int s = 0; s < width; ++s) {
      std::uint64_t enc = 0;
      for (int q = 0; q < j; ++q)
        enc = enc * static_cast<std::uint64_t>(m) +
              static_cast<std::uint64_t>(t[static_cast<std::size_t>((s + q) % width)]);
      w[static_cast<std::size_t>(s)] = kj[enc];
    }
    bool val = false;
    switch (v) {
      case ChainVariant::literal:
        val = (w[0] && w[1]) || (w[1] && w[2]) ||
              (w[2] && w[static_cast<std::size_t>(3 % width)]);
        break;
      case ChainVariant::cyclic:
        for (int s = 0; s < width && !val; ++s)
          val = w[static_cast<std::size_t>(s)] && w[static_cast<std::size_t>((s + 1) % width)];
        break;
      case ChainVariant::allwindows:
        val = true;
        for (int s = 0; s < width; ++s) val = val && w[static_cast<std::size_t>(s)];
        break;
    }
    out[idx] = val;
    next_tuple(t, m);
  }
  return out;
}

}  // namespace detail

inline FinStructure spherical_chain(int m, int n, ChainVariant v = ChainVariant::cyclic,
                                    const Limits& lim = {}) {
  if (n < 3) throw validation_error("spherical chain starts at n = 3");
  std::vector<char> mask(pow_u64(static_cast<std::uint64_t>(m), 2), 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      mask[static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(m) +
           static_cast<std::uint64_t>(j)] = 1;
  for (int j = 2; j < n; ++j) mask = detail::chain_step(mask, j, m, v, lim);
  StructureData d;
  d.name = "sp" + std::to_string(m) + "_" + std::to_string(n);
  if (v != ChainVariant::cyclic) d.name += std::string("_") + variant_name(v);
  d.size = m;
  RelData r;
  r.name = "K" + std::to_string(n);
  r.arity = n;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  for (std::uint64_t idx = 0; idx < mask.size(); ++idx) {
    if (mask[idx]) r.tuples.push_back(t);
    next_tuple(t, m);
  }
  d.rels.push_back(std::move(r));
  return FinStructure::from_data(d, lim);
}

struct AxiomVerdict {
  std::string axiom;
  std::string formula;
  bool holds_full = false;
  bool holds_distinct = false;
  std::vector<int> cex_full;      // first failing assignment, empty if none
  std::vector<int> cex_distinct;  // first failing pairwise-distinct assignment
};

struct DensityVerdict {
  std::string formula;
  bool holds = false;
  std::vector<int> cex;
};

namespace detail {

inline AxiomVerdict judge(const FinStructure& s, const std::string& axiom, const Formula& body,
                          const std::vector<std::string>& vars, const Limits& lim) {
  AxiomVerdict v;
  v.axiom = axiom;
  v.formula = to_string(body);
  std::vector<char> sat = evaluate(s, body, vars, lim).mask(s.size());
  v.holds_full = true;
  v.holds_distinct = true;
  std::vector<int> t(vars.size(), 0);
  for (std::uint64_t idx = 0; idx < sat.size(); ++idx) {
    if (!sat[idx]) {
      if (v.holds_full) {
        v.holds_full = false;
        v.cex_full = t;
      }
      bool distinct = true;
      for (std::size_t i = 0; i < t.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < t.size() && distinct; ++j)
          distinct = t[i] != t[j];
      if (distinct && v.holds_distinct) {
        v.holds_distinct = false;
        v.cex_distinct = t;
      }
    }
    if (!v.holds_full && !v.holds_distinct) break;
    next_tuple(t, s.size());
  }
  return v;
}

}  // namespace detail

// The four circular axioms at arity 3, their spherical counterparts at
// arity 4 and up. Axioms with a floating swap index are taken as the
// conjunction over every stated index. The "distinct" verdict restricts
// only the outer variables; an inner quantifier still sweeps everything.
inline std::vector<AxiomVerdict> check_axioms(const FinStructure& s, const std::string& rel,
                                              const Limits& lim = {}) {
  auto ri = s.rel_index(rel);
  if (!ri) throw validation_error("unknown relation '" + rel + "'");
  int n = s.symbol(*ri).arity;
  if (n < 3) throw validation_error("order axioms need arity >= 3");
  std::vector<AxiomVerdict> out;
  if (n == 3) {
    std::vector<std::string> v{"x", "y", "z"};
    auto K = [&](std::string a, std::string b, std::string c) {
      return f_atom(rel, {std::move(a), std::move(b), std::move(c)});
    };
    out.push_back(detail::judge(s, "co1", f_implies(K("x", "y", "z"), K("y", "z", "x")), v, lim));
    out.push_back(detail::judge(
        s, "co2",
        f_iff(f_and(K("x", "y", "z"), K("y", "x", "z")),
              f_or(f_eq("x", "y"), f_or(f_eq("y", "z"), f_eq("z", "x")))),
        v, lim));
    out.push_back(detail::judge(
        s, "co3",
        f_implies(K("x", "y", "z"),
                  f_forall("t", f_or(K("x", "y", "t"), K("t", "y", "z")))),
        v, lim));
    out.push_back(
        detail::judge(s, "co4", f_or(K("x", "y", "z"), K("y", "x", "z")), v, lim));
    return out;
  }
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  auto K_of = [&](const std::vector<std::string>& args) { return f_atom(rel, args); };
  auto swapped = [&](int i) {
    std::vector<std::string> a = v;
    std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i + 1)]);
    return a;
  };
  std::vector<std::string> rot = v;
  std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  out.push_back(detail::judge(s, "nbo1", f_implies(K_of(v), K_of(rot)), v, lim));
  {
    std::vector<Formula> conj;
    Formula adjacent_eq = f_eq(v[0], v[1]);
    for (int i = 1; i + 1 < n; ++i)
      adjacent_eq = f_or(std::move(adjacent_eq),
                         f_eq(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]));
    for (int i = 0; i + 1 < n; ++i) {
      Formula rhs = adjacent_eq;
      conj.push_back(f_iff(f_and(K_of(v), K_of(swapped(i))), std::move(rhs)));
    }
    out.push_back(detail::judge(s, "nbo2", f_fold(FKind::And, std::move(conj)), v, lim));
  }
  {
    std::vector<std::string> head = v, tail = v;
    head.back() = "t";
    tail.front() = "t";
    out.push_back(detail::judge(
        s, "nbo3",
        f_implies(K_of(v), f_forall("t", f_or(K_of(head), K_of(tail)))), v, lim));
  }
  {
    std::vector<Formula> conj;
    for (int i = 0; i + 1 < n; ++i) conj.push_back(f_or(K_of(v), K_of(swapped(i))));
    out.push_back(detail::judge(s, "nbo4", f_fold(FKind::And, std::move(conj)), v, lim));
  }
  return out;
}

// No point of a finite order is strictly between its neighbors, so this
// is expected to fail on every structure it is interesting for; the
// counterexample is the point of the exercise.
inline DensityVerdict check_density(const FinStructure& s, const std::string& rel,
                                    const Limits& lim = {}) {
  auto ri = s.rel_index(rel);
  if (!ri) throw validation_error("unknown relation '" + rel + "'");
  int n = s.symbol(*ri).arity;
  if (n < 2) throw validation_error("density needs arity >= 2");
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  Formula distinct = f_not(f_eq(v[0], v[1]));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!(i == 0 && j == 1))
        distinct = f_and(std::move(distinct), f_not(f_eq(v[i], v[j])));
  std::vector<std::string> mid = v;
  mid[1] = "y";
  Formula inner = f_not(f_eq("y", v[0]));
  for (std::size_t i = 1; i < v.size(); ++i)
    inner = f_and(std::move(inner), f_not(f_eq("y", v[i])));
  inner = f_and(std::move(inner), f_atom(rel, mid));
  Formula body =
      f_implies(f_and(f_atom(rel, v), std::move(distinct)), f_exists("y", std::move(inner)));
  DensityVerdict out;
  out.formula = to_string(body);
  std::vector<char> sat = evaluate(s, body, v, lim).mask(s.size());
  out.holds = true;
  std::vector<int> t(v.size(), 0);
  for (std::uint64_t idx = 0; idx < sat.size(); ++idx) {
    if (!sat[idx]) {
      out.holds = false;
      out.cex = t;
      break;
    }
    next_tuple(t, s.size());
  }
  return out;
}

}  // namespace aritylab
