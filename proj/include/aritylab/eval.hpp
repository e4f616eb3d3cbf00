#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "aritylab/core.hpp"
#include "aritylab/formula.hpp"
#include "aritylab/limits.hpp"
#include "aritylab/tuples.hpp"

namespace aritylab {

// Table-based evaluator. A table over columns (v1..vk) holds one byte per
// tuple in universe^k, indexed big endian, so eliminating the last column
// reduces contiguous blocks of m cells. Quantified variables are appended
// on the right and popped by the reduction; name lookup scans from the
// right, which makes inner bindings shadow outer ones.
namespace detail {

class Evaluator {
 public:
  Evaluator(const FinStructure& s, const Limits& lim) : s_(s), lim_(lim) {}

  std::vector<std::uint8_t> eval(const Formula& f, std::vector<std::string>& cols) {
    std::uint64_t size = table_size(cols.size());
    switch (f.kind) {
      case FKind::Atom: {
        int ri = resolve_rel(f.rel, f.vars.size());
        const std::vector<std::uint8_t>& rm = rel_mask(ri);
        std::vector<int> at = resolve_vars(f.vars, cols);
        std::vector<std::uint8_t> out(size);
        std::vector<int> t(cols.size(), 0);
        for (std::uint64_t i = 0; i < size; ++i) {
          std::uint64_t enc = 0;
          for (int a : at) enc = enc * s_.size() + static_cast<std::uint64_t>(t[a]);
          out[i] = rm[enc];
          next_tuple(t, s_.size());
        }
        charge(size);
        return out;
      }
      case FKind::Eq: {
        std::vector<int> at = resolve_vars(f.vars, cols);
        std::vector<std::uint8_t> out(size);
        std::vector<int> t(cols.size(), 0);
        for (std::uint64_t i = 0; i < size; ++i) {
          out[i] = t[at[0]] == t[at[1]];
          next_tuple(t, s_.size());
        }
        charge(size);
        return out;
      }
      case FKind::Not: {
        std::vector<std::uint8_t> a = eval(f.kids[0], cols);
        for (auto& b : a) b = !b;
        charge(size);
        return a;
      }
      case FKind::And:
      case FKind::Or:
      case FKind::Implies:
      case FKind::Iff: {
        std::vector<std::uint8_t> a = eval(f.kids[0], cols);
        std::vector<std::uint8_t> b = eval(f.kids[1], cols);
        for (std::uint64_t i = 0; i < size; ++i) {
          switch (f.kind) {
            case FKind::And: a[i] = a[i] && b[i]; break;
            case FKind::Or: a[i] = a[i] || b[i]; break;
            case FKind::Implies: a[i] = !a[i] || b[i]; break;
            default: a[i] = a[i] == b[i]; break;
          }
        }
        charge(size);
        return a;
      }
      case FKind::Forall:
      case FKind::Exists: {
        cols.push_back(f.var);
        std::vector<std::uint8_t> inner = eval(f.kids[0], cols);
        cols.pop_back();
        std::vector<std::uint8_t> out(size);
        int m = s_.size();
        bool all = f.kind == FKind::Forall;
        for (std::uint64_t i = 0; i < size; ++i) {
          bool acc = all;
          const std::uint8_t* block = inner.data() + i * m;
          for (int j = 0; j < m; ++j) {
            if (all) acc = acc && block[j];
            else acc = acc || block[j];
          }
          out[i] = acc;
        }
        charge(size);
        return out;
      }
    }
    throw error("unreachable formula kind");
  }

  std::uint64_t table_size(std::size_t k) const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < k; ++i) {
      s *= static_cast<std::uint64_t>(s_.size());
      if (s > lim_.work_cap)
        throw cap_error("evaluation table exceeds work cap");
    }
    return s;
  }

 private:
  const FinStructure& s_;
  const Limits& lim_;
  std::uint64_t used_ = 0;
  std::vector<std::vector<std::uint8_t>> masks_;

  void charge(std::uint64_t cells) {
    used_ += cells;
    if (used_ > lim_.work_cap)
      throw cap_error("evaluation work exceeds cap of " + std::to_string(lim_.work_cap) + " cells");
  }

  int resolve_rel(const std::string& name, std::size_t argc) {
    auto ri = s_.rel_index(name);
    if (!ri) throw validation_error("unknown relation '" + name + "'");
    int ar = s_.signature()[static_cast<std::size_t>(*ri)].arity;
    if (static_cast<std::size_t>(ar) != argc)
      throw validation_error("relation '" + name + "' has arity " + std::to_string(ar) +
                             ", got " + std::to_string(argc) + " arguments");
    return *ri;
  }

  std::vector<int> resolve_vars(const std::vector<std::string>& vs,
                                const std::vector<std::string>& cols) {
    std::vector<int> out;
    out.reserve(vs.size());
    for (const std::string& v : vs) {
      auto it = std::find(cols.rbegin(), cols.rend(), v);
      if (it == cols.rend()) throw validation_error("unbound variable '" + v + "'");
      out.push_back(static_cast<int>(cols.rend() - it) - 1);
    }
    return out;
  }

  const std::vector<std::uint8_t>& rel_mask(int ri) {
    if (masks_.empty()) masks_.resize(s_.rel_count());
    auto& m = masks_[static_cast<std::size_t>(ri)];
    if (m.empty()) {
      int ar = s_.signature()[static_cast<std::size_t>(ri)].arity;
      std::uint64_t size = table_size(static_cast<std::size_t>(ar));
      m.assign(size, 0);
      for (std::uint64_t enc : s_.encoded(ri)) m[enc] = 1;
      charge(size);
    }
    return m;
  }
};

}  // namespace detail

// Evaluates f over the named columns, which must cover the free variables
// and be duplicate free. The result has arity cols.size().
inline DefSet evaluate(const FinStructure& s, const Formula& f,
                       std::vector<std::string> cols, const Limits& lim = {}) {
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j)
      if (cols[i] == cols[j])
        throw validation_error("duplicate result column '" + cols[i] + "'");
  for (const std::string& v : free_variables(f))
    if (std::find(cols.begin(), cols.end(), v) == cols.end())
      throw validation_error("free variable '" + v + "' missing from result columns");
  detail::Evaluator ev(s, lim);
  std::vector<std::uint8_t> table = ev.eval(f, cols);
  std::vector<std::vector<int>> tuples;
  std::vector<int> t(cols.size(), 0);
  for (std::uint64_t i = 0; i < table.size(); ++i) {
    if (table[i]) tuples.push_back(t);
    next_tuple(t, s.size());
  }
  return DefSet(static_cast<int>(cols.size()), std::move(tuples));
}

inline DefSet evaluate(const FinStructure& s, const Formula& f, const Limits& lim = {}) {
  return evaluate(s, f, free_variables(f), lim);
}

// Sentence truth: no free variables allowed.
inline bool holds_sentence(const FinStructure& s, const Formula& f, const Limits& lim = {}) {
  std::vector<std::string> fv = free_variables(f);
  if (!fv.empty())
    throw validation_error("sentence has free variable '" + fv[0] + "'");
  return !evaluate(s, f, {}, lim).empty();
}

}  // namespace aritylab
