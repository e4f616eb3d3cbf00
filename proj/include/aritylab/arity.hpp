#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aritylab/aut_search.hpp"
#include "aritylab/core.hpp"
#include "aritylab/group.hpp"
#include "aritylab/limits.hpp"
#include "aritylab/orbits.hpp"
#include "aritylab/tuples.hpp"

namespace aritylab {

// Witness degree: m relations of arity at most r. Ordered by m first.
struct DegreePair {
  int m = 0;
  int r = 0;
  friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

struct StructureArityReport {
  int k_max = 0;
  int value = 0;
  std::vector<int> level;  // level[k-1]: smallest adequate n at tuple length k
};

struct WitnessReport {
  bool found = false;
  DegreePair degree;
  std::vector<std::string> names;
  std::vector<DefSet> witnesses;
  bool optimal = true;             // false when the greedy fallback decided
  std::string lex_order = "m,r";   // minimization order of the degree pair
};

namespace detail {
struct SigHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};
}  // namespace detail

// Caches the group, the orbit partitions and the subtype partitions of
// one structure. A k-tuple's subtype at level n collects the n-orbit of
// every subtuple picked by a map [n] -> [k], coordinate equalities when
// n is 1, and membership bits for any witness relations. Two tuples are
// subtype equivalent when all of it agrees; every class is a union of
// orbits, so "partition equals the orbit partition" reduces to equal
// class counts.
class ArityContext {
 public:
  explicit ArityContext(FinStructure s, Limits lim = {})
      : s_(std::move(s)), lim_(lim), group_(automorphism_group(s_, lim_)) {}

  const FinStructure& structure() const { return s_; }
  const AutGroup& group() const { return group_; }
  const Limits& limits() const { return lim_; }

  const TuplePartition& orbits(int k) {
    auto it = orbit_cache_.find(k);
    if (it == orbit_cache_.end())
      it = orbit_cache_.emplace(k, orbit_partition(group_, k, lim_)).first;
    return it->second;
  }

  const TuplePartition& subtypes(int k, int n) {
    if (n >= k) return orbits(k);
    auto key = std::make_pair(k, n);
    auto it = subtype_cache_.find(key);
    if (it == subtype_cache_.end())
      it = subtype_cache_.emplace(key, build(k, n, nullptr)).first;
    return it->second;
  }

  TuplePartition subtypes_with(int k, int n, const std::vector<DefSet>& wits) {
    if (wits.empty()) return subtypes(k, n);
    if (n >= k) return orbits(k);
    return build(k, n, &wits);
  }

 private:
  FinStructure s_;
  Limits lim_;
  AutGroup group_;
  std::map<int, TuplePartition> orbit_cache_;
  std::map<std::pair<int, int>, TuplePartition> subtype_cache_;

  TuplePartition build(int k, int n, const std::vector<DefSet>* wits) {
    int m = s_.size();
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
      total *= static_cast<std::uint64_t>(m);
      if (total > lim_.work_cap) throw cap_error("subtype table exceeds work cap");
    }
    std::vector<std::vector<int>> maps;
    const TuplePartition* sub = nullptr;
    if (n >= 1) {
      sub = &orbits(n);
      std::vector<int> mu(static_cast<std::size_t>(n), 0);
      do maps.push_back(mu); while (next_tuple(mu, k));
    }
    std::vector<std::vector<std::vector<int>>> wmaps;
    std::vector<std::vector<char>> wmask;
    if (wits) {
      for (const DefSet& w : *wits) {
        charge(pow_u64(static_cast<std::uint64_t>(m), w.arity()), lim_, "witness mask");
        wmask.push_back(w.mask(m));
        std::vector<std::vector<int>> ms;
        std::vector<int> mu(static_cast<std::size_t>(w.arity()), 0);
        do ms.push_back(mu); while (next_tuple(mu, k));
        wmaps.push_back(std::move(ms));
      }
    }
    std::uint64_t per_tuple = maps.size() + (n == 1 ? static_cast<std::uint64_t>(k) * k : 0);
    for (const auto& ms : wmaps) per_tuple += ms.size();
    charge(total * (per_tuple + 1), lim_, "subtype signatures");

    TuplePartition part;
    part.k = k;
    part.m = m;
    part.class_of.assign(total, -1);
    std::unordered_map<std::vector<std::uint64_t>, int, detail::SigHash> ids;
    std::vector<int> t(static_cast<std::size_t>(k));
    std::vector<std::uint64_t> sig;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      decode_tuple(idx, m, k, t);
      sig.clear();
      for (const std::vector<int>& mu : maps) {
        std::uint64_t enc = 0;
        for (int pos : mu)
          enc = enc * static_cast<std::uint64_t>(m) +
                static_cast<std::uint64_t>(t[static_cast<std::size_t>(pos)]);
        sig.push_back(static_cast<std::uint64_t>(sub->class_of[enc]));
      }
      if (n == 1)
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j)
            sig.push_back(t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)]);
      for (std::size_t wi = 0; wi < wmaps.size(); ++wi) {
        for (const std::vector<int>& mu : wmaps[wi]) {
          std::uint64_t enc = 0;
          for (int pos : mu)
            enc = enc * static_cast<std::uint64_t>(m) +
                  static_cast<std::uint64_t>(t[static_cast<std::size_t>(pos)]);
          sig.push_back(wmask[wi][enc]);
        }
      }
      auto [it, fresh] = ids.emplace(sig, part.class_count);
      if (fresh) {
        part.reps.push_back(idx);
        ++part.class_count;
      }
      part.class_of[idx] = it->second;
    }
    return part;
  }
};

inline bool is_n_ary(ArityContext& ctx, const DefSet& r, int n) {
  if (n < 0) throw validation_error("arity level must be nonnegative");
  if (r.max_entry() >= ctx.structure().size())
    throw validation_error("relation entry out of range");
  if (!defset_invariant(r, ctx.group().generators))
    throw validation_error("relation is not invariant");
  if (r.arity() == 0) return true;
  const TuplePartition& part = ctx.subtypes(r.arity(), n);
  std::vector<std::uint64_t> in_class(static_cast<std::size_t>(part.class_count), 0);
  std::vector<std::uint64_t> size_of(static_cast<std::size_t>(part.class_count), 0);
  for (int c : part.class_of) ++size_of[static_cast<std::size_t>(c)];
  for (const std::vector<int>& t : r.tuples())
    ++in_class[static_cast<std::size_t>(part.class_of[encode_tuple(t, ctx.structure().size())])];
  for (int c = 0; c < part.class_count; ++c) {
    std::size_t ci = static_cast<std::size_t>(c);
    if (in_class[ci] != 0 && in_class[ci] != size_of[ci]) return false;
  }
  return true;
}

inline int relation_arity(ArityContext& ctx, const DefSet& r) {
  for (int n = 0; n <= r.arity(); ++n)
    if (is_n_ary(ctx, r, n)) return n;
  throw error("arity scan fell through");
}

// Smallest adequate n per tuple length, then the maximum over lengths.
// k_max <= 0 requests the universe size, which certifies the arity
// exactly but grows the tables fast.
inline StructureArityReport structure_arity(ArityContext& ctx, int k_max = 0) {
  if (k_max <= 0) k_max = ctx.structure().size();
  StructureArityReport rep;
  rep.k_max = k_max;
  for (int k = 1; k <= k_max; ++k) {
    int target = ctx.orbits(k).class_count;
    for (int n = 0; n <= k; ++n) {
      if (ctx.subtypes(k, n).class_count == target) {
        rep.level.push_back(n);
        rep.value = std::max(rep.value, n);
        break;
      }
    }
  }
  return rep;
}

// One named relation per orbit class, for every arity in [lo, hi],
// in (arity, class) order.
inline std::vector<std::pair<std::string, DefSet>> orbit_relations(ArityContext& ctx, int lo,
                                                                   int hi) {
  std::vector<std::pair<std::string, DefSet>> pool;
  int m = ctx.structure().size();
  for (int j = std::max(lo, 1); j <= hi; ++j) {
    const TuplePartition& part = ctx.orbits(j);
    std::vector<std::vector<std::vector<int>>> members(
        static_cast<std::size_t>(part.class_count));
    std::vector<int> t(static_cast<std::size_t>(j), 0);
    for (std::uint64_t idx = 0; idx < part.class_of.size(); ++idx) {
      members[static_cast<std::size_t>(part.class_of[idx])].push_back(t);
      next_tuple(t, m);
    }
    for (int c = 0; c < part.class_count; ++c)
      pool.emplace_back("O_" + std::to_string(j) + "_" + std::to_string(c),
                        DefSet(j, std::move(members[static_cast<std::size_t>(c)])));
  }
  return pool;
}

// Candidate witnesses: single orbit relations with arity above n.
inline std::vector<std::pair<std::string, DefSet>> witness_pool(ArityContext& ctx, int n,
                                                                int r_max) {
  return orbit_relations(ctx, n + 1, r_max);
}

inline bool expansion_is_n_ary(ArityContext& ctx, int n, int k_max,
                               const std::vector<DefSet>& wits) {
  for (int k = 1; k <= k_max; ++k)
    if (ctx.subtypes_with(k, n, wits).class_count != ctx.orbits(k).class_count) return false;
  return true;
}

namespace detail {

inline bool pick_subset(ArityContext& ctx, int n, int k_max,
                        const std::vector<std::pair<std::string, DefSet>>& pool,
                        int want, int r_cap, std::vector<int>& chosen, int from) {
  if (static_cast<int>(chosen.size()) == want) {
    std::vector<DefSet> wits;
    for (int i : chosen) wits.push_back(pool[static_cast<std::size_t>(i)].second);
    return expansion_is_n_ary(ctx, n, k_max, wits);
  }
  for (int i = from; i < static_cast<int>(pool.size()); ++i) {
    if (pool[static_cast<std::size_t>(i)].second.arity() > r_cap) continue;
    chosen.push_back(i);
    if (pick_subset(ctx, n, k_max, pool, want, r_cap, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

// Lexicographically least (m, r): fewest witnesses first, smallest
// witness arity second. Exhaustive over pools of at most 20 orbits,
// greedy by refinement gain beyond that.
inline WitnessReport witness_degree_search(ArityContext& ctx, int n, int r_max, int k_max = 0) {
  if (n < 0) throw validation_error("arity level must be nonnegative");
  if (k_max <= 0) k_max = ctx.structure().size();
  WitnessReport rep;
  if (structure_arity(ctx, k_max).value <= n) {
    rep.found = true;
    return rep;
  }
  if (r_max <= n) return rep;  // no admissible degree in range
  std::vector<std::pair<std::string, DefSet>> pool = witness_pool(ctx, n, r_max);
  if (pool.size() <= 20) {
    for (int want = 1; want <= static_cast<int>(pool.size()); ++want) {
      for (int r = n + 1; r <= r_max; ++r) {
        std::vector<int> chosen;
        if (detail::pick_subset(ctx, n, k_max, pool, want, r, chosen, 0)) {
          rep.found = true;
          rep.degree = {want, r};
          for (int i : chosen) {
            rep.names.push_back(pool[static_cast<std::size_t>(i)].first);
            rep.witnesses.push_back(pool[static_cast<std::size_t>(i)].second);
          }
          return rep;
        }
      }
    }
    return rep;
  }
  rep.optimal = false;
  std::vector<int> chosen;
  std::vector<char> taken(pool.size(), 0);
  std::vector<DefSet> wits;
  while (!expansion_is_n_ary(ctx, n, k_max, wits)) {
    long best_gain = 0;
    int best = -1;
    long base = 0;
    for (int k = 1; k <= k_max; ++k) base += ctx.subtypes_with(k, n, wits).class_count;
    for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      std::vector<DefSet> trial = wits;
      trial.push_back(pool[static_cast<std::size_t>(i)].second);
      long total = 0;
      for (int k = 1; k <= k_max; ++k) total += ctx.subtypes_with(k, n, trial).class_count;
      if (total - base > best_gain) {
        best_gain = total - base;
        best = i;
      }
    }
    if (best < 0) return rep;  // no single witness refines anything further
    taken[static_cast<std::size_t>(best)] = 1;
    chosen.push_back(best);
    wits.push_back(pool[static_cast<std::size_t>(best)].second);
  }
  rep.found = true;
  int r = 0;
  for (const DefSet& w : wits) r = std::max(r, w.arity());
  rep.degree = {static_cast<int>(wits.size()), r};
  for (int i : chosen) rep.names.push_back(pool[static_cast<std::size_t>(i)].first);
  rep.witnesses = wits;
  return rep;
}

// Almost n-ary with an explicit witness set: every orbit relation is a
// union of witness-refined subtype classes at level n.
inline bool is_almost_n_ary(ArityContext& ctx, int n, const std::vector<DefSet>& wits,
                            int k_max = 0) {
  if (n < 0) throw validation_error("arity level must be nonnegative");
  if (k_max <= 0) k_max = ctx.structure().size();
  for (const DefSet& w : wits) {
    if (w.arity() < 1) throw validation_error("witness arity must be positive");
    if (w.max_entry() >= ctx.structure().size())
      throw validation_error("witness entry out of range");
    if (!defset_invariant(w, ctx.group().generators))
      throw validation_error("witness is not invariant");
  }
  return expansion_is_n_ary(ctx, n, k_max, wits);
}

// Almost n-ary within a witness budget: some admissible witness set of
// at most deg.m relations, none wider than deg.r, does the job.
inline bool almost_at_degree(ArityContext& ctx, int n, DegreePair deg, int k_max = 0) {
  bool admissible = (deg.m == 0 && deg.r == 0) || (deg.m >= 1 && deg.r > n);
  if (!admissible) throw validation_error("inadmissible witness degree");
  if (k_max <= 0) k_max = ctx.structure().size();
  if (deg.m == 0) return structure_arity(ctx, k_max).value <= n;
  // pool capped at deg.r, so the search minimizes the witness count for
  // exactly this arity bound
  WitnessReport rep = witness_degree_search(ctx, n, deg.r, k_max);
  return rep.found && rep.degree.m <= deg.m;
}

// Expansion by one named relation per orbit of arity up to n. Orbit
// relations are invariant, so the expansion keeps the symmetry group;
// that is checked before returning.
inline FinStructure aritizing_expansion(ArityContext& ctx, int n) {
  if (n < 1) throw validation_error("expansion level must be positive");
  FinStructure out = ctx.structure();
  for (auto& [base, rel] : orbit_relations(ctx, 1, n)) {
    std::string name = base;
    while (out.rel_index(name)) name += "@w";
    out = out.expand_with(name, rel, ctx.limits());
  }
  if (automorphism_group(out, ctx.limits()).order != ctx.group().order)
    throw error("expansion changed the symmetry group");
  return out;
}

}  // namespace aritylab
