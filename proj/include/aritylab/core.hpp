#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aritylab/limits.hpp"
#include "aritylab/tuples.hpp"

namespace aritylab {

struct RelSymbol {
  std::string name;
  int arity = 1;
  bool operator==(const RelSymbol&) const = default;
};

using Signature = std::vector<RelSymbol>;

inline bool valid_rel_name(const std::string& s) {
  if (s.empty()) return false;
  auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9') || c == '@'; };
  if (!head(s[0])) return false;
  for (char c : s.substr(1))
    if (!tail(c)) return false;
  return true;
}

// A definable set: finitely many k-tuples, k >= 0. Tuples are kept sorted and
// unique, so DefSet values compare canonically. k = 0 encodes a truth value:
// the empty set is "false", the set holding the empty tuple is "true".
class DefSet {
 public:
  DefSet() = default;
  DefSet(int arity, std::vector<std::vector<int>> tuples) : arity_(arity), tuples_(std::move(tuples)) {
    if (arity_ < 0) throw validation_error("DefSet arity must be >= 0");
    for (const auto& t : tuples_)
      if (static_cast<int>(t.size()) != arity_)
        throw validation_error("DefSet tuple length does not match arity");
    std::sort(tuples_.begin(), tuples_.end());
    tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  }

  static DefSet truth(bool b) {
    return b ? DefSet(0, {std::vector<int>{}}) : DefSet(0, {});
  }

  static DefSet from_mask(int arity, int m, const std::vector<char>& mask) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(arity, 0);
    std::uint64_t idx = 0;
    if (arity == 0) return truth(!mask.empty() && mask[0]);
    do {
      if (mask[idx]) out.push_back(t);
      ++idx;
    } while (next_tuple(t, m));
    return DefSet(arity, std::move(out));
  }

  int arity() const { return arity_; }
  const std::vector<std::vector<int>>& tuples() const { return tuples_; }
  std::size_t size() const { return tuples_.size(); }
  bool empty() const { return tuples_.empty(); }
  bool is_full(int m) const { return size() == pow_u64(static_cast<std::uint64_t>(m), arity_); }
  bool contains(const std::vector<int>& t) const {
    return std::binary_search(tuples_.begin(), tuples_.end(), t);
  }
  int max_entry() const {
    int mx = -1;
    for (const auto& t : tuples_)
      for (int v : t) mx = std::max(mx, v);
    return mx;
  }
  std::vector<char> mask(int m) const {
    std::vector<char> out(pow_u64(static_cast<std::uint64_t>(m), arity_), 0);
    for (const auto& t : tuples_) out[encode_tuple(t, m)] = 1;
    return out;
  }
  bool operator==(const DefSet&) const = default;

 private:
  int arity_ = 0;
  std::vector<std::vector<int>> tuples_;
};

// raw structure data as it comes out of the DSL, before validation
struct RelData {
  std::string name;
  int arity = 1;
  std::vector<std::vector<int>> tuples;
};

struct StructureData {
  std::string name;
  int size = 0;
  std::vector<RelData> rels;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;
  void fail(std::string msg) {
    ok = false;
    issues.push_back(std::move(msg));
  }
};

inline ValidationReport validate_structure(const StructureData& d, const Limits& lim = {}) {
  ValidationReport r;
  if (d.name.empty() || !valid_rel_name(d.name)) r.fail("bad structure name '" + d.name + "'");
  if (d.size < 1) r.fail("size must be >= 1");
  if (d.size > lim.size_cap)
    r.fail("size " + std::to_string(d.size) + " exceeds size cap " + std::to_string(lim.size_cap));
  std::vector<std::string> seen;
  for (const auto& rel : d.rels) {
    if (!valid_rel_name(rel.name)) r.fail("bad relation name '" + rel.name + "'");
    if (std::find(seen.begin(), seen.end(), rel.name) != seen.end())
      r.fail("duplicate relation name '" + rel.name + "'");
    seen.push_back(rel.name);
    if (rel.arity < 1) r.fail("relation " + rel.name + ": arity must be >= 1");
    std::vector<std::vector<int>> sorted = rel.tuples;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1]) {
        r.fail("relation " + rel.name + ": duplicate tuple");
        break;
      }
    for (const auto& t : rel.tuples) {
      if (static_cast<int>(t.size()) != rel.arity) {
        r.fail("relation " + rel.name + ": tuple of length " + std::to_string(t.size()) +
               " in relation of arity " + std::to_string(rel.arity));
        break;
      }
      bool range_ok = true;
      for (int v : t) range_ok = range_ok && v >= 0 && v < d.size;
      if (!range_ok) {
        r.fail("relation " + rel.name + ": tuple entry out of range");
        break;
      }
    }
  }
  return r;
}

// An immutable finite relational structure over universe {0..m-1}.
// Interpretations are stored as sorted encoded tuple ranks.
class FinStructure {
 public:
  static FinStructure from_data(const StructureData& d, const Limits& lim = {}) {
    auto rep = validate_structure(d, lim);
    if (!rep.ok) {
      std::string msg = "invalid structure";
      for (const auto& is : rep.issues) msg += "; " + is;
      throw validation_error(msg);
    }
    FinStructure s;
    s.name_ = d.name;
    s.m_ = d.size;
    for (const auto& rel : d.rels) {
      s.sig_.push_back({rel.name, rel.arity});
      std::vector<std::uint64_t> enc;
      enc.reserve(rel.tuples.size());
      for (const auto& t : rel.tuples) enc.push_back(encode_tuple(t, s.m_));
      std::sort(enc.begin(), enc.end());
      s.interp_.push_back(std::move(enc));
    }
    return s;
  }

  const std::string& name() const { return name_; }
  int size() const { return m_; }
  const Signature& signature() const { return sig_; }
  int rel_count() const { return static_cast<int>(sig_.size()); }
  const RelSymbol& symbol(int i) const { return sig_[i]; }

  std::optional<int> rel_index(const std::string& name) const {
    for (int i = 0; i < rel_count(); ++i)
      if (sig_[i].name == name) return i;
    return std::nullopt;
  }

  const std::vector<std::uint64_t>& encoded(int i) const { return interp_[i]; }

  bool holds(int i, std::uint64_t enc) const {
    const auto& v = interp_[i];
    return std::binary_search(v.begin(), v.end(), enc);
  }

  DefSet relation(int i) const {
    std::vector<std::vector<int>> out;
    out.reserve(interp_[i].size());
    for (std::uint64_t e : interp_[i]) out.push_back(decode_tuple(e, m_, sig_[i].arity));
    return DefSet(sig_[i].arity, std::move(out));
  }

  // dense membership mask over m^arity, for evaluation hot loops
  std::vector<char> mask(int i, const Limits& lim = {}) const {
    std::uint64_t cells = pow_u64(m_, sig_[i].arity);
    charge(cells, lim, "relation mask");
    std::vector<char> out(cells, 0);
    for (std::uint64_t e : interp_[i]) out[e] = 1;
    return out;
  }

  StructureData data() const {
    StructureData d;
    d.name = name_;
    d.size = m_;
    for (int i = 0; i < rel_count(); ++i) {
      RelData rel;
      rel.name = sig_[i].name;
      rel.arity = sig_[i].arity;
      for (std::uint64_t e : interp_[i]) rel.tuples.push_back(decode_tuple(e, m_, rel.arity));
      d.rels.push_back(std::move(rel));
    }
    return d;
  }

  // value-preserving copy with one more named relation; the original is untouched
  FinStructure expand_with(const std::string& name, const DefSet& r, const Limits& lim = {}) const {
    if (r.arity() < 1) throw validation_error("expand_with: arity must be >= 1");
    if (r.max_entry() >= m_) throw validation_error("expand_with: tuple entry out of range");
    StructureData d = data();
    RelData rel;
    rel.name = name;
    rel.arity = r.arity();
    rel.tuples = r.tuples();
    d.rels.push_back(std::move(rel));
    return from_data(d, lim);
  }

  FinStructure restrict_signature(const std::vector<std::string>& keep, const Limits& lim = {}) const {
    StructureData d = data();
    std::vector<RelData> kept;
    for (const auto& name : keep) {
      bool found = false;
      for (auto& rel : d.rels)
        if (rel.name == name) {
          kept.push_back(rel);
          found = true;
        }
      if (!found) throw validation_error("restrict_signature: unknown relation '" + name + "'");
    }
    d.rels = std::move(kept);
    return from_data(d, lim);
  }

  FinStructure renamed(const std::string& new_name) const {
    FinStructure s = *this;
    s.name_ = new_name;
    return s;
  }

  bool operator==(const FinStructure&) const = default;

 private:
  std::string name_;
  int m_ = 1;
  Signature sig_;
  std::vector<std::vector<std::uint64_t>> interp_;
};

}  // namespace aritylab
