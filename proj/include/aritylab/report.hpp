#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "aritylab/arity.hpp"
#include "aritylab/core.hpp"
#include "aritylab/factory.hpp"
#include "aritylab/group.hpp"
#include "aritylab/orbits.hpp"

namespace aritylab {

// ordered_json keeps insertion order, which is what makes two runs of
// the same command byte-identical.
using ojson = nlohmann::ordered_json;

inline constexpr const char* kToolName = "aritylab";
inline constexpr const char* kToolVersion = "0.1.0";

inline ojson report_envelope(const std::string& verb) {
  ojson j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["verb"] = verb;
  return j;
}

inline ojson json_of(const DefSet& d) {
  ojson j;
  j["arity"] = d.arity();
  j["count"] = d.size();
  j["tuples"] = d.tuples();
  return j;
}

inline ojson json_of(const FinStructure& s) {
  ojson j;
  j["name"] = s.name();
  j["size"] = s.size();
  ojson rels = ojson::array();
  for (int i = 0; i < s.rel_count(); ++i) {
    ojson r;
    r["name"] = s.symbol(i).name;
    r["arity"] = s.symbol(i).arity;
    r["count"] = s.relation(i).size();
    rels.push_back(std::move(r));
  }
  j["relations"] = std::move(rels);
  return j;
}

inline ojson json_of(const AutGroup& g) {
  ojson j;
  j["degree"] = g.degree;
  j["order"] = g.order;
  j["generators"] = g.generators;
  return j;
}

inline ojson json_of(const TuplePartition& p) {
  ojson j;
  j["k"] = p.k;
  j["classes"] = p.class_count;
  ojson reps = ojson::array();
  for (int c = 0; c < p.class_count; ++c) reps.push_back(p.rep_tuple(c));
  j["reps"] = std::move(reps);
  j["class_of"] = p.class_of;
  return j;
}

inline ojson json_of(const AxiomVerdict& v) {
  ojson j;
  j["axiom"] = v.axiom;
  j["formula"] = v.formula;
  j["holds_full"] = v.holds_full;
  j["holds_distinct"] = v.holds_distinct;
  if (!v.holds_full) j["cex_full"] = v.cex_full;
  if (!v.holds_distinct) j["cex_distinct"] = v.cex_distinct;
  return j;
}

inline ojson json_of(const StructureArityReport& r) {
  ojson j;
  j["k_max"] = r.k_max;
  j["arity"] = r.value;
  j["level"] = r.level;
  return j;
}

inline ojson json_of(const WitnessReport& r) {
  ojson j;
  j["found"] = r.found;
  j["degree"] = {r.degree.m, r.degree.r};
  j["lex_order"] = r.lex_order;
  j["optimal"] = r.optimal;
  j["witnesses"] = r.names;
  return j;
}

}  // namespace aritylab
