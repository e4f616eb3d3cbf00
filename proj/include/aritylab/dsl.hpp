#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "aritylab/algebra.hpp"
#include "aritylab/core.hpp"
#include "aritylab/factory.hpp"
#include "aritylab/limits.hpp"

namespace aritylab {

// Plain text structure files:
//
//   structure lo3
//   size 3
//   rel K2/2
//   ( 0 , 1 )
//   ...
//
// '#' comments anywhere. Alternatively a single sugar line
//   builder linear|circular|pure <m>
//   builder spherical <m> <n> [variant]
// expands to the corresponding generated structure. Serialization is
// canonical: fixed spacing, relations in signature order, tuples
// sorted, so parse-serialize is a fixpoint on canonical files.

namespace detail {

inline std::vector<std::string> dsl_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else if (c == '(' || c == ')' || c == ',' || c == '/') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
      out.push_back(std::string(1, c));
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline int dsl_int(const std::string& tok, std::size_t at) {
  if (tok.empty()) throw parse_error("expected a number", at);
  for (char c : tok)
    if (c < '0' || c > '9') throw parse_error("expected a number, got '" + tok + "'", at);
  if (tok.size() > 9) throw parse_error("number too large", at);
  return std::stoi(tok);
}

inline FinStructure dsl_builder(const std::vector<std::string>& t, std::size_t at,
                                const Limits& lim) {
  if (t.size() < 3) throw parse_error("builder needs a kind and a size", at);
  const std::string& kind = t[1];
  int m = dsl_int(t[2], at);
  if (kind == "pure" && t.size() == 3) return pure_set(m, lim);
  if (kind == "linear" && t.size() == 3) return linear_order(m, lim);
  if (kind == "circular" && t.size() == 3) return circular_order(m, lim);
  if (kind == "spherical" && t.size() >= 4) {
    int n = dsl_int(t[3], at);
    ChainVariant v = ChainVariant::cyclic;
    std::size_t vi = 4;
    if (vi < t.size() && t[vi] == "--variant") ++vi;
    if (vi < t.size()) {
      auto got = variant_from(t[vi]);
      if (!got) throw parse_error("unknown chain variant '" + t[vi] + "'", at);
      v = *got;
      ++vi;
    }
    if (vi != t.size()) throw parse_error("trailing tokens after builder", at);
    return spherical_chain(m, n, v, lim);
  }
  throw parse_error("unknown builder line", at);
}

}  // namespace detail

inline FinStructure parse_structure_text(const std::string& text, const Limits& lim = {}) {
  StructureData d;
  bool have_name = false, have_size = false;
  std::istringstream in(text);
  std::string line;
  std::size_t at = 0;
  while (std::getline(in, line)) {
    std::size_t line_at = at;
    at += line.size() + 1;
    std::vector<std::string> t = detail::dsl_tokens(line);
    if (t.empty()) continue;
    if (t[0] == "builder") {
      if (have_name || have_size) throw parse_error("builder must be the whole file", line_at);
      FinStructure built = detail::dsl_builder(t, line_at, lim);
      while (std::getline(in, line)) {
        std::size_t rest_at = at;
        at += line.size() + 1;
        if (!detail::dsl_tokens(line).empty())
          throw parse_error("content after builder line", rest_at);
      }
      return built;
    }
    if (t[0] == "structure") {
      if (have_name || t.size() != 2) throw parse_error("bad structure line", line_at);
      d.name = t[1];
      have_name = true;
    } else if (t[0] == "size") {
      if (!have_name || have_size || t.size() != 2) throw parse_error("bad size line", line_at);
      d.size = detail::dsl_int(t[1], line_at);
      have_size = true;
    } else if (t[0] == "rel") {
      // rel Name / arity
      if (!have_size || t.size() != 4 || t[2] != "/")
        throw parse_error("bad rel line, want: rel Name/arity", line_at);
      RelData r;
      r.name = t[1];
      r.arity = detail::dsl_int(t[3], line_at);
      d.rels.push_back(std::move(r));
    } else if (t[0] == "(") {
      if (d.rels.empty()) throw parse_error("tuple before any rel line", line_at);
      if (t.back() != ")") throw parse_error("tuple line must end with ')'", line_at);
      std::vector<int> tup;
      for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        if (i % 2 == 1)
          tup.push_back(detail::dsl_int(t[i], line_at));
        else if (t[i] != ",")
          throw parse_error("expected ',' between tuple entries", line_at);
      }
      if (t.size() % 2 != 1) throw parse_error("malformed tuple line", line_at);
      d.rels.back().tuples.push_back(std::move(tup));
    } else {
      throw parse_error("unrecognized line '" + t[0] + "'", line_at);
    }
  }
  if (!have_name) throw parse_error("missing structure line", 0);
  if (!have_size) throw parse_error("missing size line", 0);
  return FinStructure::from_data(d, lim);
}

inline std::string serialize_structure(const FinStructure& s) {
  std::ostringstream o;
  o << "structure " << s.name() << "\n";
  o << "size " << s.size() << "\n";
  for (int i = 0; i < s.rel_count(); ++i) {
    o << "rel " << s.symbol(i).name << "/" << s.symbol(i).arity << "\n";
    DefSet rel = s.relation(i);
    for (const std::vector<int>& t : rel.tuples()) {
      o << "(";
      for (std::size_t q = 0; q < t.size(); ++q) o << (q ? " , " : " ") << t[q];
      o << " )\n";
    }
  }
  return o.str();
}

}  // namespace aritylab
