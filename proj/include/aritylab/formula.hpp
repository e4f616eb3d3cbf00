#pragma once

#include <string>
#include <vector>

#include "aritylab/limits.hpp"

namespace aritylab {

enum class FKind { Atom, Eq, Not, And, Or, Implies, Iff, Forall, Exists };

// First order formulas over a relational signature, with equality built in.
// Plain value type: connectives hold their operands in kids.
struct Formula {
  FKind kind = FKind::Atom;
  std::string rel;                 // Atom: relation name
  std::vector<std::string> vars;   // Atom: argument variables; Eq: the two sides
  std::string var;                 // Forall / Exists: bound variable
  std::vector<Formula> kids;
};

inline Formula f_atom(std::string rel, std::vector<std::string> vars) {
  Formula f;
  f.kind = FKind::Atom;
  f.rel = std::move(rel);
  f.vars = std::move(vars);
  return f;
}
inline Formula f_eq(std::string a, std::string b) {
  Formula f;
  f.kind = FKind::Eq;
  f.vars = {std::move(a), std::move(b)};
  return f;
}
inline Formula f_unary(FKind k, Formula a) {
  Formula f;
  f.kind = k;
  f.kids.push_back(std::move(a));
  return f;
}
inline Formula f_binary(FKind k, Formula a, Formula b) {
  Formula f;
  f.kind = k;
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}
inline Formula f_not(Formula a) { return f_unary(FKind::Not, std::move(a)); }
inline Formula f_and(Formula a, Formula b) { return f_binary(FKind::And, std::move(a), std::move(b)); }
inline Formula f_or(Formula a, Formula b) { return f_binary(FKind::Or, std::move(a), std::move(b)); }
inline Formula f_implies(Formula a, Formula b) { return f_binary(FKind::Implies, std::move(a), std::move(b)); }
inline Formula f_iff(Formula a, Formula b) { return f_binary(FKind::Iff, std::move(a), std::move(b)); }
inline Formula f_quant(FKind k, std::string v, Formula body) {
  Formula f;
  f.kind = k;
  f.var = std::move(v);
  f.kids.push_back(std::move(body));
  return f;
}
inline Formula f_forall(std::string v, Formula body) { return f_quant(FKind::Forall, std::move(v), std::move(body)); }
inline Formula f_exists(std::string v, Formula body) { return f_quant(FKind::Exists, std::move(v), std::move(body)); }

// folds a nonempty list with And or Or, left associative
inline Formula f_fold(FKind k, std::vector<Formula> fs) {
  if (fs.empty()) throw validation_error("f_fold: empty operand list");
  Formula acc = std::move(fs[0]);
  for (std::size_t i = 1; i < fs.size(); ++i) acc = f_binary(k, std::move(acc), std::move(fs[i]));
  return acc;
}

namespace detail {
inline void free_vars_walk(const Formula& f, std::vector<std::string>& bound,
                           std::vector<std::string>& out) {
  auto note = [&](const std::string& v) {
    for (const auto& b : bound)
      if (b == v) return;
    for (const auto& o : out)
      if (o == v) return;
    out.push_back(v);
  };
  switch (f.kind) {
    case FKind::Atom:
    case FKind::Eq:
      for (const auto& v : f.vars) note(v);
      break;
    case FKind::Forall:
    case FKind::Exists:
      bound.push_back(f.var);
      free_vars_walk(f.kids[0], bound, out);
      bound.pop_back();
      break;
    default:
      for (const auto& k : f.kids) free_vars_walk(k, bound, out);
  }
}
}  // namespace detail

// free variables in first occurrence order
inline std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound, out;
  detail::free_vars_walk(f, bound, out);
  return out;
}

namespace detail {
inline int prec(FKind k) {
  switch (k) {
    case FKind::Iff: return 0;
    case FKind::Implies: return 1;
    case FKind::Or: return 2;
    case FKind::And: return 3;
    case FKind::Not: case FKind::Forall: case FKind::Exists: return 4;
    default: return 5;
  }
}
inline void print(const Formula& f, int parent, std::string& out) {
  int p = prec(f.kind);
  bool wrap = p < parent;
  if (wrap) out += "(";
  switch (f.kind) {
    case FKind::Atom:
      out += f.rel + "(";
      for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (i) out += ", ";
        out += f.vars[i];
      }
      out += ")";
      break;
    case FKind::Eq:
      out += f.vars[0] + " = " + f.vars[1];
      break;
    case FKind::Not:
      out += "!";
      print(f.kids[0], 4, out);
      break;
    case FKind::And:
      print(f.kids[0], 3, out); out += " & "; print(f.kids[1], 4, out);
      break;
    case FKind::Or:
      print(f.kids[0], 2, out); out += " | "; print(f.kids[1], 3, out);
      break;
    case FKind::Implies:
      print(f.kids[0], 2, out); out += " -> "; print(f.kids[1], 1, out);
      break;
    case FKind::Iff:
      print(f.kids[0], 0, out); out += " <-> "; print(f.kids[1], 1, out);
      break;
    case FKind::Forall:
    case FKind::Exists:
      out += (f.kind == FKind::Forall ? "forall " : "exists ") + f.var + " (";
      print(f.kids[0], 0, out);
      out += ")";
      break;
  }
  if (wrap) out += ")";
}
}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print(f, 0, out);
  return out;
}

}  // namespace aritylab
