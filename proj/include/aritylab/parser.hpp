#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "aritylab/formula.hpp"
#include "aritylab/limits.hpp"

namespace aritylab {

// Recursive descent for:
//   iff   := impl ('<->' impl)*          left associative
//   impl  := or ('->' impl)?             right associative
//   or    := and ('|' and)*
//   and   := unary ('&' unary)*
//   unary := '!' unary | quantifier | primary
//   quant := ('forall'|'exists') var ( quant | '(' iff ')' )
//   primary := '(' iff ')' | Rel '(' var (',' var)* ')' | var '=' var
// '#' starts a comment running to end of line.
namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula run() {
    Formula f = parse_iff();
    skip();
    if (pos_ != text_.size()) throw parse_error("trailing input after formula", pos_);
    return f;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool literal(std::string_view lit) {
    skip();
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view lit) {
    if (!literal(lit)) throw parse_error("expected '" + std::string(lit) + "'", pos_);
  }

  static bool ident_head(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  }
  static bool ident_tail(char c) {
    return ident_head(c) || (c >= '0' && c <= '9') || c == '@';
  }

  std::string ident() {
    skip();
    if (pos_ >= text_.size() || !ident_head(text_[pos_]))
      throw parse_error("expected identifier", pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_tail(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // peek an identifier without consuming
  std::string peek_ident() {
    std::size_t save = pos_;
    skip();
    if (pos_ >= text_.size() || !ident_head(text_[pos_])) {
      pos_ = save;
      return "";
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_tail(text_[pos_])) ++pos_;
    std::string word(text_.substr(start, pos_ - start));
    pos_ = save;
    return word;
  }

  Formula parse_iff() {
    Formula f = parse_impl();
    while (literal("<->")) f = f_iff(std::move(f), parse_impl());
    return f;
  }

  Formula parse_impl() {
    Formula f = parse_or();
    skip();
    // '->' but not '<->', which parse_iff consumed already
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return f_implies(std::move(f), parse_impl());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (true) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        f = f_or(std::move(f), parse_and());
      } else {
        break;
      }
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (literal("&")) f = f_and(std::move(f), parse_unary());
    return f;
  }

  Formula parse_unary() {
    skip();
    if (literal("!")) return f_not(parse_unary());
    std::string word = peek_ident();
    if (word == "forall" || word == "exists") return parse_quant();
    return parse_primary();
  }

  Formula parse_quant() {
    std::string word = ident();
    FKind kind = word == "forall" ? FKind::Forall : FKind::Exists;
    std::string v = ident();
    if (v == "forall" || v == "exists")
      throw parse_error("'" + v + "' cannot be a variable name", pos_);
    std::string next = peek_ident();
    Formula body;
    if (next == "forall" || next == "exists") {
      body = parse_quant();
    } else {
      expect("(");
      body = parse_iff();
      expect(")");
    }
    return f_quant(kind, std::move(v), std::move(body));
  }

  Formula parse_primary() {
    skip();
    if (literal("(")) {
      Formula f = parse_iff();
      expect(")");
      return f;
    }
    std::size_t at = pos_;
    std::string name = ident();
    if (name == "forall" || name == "exists")
      throw parse_error("unexpected quantifier", at);
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::vector<std::string> args;
      args.push_back(ident());
      while (literal(",")) args.push_back(ident());
      expect(")");
      return f_atom(std::move(name), std::move(args));
    }
    if (literal("=")) return f_eq(std::move(name), ident());
    throw parse_error("expected '(' or '=' after identifier", pos_);
  }
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) {
  return detail::FormulaParser(text).run();
}

}  // namespace aritylab
