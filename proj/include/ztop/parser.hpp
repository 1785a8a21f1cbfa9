#pragma once

// Recursive-descent parser for polynomial expressions.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER ('/' INTEGER)? | NAME | '(' expr ')'
//
// Implicit multiplication is rejected; '/' only forms rational literals.

#include "ztop/errors.hpp"
#include "ztop/poly.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace ztop {

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Integer integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc = acc * unary();
    // Two operands in a row means implicit multiplication.
    char c = peek();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
      throw SyntaxError("implicit multiplication is not allowed", pos_);
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      std::size_t at = pos_;
      Integer e = integer_literal();
      if (e > 10000) throw SyntaxError("exponent too large", at);
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly primary() {
    char c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer_literal();
      Integer den = 1;
      if (accept('/')) {
        std::size_t at = pos_;
        den = integer_literal();
        if (den == 0) throw SyntaxError("zero denominator", at);
      }
      return Poly::constant(vars_.size(), Rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Poly::variable(vars_.size(), i);
      throw UnknownVariable(name, start);
    }
    if (c == '\0') throw SyntaxError("unexpected end of input", pos_);
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` as a polynomial over `variables`.
inline Poly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
  if (variables.empty()) throw std::invalid_argument("parse_poly needs at least one variable");
  return detail::PolyParser(text, variables).parse();
}

/// Two-variable entry point used by the curve pipelines.
inline Poly parse_curve(std::string_view text) { return parse_poly(text, {"x", "y"}); }

}  // namespace ztop
