#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "projew/errors.hpp"
#include "projew/exactmath/ratfunc.hpp"

namespace projew::exprparse {

using exactmath::BigInt;
using exactmath::BigRational;
using exactmath::MPoly;
using exactmath::RatFunc;
using exactmath::VarNames;

// Recursive-descent parser for polynomial/rational expressions over the two
// chart variables. Grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | power
//   power   := primary ('^' INTEGER)*
//   primary := INTEGER | IDENT | '(' expr ')'
//
// Multiplication is always explicit ("xy" is a single, unknown identifier),
// '^' takes a nonnegative integer literal, and rational literals are just
// INTEGER '/' INTEGER via ordinary division. Division by a subexpression
// that is identically zero is rejected at parse time.
class ExprParser {
 public:
  ExprParser(std::string_view src, VarNames vars)
      : src_(src), vars_(std::move(vars)) {}

  RatFunc parse() {
    RatFunc value = parse_expr();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected trailing input", pos_);
    return value;
  }

 private:
  static constexpr unsigned kMaxExponent = 65535;

  RatFunc parse_expr() {
    RatFunc acc = parse_term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        acc += parse_term();
      } else if (accept('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  RatFunc parse_term() {
    RatFunc acc = parse_factor();
    for (;;) {
      skip_ws();
      std::size_t op_pos = pos_;
      if (accept('*')) {
        acc *= parse_factor();
      } else if (accept('/')) {
        RatFunc rhs = parse_factor();
        if (rhs.is_zero())
          throw ParseError("division by an expression that is identically zero",
                           op_pos);
        acc /= rhs;
      } else {
        return acc;
      }
    }
  }

  RatFunc parse_factor() {
    skip_ws();
    if (accept('-')) return -parse_factor();
    return parse_power();
  }

  RatFunc parse_power() {
    RatFunc base = parse_primary();
    for (;;) {
      skip_ws();
      if (!accept('^')) return base;
      skip_ws();
      std::size_t exp_pos = pos_;
      if (pos_ >= src_.size() || !std::isdigit(byte(pos_)))
        throw ParseError("exponent must be a nonnegative integer literal",
                         exp_pos);
      BigInt e = read_integer();
      if (e > kMaxExponent)
        throw ParseError("exponent too large", exp_pos);
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
  }

  RatFunc parse_primary() {
    skip_ws();
    if (pos_ >= src_.size())
      throw ParseError("unexpected end of expression", pos_);
    char c = byte(pos_);
    if (std::isdigit(c)) {
      return RatFunc(exactmath::make_rational(read_integer(), 1), vars_);
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(byte(pos_)) || byte(pos_) == '_'))
        ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      if (name == vars_.first) return RatFunc::variable(0, vars_);
      if (name == vars_.second) return RatFunc::variable(1, vars_);
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    if (accept('(')) {
      RatFunc inner = parse_expr();
      skip_ws();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  BigInt read_integer() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(byte(pos_))) ++pos_;
    return BigInt(std::string(src_.substr(start, pos_ - start)), 10);
  }

  unsigned char byte(std::size_t i) const {
    return static_cast<unsigned char>(src_[i]);
  }

  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(byte(pos_))) ++pos_;
  }

  std::string_view src_;
  VarNames vars_;
  std::size_t pos_ = 0;
};

inline RatFunc parse_expr(std::string_view src, VarNames vars = {}) {
  return ExprParser(src, std::move(vars)).parse();
}

}  // namespace projew::exprparse
