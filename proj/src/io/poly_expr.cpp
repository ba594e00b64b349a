// Copyright 2026 The hzknots Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hzknots/io/poly_expr.hpp"

#include <algorithm>
#include <cctype>
#include <climits>

namespace hzknots {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprNode parse() {
    ExprNode e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprNode expr() {
    ExprNode lhs = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      const std::size_t at = pos_++;
      ExprNode n;
      n.kind = c == '+' ? ExprNode::Kind::Sum : ExprNode::Kind::Difference;
      n.position = at;
      n.children.push_back(std::move(lhs));
      n.children.push_back(term());
      lhs = std::move(n);
    }
    return lhs;
  }

  ExprNode term() {
    ExprNode lhs = unary();
    while (peek() == '*') {
      const std::size_t at = pos_++;
      ExprNode n;
      n.kind = ExprNode::Kind::Product;
      n.position = at;
      n.children.push_back(std::move(lhs));
      n.children.push_back(unary());
      lhs = std::move(n);
    }
    return lhs;
  }

  ExprNode unary() {
    if (peek() == '-') {
      ExprNode n;
      n.kind = ExprNode::Kind::Negate;
      n.position = pos_++;
      n.children.push_back(unary());
      return n;
    }
    return power();
  }

  ExprNode power() {
    ExprNode base = atom();
    if (peek() != '^') return base;
    ExprNode n;
    n.kind = ExprNode::Kind::Power;
    n.position = pos_++;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 9) throw ParseError(at, "exponent too large");
    n.exponent = std::stoi(d) * (negative ? -1 : 1);
    n.children.push_back(std::move(base));
    return n;
  }

  ExprNode atom() {
    const char c = peek();
    ExprNode n;
    n.position = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      n.kind = ExprNode::Kind::Number;
      std::string text = digits();
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        const std::string den = digits();
        if (BigInt(den) == 0) throw ParseError(at, "zero denominator");
        text += "/" + den;
      }
      n.value = BigRational(text);
      n.value.canonicalize();
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      n.kind = ExprNode::Kind::Variable;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      n.name = std::string(text_.substr(start, pos_ - start));
      return n;
    }
    if (c == '(') {
      ++pos_;
      ExprNode inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse_poly_expr(std::string_view text) { return {std::string(text), Parser(text).parse()}; }

LaurentPoly to_poly(const ExprNode& node, const Variables& vars) {
  using K = ExprNode::Kind;
  switch (node.kind) {
    case K::Number:
      return LaurentPoly::constant(node.value, vars);
    case K::Variable: {
      auto it = std::find(vars.begin(), vars.end(), node.name);
      if (it == vars.end()) throw ParseError(node.position, "unknown variable '" + node.name + "'");
      return LaurentPoly::variable(vars, static_cast<std::size_t>(it - vars.begin()));
    }
    case K::Power: {
      LaurentPoly base = to_poly(node.children[0], vars);
      if (node.exponent >= 0) return base.pow(static_cast<unsigned>(node.exponent));
      if (!base.is_monomial()) throw ParseError(node.position, "negative power of a non-monomial");
      const auto& t = base.trailing_term();
      const int e = node.exponent;
      BigRational c = 1;
      for (int i = 0; i < -e; ++i) c /= t.coeff;
      return LaurentPoly::monomial(vars, {t.exp[0] * e, t.exp[1] * e}, c);
    }
    case K::Product:
      return to_poly(node.children[0], vars) * to_poly(node.children[1], vars);
    case K::Sum:
      return to_poly(node.children[0], vars) + to_poly(node.children[1], vars);
    case K::Difference:
      return to_poly(node.children[0], vars) - to_poly(node.children[1], vars);
    case K::Negate:
      return -to_poly(node.children[0], vars);
  }
  return LaurentPoly(vars);
}

LaurentPoly parse_poly(std::string_view text, const Variables& vars) { return to_poly(parse_poly_expr(text).root, vars); }

std::string render(const ExprNode& node) {
  using K = ExprNode::Kind;
  switch (node.kind) {
    case K::Number:
      return to_string(node.value);
    case K::Variable:
      return node.name;
    case K::Power:
      return "(" + render(node.children[0]) + ")^" + std::to_string(node.exponent);
    case K::Product:
      return "(" + render(node.children[0]) + "*" + render(node.children[1]) + ")";
    case K::Sum:
      return "(" + render(node.children[0]) + " + " + render(node.children[1]) + ")";
    case K::Difference:
      return "(" + render(node.children[0]) + " - " + render(node.children[1]) + ")";
    case K::Negate:
      return "-(" + render(node.children[0]) + ")";
  }
  return {};
}

}  // namespace hzknots
