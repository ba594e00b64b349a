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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hzknots/algebra/laurent_poly.hpp"

namespace hzknots {

/// Syntax or evaluation error in a polynomial expression; `position` is the
/// 0-based byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Expression tree for the text grammar
///
///   expr  := term (('+' | '-') term)*
///   term  := unary ('*' unary)*
///   unary := '-' unary | power
///   power := atom ('^' '-'? digits)?
///   atom  := digits ('/' digits)? | identifier | '(' expr ')'
struct ExprNode {
  enum class Kind { Number, Variable, Power, Product, Sum, Difference, Negate };
  Kind kind = Kind::Number;
  BigRational value;          // Number
  std::string name;           // Variable
  int exponent = 0;           // Power
  std::size_t position = 0;   // source offset
  std::vector<ExprNode> children;
};

struct PolyExpr {
  std::string source;
  ExprNode root;
};

PolyExpr parse_poly_expr(std::string_view text);

/// Evaluates the tree in the ring `vars`; unknown identifiers and negative
/// powers of non-monomials raise ParseError.
LaurentPoly to_poly(const ExprNode& node, const Variables& vars);

/// parse_poly_expr followed by to_poly.
LaurentPoly parse_poly(std::string_view text, const Variables& vars = {"v", "z"});

/// Fully parenthesized text that parses back to an equal tree value.
std::string render(const ExprNode& node);

}  // namespace hzknots
