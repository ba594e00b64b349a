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

#include <doctest.h>

#include <random>

#include "../support/helpers.hpp"

using namespace hzknots;
using namespace hzknots::testing;

namespace {

ExprNode leaf(std::mt19937_64& rng) {
  ExprNode n;
  if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    n.kind = ExprNode::Kind::Number;
    n.value = BigRational(std::uniform_int_distribution<int>(0, 12)(rng), std::uniform_int_distribution<int>(1, 5)(rng));
    n.value.canonicalize();
  } else {
    n.kind = ExprNode::Kind::Variable;
    n.name = std::uniform_int_distribution<int>(0, 1)(rng) ? "v" : "z";
  }
  return n;
}

ExprNode random_tree(std::mt19937_64& rng, int depth) {
  if (depth == 0) return leaf(rng);
  ExprNode n;
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0:
      return leaf(rng);
    case 1: {
      n.kind = ExprNode::Kind::Power;
      n.children.push_back(random_tree(rng, depth - 1));
      const bool variable = n.children[0].kind == ExprNode::Kind::Variable;
      n.exponent = std::uniform_int_distribution<int>(variable ? -3 : 0, 3)(rng);
      return n;
    }
    case 2:
      n.kind = ExprNode::Kind::Negate;
      n.children.push_back(random_tree(rng, depth - 1));
      return n;
    case 3:
      n.kind = ExprNode::Kind::Product;
      break;
    case 4:
      n.kind = ExprNode::Kind::Sum;
      break;
    default:
      n.kind = ExprNode::Kind::Difference;
      break;
  }
  n.children.push_back(random_tree(rng, depth - 1));
  n.children.push_back(random_tree(rng, depth - 1));
  return n;
}

}  // namespace

TEST_CASE("parser round trip on random trees") {
  std::mt19937_64 rng(20261015);
  for (int i = 0; i < 1000; ++i) {
    const ExprNode tree = random_tree(rng, 4);
    const std::string text = render(tree);
    const PolyExpr back = parse_poly_expr(text);
    CHECK(render(back.root) == text);
    CHECK(to_poly(back.root, kVZ) == to_poly(tree, kVZ));
  }
}

TEST_CASE("canonical rendering parses back") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random_poly(rng, kVZ, 6, -4, 4);
    CHECK(parse_poly(p.to_string(), kVZ) == p);
  }
  CHECK(parse_poly("-1*v^4 + 2*v^2 + 1*v^2*z^2").to_string() == "-1*v^4 + 2*v^2 + 1*v^2*z^2");
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* text) {
    try {
      parse_poly(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position_of("v^2 + ") == 6);
  CHECK(position_of("v ** 2") == 3);
  CHECK(position_of("(v + z") == 6);
  CHECK(position_of("w + 1") == 0);
  CHECK(position_of("(v + z)^-1") >= 0);
  CHECK(position_of("v^-2*z") == -1);
}
