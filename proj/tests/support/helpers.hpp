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

#include <random>
#include <string>

#include "hzknots/algebra/rational_func.hpp"
#include "hzknots/io/poly_expr.hpp"

namespace hzknots::testing {

inline const Variables kVZ{"v", "z"};
inline const Variables kHZ{"lambda", "q"};
inline const Variables kQ{"q"};

inline LaurentPoly P(const std::string& text, const Variables& vars = kHZ) { return parse_poly(text, vars); }

inline RationalFunc R(const std::string& num, const std::string& den, const Variables& vars = kHZ) {
  return RationalFunc::reduce(P(num, vars), P(den, vars));
}

inline LaurentPoly random_poly(std::mt19937_64& rng, const Variables& vars, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> e(lo, hi), c(-9, 9), d(1, 4);
  std::vector<LaurentPoly::Term> out;
  for (int i = 0; i < terms; ++i) {
    LaurentPoly::Exponent x{vars.size() > 0 ? e(rng) : 0, vars.size() > 1 ? e(rng) : 0};
    BigRational coeff(c(rng), d(rng));
    coeff.canonicalize();
    out.push_back({x, coeff});
  }
  return LaurentPoly(vars, std::move(out));
}

}  // namespace hzknots::testing
