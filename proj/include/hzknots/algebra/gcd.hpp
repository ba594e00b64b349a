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

#include <optional>

#include "hzknots/algebra/laurent_poly.hpp"

namespace hzknots {

/// gcd up to monomial units. The result is an ordinary polynomial (no
/// negative exponents, no monomial factor) with positive trailing coefficient.
/// Throws std::invalid_argument if either input is zero.
LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& q);

struct GcdCofactors {
  LaurentPoly gcd;
  LaurentPoly p_cofactor;  // p == gcd * p_cofactor
  LaurentPoly q_cofactor;  // q == gcd * q_cofactor
};

GcdCofactors poly_gcd_cofactors(const LaurentPoly& p, const LaurentPoly& q);

/// p / d when d divides p in the Laurent ring, otherwise nullopt.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d);

}  // namespace hzknots
