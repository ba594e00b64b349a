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

// Dense integer polynomials used behind the exact kernel: univariate Z[y] and
// bivariate Z[y][x] (outer index = power of x). Not part of the public API.

#include <optional>
#include <vector>

#include "hzknots/algebra/bigrational.hpp"

namespace hzknots::detail {

using ZPoly = std::vector<BigInt>;
using BiPoly = std::vector<ZPoly>;

void trim(ZPoly& p);
void trim(BiPoly& p);
int degree(const ZPoly& p);  // -1 for zero
int degree_x(const BiPoly& p);
int degree_y(const BiPoly& p);

ZPoly mul(const ZPoly& a, const ZPoly& b);
void sub_mul_into(ZPoly& acc, const ZPoly& a, const ZPoly& b);  // acc -= a*b
BigInt content(const ZPoly& p);
ZPoly scalar_div_exact(const ZPoly& p, const BigInt& c);

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);
std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b);

/// gcd over Z[y] with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// gcd over Z[y][x] (x primary) with positive leading coefficient; integer and
/// Z[y]-contents handled exactly. Brown's dense modular algorithm.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

}  // namespace hzknots::detail
