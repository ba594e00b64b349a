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

#include "hzknots/homfly/homfly.hpp"

namespace hzknots {

/// V(q) = H(q^2, q - q^-1) from the normalized HOMFLY. Throws
/// std::domain_error if H has negative powers of z (links).
LaurentPoly jones(const HomflyPair& h);
LaurentPoly jones(const KnotFamily& family);

enum class JonesExponent {
  /// V(m,n) = q^{2(m-1)} V(m,n-2) + (1 - q^{2(m-1)}) q^{(m+1)(n+1)}
  NPlusOne,
  /// Same with the last exponent (m+1)(n-1).
  NMinusOne,
};

/// Two-step recursion in n for the Jones polynomial of T(m,n), started from
/// V(m,1) = 1 and, for even n, V(m,2) = V of T(2,m) (m odd).
LaurentPoly jones_torus_recursion(int m, int n, JonesExponent exponent = JonesExponent::NPlusOne);

}  // namespace hzknots
