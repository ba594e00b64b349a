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

#include "hzknots/homfly/jones.hpp"

#include <stdexcept>

namespace hzknots {

namespace {

const Variables kQVar{"q"};

LaurentPoly qpow(int e) { return LaurentPoly::variable(kQVar, 0, e); }

}  // namespace

LaurentPoly jones(const HomflyPair& h) {
  if (h.normalized.min_exponent(1) < 0) throw std::domain_error("Jones substitution needs nonnegative z powers");
  return h.normalized.compose(kQVar, {qpow(2), qpow(1) - qpow(-1)});
}

LaurentPoly jones(const KnotFamily& family) { return jones(homfly_family(family)); }

LaurentPoly jones_torus_recursion(int m, int n, JonesExponent exponent) {
  if (m < 1 || n < 1) throw std::invalid_argument("torus parameters must be >= 1");
  LaurentPoly v;
  int start;
  if (n % 2 == 1) {
    v = LaurentPoly::constant(1, kQVar);
    start = 1;
  } else {
    if (m % 2 == 0) throw std::invalid_argument("T(m,n) with m, n even is a link");
    v = jones(homfly_torus2(m)).embed(kQVar);
    start = 2;
  }
  const LaurentPoly one = LaurentPoly::constant(1, kQVar);
  const LaurentPoly step = qpow(2 * (m - 1));
  for (int i = start + 2; i <= n; i += 2) {
    const int e = exponent == JonesExponent::NPlusOne ? (m + 1) * (i + 1) : (m + 1) * (i - 1);
    v = step * v + (one - step) * qpow(e);
  }
  return v;
}

}  // namespace hzknots
