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

#include <numeric>
#include <stdexcept>

#include "hzknots/hz/hz.hpp"

namespace hzknots {

namespace {

LaurentPoly lq(int el, int eq, const BigRational& c = 1) { return LaurentPoly::monomial(kHZVars, {el, eq}, c); }
LaurentPoly Q(int e) { return lq(0, e); }
LaurentPoly L(int e = 1) { return lq(e, 0); }
LaurentPoly one() { return LaurentPoly::constant(1, kHZVars); }
// 1 - s lambda^d q^k
LaurentPoly f(int k, int s = 1, int d = 1) { return one() - lq(d, k, s); }

struct Parts {
  LaurentPoly first;
  LaurentPoly correction;
  LaurentPoly den;
};

Parts torus_parts(int m, int n) {
  if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw std::invalid_argument("torus HZ formula needs coprime m, n >= 1");
  LaurentPoly num = L(), den = one();
  for (int j = 0; j <= m - 2; ++j) num *= f((m + 1) * n + m - 2 - 2 * j);
  for (int j = 0; j <= m; ++j) den *= f((m - 1) * n + m - 2 * j);
  return {num, LaurentPoly(kHZVars), den};
}

Parts twisted_parts(FamilyId id, int n) {
  switch (id) {
    case FamilyId::Fam_2k_2:
      return {L() * f(-5, -1) * f(3 * n - 8, 1, 2),
              -L(2) * Q(n - 3) *
                  ((Q(2) + one() + Q(-2)) * f(n - 7) + Q(-3) * (Q(n - 3) + Q(3 - n)) * f(n - 1) - Q(n) * f(-n - 7)),
              f(-1) * f(-3) * f(n - 5) * f(n - 3) * f(n - 1)};
    case FamilyId::Fam_2k1_2:
      return {L() * f(3) * f(n - 2) * f(2 * n + 3), -L(2) * f(n + 2) * (Q(n) - Q(5)) * f(n - 3, 1, 0),
              f(1) * f(3) * f(n - 2) * f(n) * f(n + 2)};
    case FamilyId::Fam_2k1_1_2:
      return {L() * f(n - 9, -1) * f(3 * n - 7, -1), -L(2) * Q(2 * n - 8) * (Q(-2) + Q(2)) * (Q(3 - n) + Q(n - 3)),
              f(n - 7) * f(n - 5) * f(n - 3) * f(n - 1)};
    case FamilyId::Fam_2k2_3:
      return {L() * f(n - 2) * f(3 * n - 2), -L(2) * Q(2 * n - 2) * (Q(1) - Q(-1)) * (Q(n - 5) - Q(5 - n)),
              f(n - 4) * f(n - 2) * f(n) * f(n + 2)};
    case FamilyId::App_2k_1_1_2:
      return {L() * f(n - 13) * f(3 * n - 11),
              -L(2) * Q(2 * n - 12) * (Q(1) - Q(-1)) * (Q(2) + Q(-2)) * (Q(4 - n) - Q(n - 4)),
              f(n - 9) * f(n - 7) * f(n - 5) * f(n - 3)};
    case FamilyId::App_2_2km1_1_2:
      return {L() * f(-7) * f(1) * f(n - 7) * f(2 * n - 5),
              L() * (L() * Q(n - 2) * f(-7) *
                         ((Q(5 - n) + Q(n - 5)) * f(n - 7) + Q(-1) * f(3, -1) * (Q(n - 8) - one())) +
                     L() * Q(-5) * f(1) *
                         (f(3 * n - 13) * (one() - Q(2)).pow(2) - Q(n) * f(1, -1) * f(n - 10, 1, 0)) -
                     L() * Q(2 * n - 11) * (Q(2) + Q(-2)) * f(1) * f(3 - n)),
              f(-3) * f(-1) * f(1) * f(n - 7) * f(n - 5) * f(n - 3)};
    case FamilyId::App_4_2k2:
      return {L() * f(-9, -1) * f(n - 7) * f(2 * n - 7, -1) * f(n - 10, -1, 2),
              L() * (-L() * Q(n - 7) * f(-9, -1) *
                         (Q(2) * f(-5) * f(2 * n - 9, -1) + Q(-2) * f(n - 2, 1, 0) * f(n - 4, -1, 2)) -
                     L() * Q(n - 3) * f(-9) * (one() + Q(n - 10)) * f(n - 8, -1, 2) -
                     L() * Q(-3) * (f(-7, -1) * f(4 * n - 20, 1, 2) * BigRational(2) + Q(2 * n - 14) * f(-1).pow(2) * f(3)) +
                     L(2) * Q(-8) * BigRational(2) *
                         (f(n - 3) * (one() + Q(3 * n - 14)) + Q(n + 1) * (Q(1) + Q(-1)) * f(2 * n - 19))),
              f(-5) * f(-3) * f(-1) * f(n - 9) * f(n - 7) * f(n - 5) * f(n - 3)};
    case FamilyId::App_2k2_1_3:
      return {L() * f(-11, -1) * f(n - 5) * f(2 * n - 13, -1),
              L(2) * Q(-7) *
                  (f(n, 1, 0) * f(n - 2, 1, 0) * f(n - 13) -
                   Q(n - 5) * (Q(-2) + Q(2)) * (Q(n - 5) + Q(5 - n)) * f(n - 5)),
              f(-3) * f(-5) * f(n - 9) * f(n - 7) * f(n - 5)};
    default:
      throw std::invalid_argument("no twisted closed form for this family");
  }
}

Parts pretzel_parts(int k) {
  return {L() * f(13 - 2 * k) * f(3 * (1 - 2 * k)), LaurentPoly(kHZVars),
          f(1 - 2 * k) * f(3 - 2 * k) * f(5 - 2 * k) * f(7 - 2 * k)};
}

Parts family_parts(const KnotFamily& family, bool extrapolate) {
  validate(family, extrapolate);
  switch (family.id) {
    case FamilyId::Unknot:
      return torus_parts(1, 1);
    case FamilyId::Torus2n:
      return torus_parts(2, family.n);
    case FamilyId::Torus3n:
      return torus_parts(3, family.n);
    case FamilyId::TorusMN:
      return torus_parts(family.m, family.n);
    case FamilyId::Pretzel_2_3_2k1:
      return pretzel_parts(family.k);
    case FamilyId::Composite:
    case FamilyId::Disjoint:
      throw std::invalid_argument("no closed form for " + family.to_id());
    default:
      return twisted_parts(family.id, family.crossing_n());
  }
}

}  // namespace

HZFunction torus_hz_closed(int m, int n) {
  const Parts p = torus_parts(m, n);
  return {RationalFunc::reduce(p.first, p.den), "torus:" + std::to_string(m) + "," + std::to_string(n)};
}

HZFunction family_hz_closed(const KnotFamily& family, bool extrapolate) {
  const Parts p = family_parts(family, extrapolate);
  return {RationalFunc::reduce(p.first + p.correction, p.den), family.to_id()};
}

HZSplit family_hz_split(const KnotFamily& family, bool extrapolate) {
  const Parts p = family_parts(family, extrapolate);
  return {RationalFunc::reduce(p.first, p.den), RationalFunc::reduce(p.correction, p.den)};
}

}  // namespace hzknots
