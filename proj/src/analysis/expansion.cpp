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

#include "hzknots/analysis/analysis.hpp"

#include <stdexcept>

namespace hzknots {

namespace {

BigRational r(long num, long den = 1) {
  BigRational out{BigInt(num), BigInt(den)};
  out.canonicalize();
  return out;
}

}  // namespace

BigRational ExpansionReport::a(int exponent) const {
  auto it = coeffs.find(exponent);
  return it == coeffs.end() ? BigRational(0) : it->second;
}

ExpansionReport expand_at_1(const HZFunction& z, int max_exp) {
  const RationalFunc f = z.value.embed(kHZVars);
  if (f.evaluate(0, 1).is_zero()) throw std::domain_error("Z(q, 1) vanishes identically");
  const XSeries s = to_xseries(f, 1, max_exp + 2);
  if (s.min_exp() != -2) throw std::domain_error("Z(e^x, 1) has a pole of order " + std::to_string(-s.min_exp()));

  ExpansionReport out;
  out.source = z.source;
  out.max_exp = max_exp;
  for (int e = -2; e <= max_exp; ++e) {
    const BigRational c = s.coefficient(e);
    if (e % 2 == 0) {
      out.coeffs[e] = c;
      mpz_lcm(out.denominator_lcm.get_mpz_t(), out.denominator_lcm.get_mpz_t(), c.get_den_mpz_t());
    } else if (abs(c) > out.odd_coeff_max_abs) {
      out.odd_coeff_max_abs = abs(c);
    }
  }
  out.odd_modulus = out.denominator_lcm;
  while (out.odd_modulus % 2 == 0) out.odd_modulus /= 2;
  return out;
}

BigRational a2_closed_form(const KnotFamily& family) {
  validate(family, true);
  const long n = family.crossing_n();
  switch (family.id) {
    case FamilyId::Fam_2k_2:
      return r(-1, 3) + r(4, (n - 5) * (n - 3) * (n - 1));
    case FamilyId::Fam_2k1_2:
      return r(1, 3) + r(4, (n - 2) * n * (n + 2));
    case FamilyId::Fam_2k1_1_2:
      return r(3 * (n * n - 6 * n + 13), (n - 7) * (n - 5) * (n - 3) * (n - 1));
    case FamilyId::Fam_2k2_3:
      return r(3 * (n * n - 4 * n + 8), (n - 4) * (n - 2) * n * (n + 2));
    case FamilyId::Pretzel_2_3_2k1:
      return r(3 * (n - 19), (n - 13) * (n - 11) * (n - 9));
    case FamilyId::App_2k_1_1_2:
      return r(3 * (n * n - 14 * n + 37), (n - 9) * (n - 7) * (n - 5) * (n - 3));
    case FamilyId::App_2_2km1_1_2:
      return r(-7, 3) + r(4, (n - 7) * (n - 5) * (n - 3));
    case FamilyId::App_4_2k2:
      return r(1, 15) - r(8 * (n - 6), (n - 9) * (n - 7) * (n - 5) * (n - 3));
    case FamilyId::App_2k2_1_3:
      return r(1, 15) - r(8, (n - 9) * (n - 7) * (n - 5));
    default:
      throw std::invalid_argument("no closed-form a_{-2} for " + family.to_id());
  }
}

BigInt common_odd_modulus(const std::vector<BigRational>& values) {
  if (values.empty()) return 1;
  BigInt g = 0;
  for (const auto& v : values) {
    BigInt d = v.get_den();
    while (d % 2 == 0) d /= 2;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  }
  return g;
}

}  // namespace hzknots
