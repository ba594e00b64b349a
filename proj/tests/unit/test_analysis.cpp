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

#include "../support/helpers.hpp"
#include "hzknots/analysis/analysis.hpp"

using namespace hzknots;
using namespace hzknots::testing;

namespace {

HZFunction twisted(FamilyId id, int k) { return family_hz_closed(KnotFamily::twisted(id, k)); }

const RationalFunc kOne = R("1", "1", kQ);

}  // namespace

TEST_CASE("expand_at_1 examples") {
  const HZFunction z52 = family_hz_closed(KnotFamily::twisted(FamilyId::Pretzel_2_3_2k1, 0));
  const ExpansionReport e = expand_at_1(z52);
  CHECK(e.a(-2) == BigRational(13, 35));
  CHECK(e.odd_coeff_max_abs == 0);
  CHECK(e.coeffs.size() == 8);
  CHECK(e.coeffs.rbegin()->first == 12);

  // (1 - q)(1 - 1/q) = -4 sinh^2(x/2), so the unknot starts at -1/x^2.
  const ExpansionReport u = expand_at_1(torus_hz_closed(1, 1));
  CHECK(u.a(-2) == -1);
  CHECK(u.a(0) == BigRational(1, 12));

  CHECK(expand_at_1(twisted(FamilyId::Fam_2k_2, 1)).a(-2) == BigRational(5, 3));
  CHECK(expand_at_1(torus_hz_closed(2, 3)).a(-2) == BigRational(3, 5));
  CHECK_THROWS_AS(expand_at_1({R("lambda - 1", "1"), ""}), std::domain_error);
}

TEST_CASE("a2_closed_form examples") {
  CHECK(a2_closed_form(KnotFamily::twisted(FamilyId::Fam_2k1_2, 1)) == BigRational(13, 35));
  CHECK(a2_closed_form(KnotFamily::twisted(FamilyId::Fam_2k1_1_2, 1)) == BigRational(-13, 5));
  CHECK(a2_closed_form(KnotFamily::twisted(FamilyId::App_2k2_1_3, 1)) == BigRational(41, 15));
  CHECK(a2_closed_form(KnotFamily::twisted(FamilyId::Fam_2k_2, 1)) == BigRational(-5, 3));
  CHECK(a2_closed_form(KnotFamily::twisted(FamilyId::Pretzel_2_3_2k1, 0)) == BigRational(13, 35));
  CHECK_THROWS_AS(a2_closed_form(KnotFamily::torus(2, 3)), std::invalid_argument);
}

TEST_CASE("a2 agrees with the expansion for small k") {
  for (FamilyId id : {FamilyId::Fam_2k1_2, FamilyId::Fam_2k1_1_2, FamilyId::Fam_2k2_3, FamilyId::Pretzel_2_3_2k1,
                      FamilyId::App_2k_1_1_2, FamilyId::App_2_2km1_1_2, FamilyId::App_4_2k2, FamilyId::App_2k2_1_3})
    for (int k = min_twist(id); k <= 3; ++k) {
      const KnotFamily f = KnotFamily::twisted(id, k);
      CAPTURE(f.to_id());
      CHECK(expand_at_1(family_hz_closed(f), 11).a(-2) == a2_closed_form(f));
    }
}

TEST_CASE("odd modulus") {
  CHECK(common_odd_modulus({BigRational(13, 35), BigRational(1, 105), BigRational(3, 140)}) == 35);
  CHECK(common_odd_modulus({}) == 1);
  CHECK(expand_at_1(torus_hz_closed(2, 3)).odd_modulus % 2 == 1);
}

TEST_CASE("unknot residues") {
  const ResidueReport r = lambda_residues(torus_hz_closed(1, 1));
  REQUIRE(r.poles.size() == 2);
  CHECK(r.poles[0].k == -1);
  CHECK(r.poles[0].residue == R("q^2", "q^2 - 1", kQ));
  CHECK(r.poles[1].k == 1);
  CHECK(r.poles[1].residue == R("-1", "q^2 - 1", kQ));
  CHECK(r.finite_sum == kOne);
  CHECK(r.infinity_residue == -kOne);
  CHECK(r.finite_sum_is_one);
  CHECK(r.total_is_zero);
  CHECK(r.q_poles_at_roots_of_unity);
}

TEST_CASE("residues with double and sign -1 poles") {
  // lambda / ((1 - lambda q)^2 (1 + lambda q^3)) checked against partial fractions:
  // the finite sum is minus the infinity residue, which is 0 here (degree gap 2).
  const ResidueReport r = lambda_residues({R("lambda", "(1 - lambda*q)^2*(1 + lambda*q^3)"), ""});
  REQUIRE(r.poles.size() == 2);
  CHECK(r.poles[0].order == 2);
  CHECK(r.poles[1].sign == -1);
  CHECK(r.infinity_residue.is_zero());
  CHECK((r.finite_sum + r.infinity_residue).is_zero());
  CHECK(r.poles[1].residue == R("-q^-3", "(1 + q^-2)^2*q^3", kQ));
  CHECK_FALSE(r.finite_sum_is_one);
  CHECK_THROWS_AS(lambda_residues({R("1", "lambda*(1 - lambda)"), ""}), std::domain_error);
  CHECK_THROWS_AS(lambda_residues({R("lambda", "1 - lambda^2*q - lambda*q^2"), ""}), std::domain_error);
}

TEST_CASE("family residue identities") {
  for (FamilyId id : {FamilyId::Fam_2k_2, FamilyId::App_4_2k2, FamilyId::Pretzel_2_3_2k1}) {
    const ResidueReport r = lambda_residues(twisted(id, 2));
    CHECK(r.finite_sum_is_one);
    CHECK(r.total_is_zero);
    CHECK(r.infinity_residue == -kOne);
  }
}

TEST_CASE("lambda^2 part residues") {
  CHECK(lambda2_partial_residue_check(KnotFamily::torus(2, 5)).pass);
  CHECK(lambda2_partial_residue_check(KnotFamily::torus(2, 5)).correction_sum.is_zero());
  CHECK(lambda2_partial_residue_check(KnotFamily::twisted(FamilyId::Fam_2k2_3, 0)).pass);
  CHECK(lambda2_partial_residue_check(KnotFamily::twisted(FamilyId::Fam_2k1_1_2, 2)).pass);
}

TEST_CASE("symmetry checks") {
  for (const auto& c : symmetry_checks(torus_hz_closed(1, 1))) CHECK(c.pass);
  const auto fig8 = symmetry_checks(twisted(FamilyId::Fam_2k_2, 1), KnotFamily::twisted(FamilyId::Fam_2k_2, 1));
  REQUIRE(fig8.size() == 4);
  CHECK(fig8[0].pass);
  CHECK(fig8[1].pass);
  CHECK(fig8[2].pass);
  CHECK_FALSE(fig8[3].required);

  const auto t = symmetry_checks(twisted(FamilyId::Fam_2k1_2, 3), KnotFamily::twisted(FamilyId::Fam_2k1_2, 3));
  CHECK(t[3].required);
  CHECK(t[3].pass);

  // Not symmetric under inversion.
  const auto bad = symmetry_checks({R("lambda", "(1 - lambda*q)^2"), ""});
  CHECK_FALSE(bad[0].pass);
  CHECK(bad[2].pass);
}

TEST_CASE("q limits") {
  CHECK(*q_limit(torus_hz_closed(2, 3), true) == R("1", "lambda", {"lambda"}));
  CHECK(*q_limit(torus_hz_closed(2, 3), false) == R("lambda", "1", {"lambda"}));
  CHECK_FALSE(q_limit(twisted(FamilyId::Fam_2k1_1_2, 1), true).has_value());
}

TEST_CASE("lambda power specializations") {
  const auto checks = lambda_power_specializations();
  REQUIRE(checks.size() == 3);
  CHECK(checks[0].pass);
  CHECK(checks[0].computed == R("q*(1 - q^16)", "(1 - q^2)*(1 - q^6)*(1 - q^10)", kQ));
  // Computed independently of the expected forms: both differ from them by a sign.
  CHECK(checks[1].computed == R("1 + q^10", "q*(1 - q^2)*(1 - q^6)", kQ));
  CHECK(checks[2].computed == R("q*(1 + q^14)", "(1 - q^6)*(1 - q^10)", kQ));
  CHECK(checks[1].matches_negated);
  CHECK(checks[2].matches_negated);
}
