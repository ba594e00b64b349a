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

#include <algorithm>
#include <numeric>
#include <random>

#include "../support/helpers.hpp"
#include "hzknots/hz/hz.hpp"

using namespace hzknots;
using namespace hzknots::testing;

namespace {

const Variables kAQ{"a", "q"};

const RationalFunc kUnknotZ = R("lambda", "(1 - lambda*q)*(1 - lambda*q^-1)");
const RationalFunc kT23 = R("lambda*(1 - lambda*q^9)", "(1 - lambda*q)*(1 - lambda*q^3)*(1 - lambda*q^5)");
const RationalFunc k52 = R("lambda*(1 - lambda*q^13)", "(1 - lambda*q)*(1 - lambda*q^5)*(1 - lambda*q^7)");

const FamilyId kTwisted[] = {FamilyId::Fam_2k_2,        FamilyId::Fam_2k1_2,      FamilyId::Fam_2k1_1_2,
                             FamilyId::Fam_2k2_3,       FamilyId::Pretzel_2_3_2k1, FamilyId::App_2k_1_1_2,
                             FamilyId::App_2_2km1_1_2,  FamilyId::App_4_2k2,      FamilyId::App_2k2_1_3};

}  // namespace

TEST_CASE("hz_transform examples") {
  CHECK(hz_transform(R("a - a^-1", "q - q^-1", kAQ)).value == kUnknotZ);
  CHECK(hz_transform(symbolic_from_vz(homfly_torus2(3).unnormalized)).value == kT23);
  CHECK(hz_transform(RationalFunc(LaurentPoly(kAQ))).value.is_zero());
  CHECK_THROWS_AS(hz_transform(R("1", "1 - a", kAQ)), std::invalid_argument);
}

TEST_CASE("torus_hz_closed examples") {
  CHECK(torus_hz_closed(2, 3).value == kT23);
  CHECK(torus_hz_closed(1, 1).value == kUnknotZ);
  CHECK(torus_hz_closed(3, 4).value ==
        R("lambda*(1 - lambda*q^17)*(1 - lambda*q^15)",
          "(1 - lambda*q^11)*(1 - lambda*q^9)*(1 - lambda*q^7)*(1 - lambda*q^5)"));
  CHECK_THROWS_AS(torus_hz_closed(2, 4), std::invalid_argument);
}

TEST_CASE("torus oracle equivalence") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 9; ++n) {
      if (std::gcd(m, n) != 1) continue;
      CAPTURE(m);
      CAPTURE(n);
      CHECK(hz_transform(torus_explicit_symbolic(m, n)).value == torus_hz_closed(m, n).value);
    }
  for (int n : {1, 5, 7}) CHECK(hz_pipeline(KnotFamily::torus(2, n)).value == torus_hz_closed(2, n).value);
  for (int n : {4, 5, 7}) CHECK(hz_pipeline(KnotFamily::torus(3, n)).value == torus_hz_closed(3, n).value);
  CHECK(hz_pipeline(KnotFamily::torus(4, 5)).value == torus_hz_closed(4, 5).value);
}

TEST_CASE("family closed forms") {
  const auto fam = [](FamilyId id, int k) { return family_hz_closed(KnotFamily::twisted(id, k)).value; };
  CHECK(fam(FamilyId::Fam_2k1_2, 1) == k52);
  CHECK(fam(FamilyId::Pretzel_2_3_2k1, 0) == k52);
  CHECK(fam(FamilyId::Pretzel_2_3_2k1, 3) ==
        R("lambda*(1 - lambda*q^7)*(1 - lambda*q^-15)",
          "(1 - lambda*q^-5)*(1 - lambda*q^-3)*(1 - lambda*q^-1)*(1 - lambda*q)"));
  CHECK(family_hz_closed(KnotFamily::unknot()).value == kUnknotZ);
  CHECK_THROWS_AS(family_hz_closed(KnotFamily::composite(KnotFamily::torus(2, 3), KnotFamily::torus(2, 3))),
                  std::invalid_argument);
  CHECK_THROWS(family_hz_closed(KnotFamily::twisted(FamilyId::Fam_2k_2, 0)));
  CHECK_NOTHROW(family_hz_closed(KnotFamily::twisted(FamilyId::Fam_2k_2, 0), true));
}

TEST_CASE("family oracle equivalence, small k") {
  HomflyRegistry registry;
  for (FamilyId id : kTwisted)
    for (int k = min_twist(id); k <= 4; ++k) {
      const KnotFamily f = KnotFamily::twisted(id, k);
      CAPTURE(f.to_id());
      CHECK(hz_pipeline(f, registry).value == family_hz_closed(f).value);
    }
}

TEST_CASE("split parts add up") {
  for (FamilyId id : kTwisted) {
    const KnotFamily f = KnotFamily::twisted(id, min_twist(id) + 1);
    const HZSplit s = family_hz_split(f);
    CHECK(s.factorized + s.correction == family_hz_closed(f).value);
  }
  CHECK(family_hz_split(KnotFamily::torus(2, 5)).correction.is_zero());
}

TEST_CASE("sign toggle flips Z") {
  HomflyOptions minus;
  minus.sign = -1;
  for (const KnotFamily& f : {KnotFamily::torus(2, 3), KnotFamily::torus(4, 5), KnotFamily::twisted(FamilyId::Fam_2k_2, 1)})
    CHECK(hz_pipeline(f, minus).value == -hz_pipeline(f).value);
}

TEST_CASE("factorize examples") {
  const FactoredForm t = factorize(torus_hz_closed(2, 3));
  CHECK(t.fully_factorized);
  CHECK(t.num_factors == std::vector<BasisFactor>{{1, 9, 1}});
  CHECK(t.den_factors == std::vector<BasisFactor>{{1, 1, 1}, {1, 3, 1}, {1, 5, 1}});
  CHECK(t.coeff == 1);
  CHECK(t.q_exp == 0);
  CHECK(t.lambda_exp == 1);
  CHECK(t.reconstruct() == kT23);

  const FactoredForm fig8 = factorize(family_hz_closed(KnotFamily::twisted(FamilyId::Fam_2k_2, 1)));
  CHECK_FALSE(fig8.fully_factorized);
  CHECK(fig8.residual.max_exponent(0) > 0);

  CHECK(factorize(family_hz_closed(KnotFamily::twisted(FamilyId::Pretzel_2_3_2k1, 1))).fully_factorized);

  const FactoredForm u = factorize({kUnknotZ, "unknot"});
  CHECK(u.den_factors == std::vector<BasisFactor>{{1, -1, 1}, {1, 1, 1}});
  CHECK(u.reconstruct() == kUnknotZ);
}

TEST_CASE("factorize signs and multiplicities") {
  const RationalFunc z = R("-3*lambda^2*q^4*(1 + lambda*q^-2)^2*(1 - lambda*q^3)*(1 + q + lambda^2)",
                           "(1 - lambda*q)^3*(1 + lambda*q^-4)");
  const FactoredForm f = factorize({z, ""});
  CHECK(f.num_factors == std::vector<BasisFactor>{{1, 3, 1}, {-1, -2, 2}});
  CHECK(f.den_factors == std::vector<BasisFactor>{{1, 1, 3}, {-1, -4, 1}});
  CHECK(f.coeff == -3);
  CHECK(f.lambda_exp == 2);
  CHECK_FALSE(f.fully_factorized);
  CHECK(f.reconstruct() == z);
  CHECK(factorize({RationalFunc(LaurentPoly(kHZ)), ""}).reconstruct().is_zero());
}

TEST_CASE("factorize is order independent") {
  std::mt19937_64 rng(7);
  std::vector<std::pair<int, int>> candidates;
  for (int s : {1, -1})
    for (int k = -60; k <= 60; ++k) candidates.emplace_back(s, k);
  for (const KnotFamily& f : {KnotFamily::torus(3, 7), KnotFamily::twisted(FamilyId::Pretzel_2_3_2k1, 5),
                              KnotFamily::twisted(FamilyId::App_4_2k2, 2), KnotFamily::twisted(FamilyId::Fam_2k1_2, 3)}) {
    const HZFunction z = family_hz_closed(f);
    const FactoredForm base = factorize(z);
    CHECK(base.reconstruct() == z.value);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(candidates.begin(), candidates.end(), rng);
      const FactoredForm g = factorize(z, candidates);
      CHECK(g.num_factors == base.num_factors);
      CHECK(g.den_factors == base.den_factors);
      CHECK(g.residual == base.residual);
      CHECK(g.coeff == base.coeff);
    }
  }
}

TEST_CASE("hz_from_table") {
  const HZTableResult t = hz_from_table(P("2*v^2 - v^4 + v^2*z^2", kVZ));
  CHECK(t.hz.value == kT23);
  CHECK(t.warnings.empty());
  CHECK(hz_from_table(P("1", kVZ)).hz.value == kUnknotZ);
  CHECK(hz_from_table(P("v^2 + z", kVZ)).warnings.size() == 1);
  CHECK_THROWS_AS(P("2v^^2", kVZ), ParseError);
}

TEST_CASE("lambda series reproduces Hbar(q^N, q)") {
  HomflyRegistry registry;
  for (const KnotFamily& f : {KnotFamily::unknot(), KnotFamily::torus(2, 5), KnotFamily::twisted(FamilyId::Fam_2k_2, 2),
                              KnotFamily::twisted(FamilyId::App_2k2_1_3, 1)}) {
    CAPTURE(f.to_id());
    const LaurentPoly bar = registry.get(f).unnormalized;
    const auto s = lambda_series(family_hz_closed(f).value, 5);
    CHECK(s[0].is_zero());
    for (int N = 0; N <= 5; ++N) CHECK(s[static_cast<std::size_t>(N)] == RationalFunc(bar_at(bar, N)));
  }
  CHECK_THROWS_AS(lambda_series(R("1", "lambda"), 2), std::domain_error);
}
