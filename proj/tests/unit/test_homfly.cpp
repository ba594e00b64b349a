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

#include <numeric>

#include "../support/helpers.hpp"
#include "hzknots/algebra/gcd.hpp"
#include "hzknots/homfly/jones.hpp"

using namespace hzknots;
using namespace hzknots::testing;

namespace {

const Variables kAQ{"a", "q"};

LaurentPoly V(const std::string& s) { return P(s, kVZ); }

// Hbar(q^N, q) from a (v,z) polynomial: (z*Hbar)(q^N, q - q^-1) / (q - q^-1).
LaurentPoly specialize_bar(const LaurentPoly& bar, int N) {
  const LaurentPoly zq = P("q - q^-1", kQ);
  const LaurentPoly num = (bar * V("z")).compose(kQ, {LaurentPoly::variable(kQ, 0, N), zq});
  return *divide_exact(num, zq);
}

// Jones polynomial of a torus knot from the classical closed form
// t^{(m-1)(n-1)/2} (1 - t^{m+1} - t^{n+1} + t^{m+n}) / (1 - t^2), t = q^2.
LaurentPoly jones_closed(int m, int n) {
  auto t = [](int e) { return LaurentPoly::variable(kQ, 0, 2 * e); };
  const LaurentPoly one = LaurentPoly::constant(1, kQ);
  const LaurentPoly num = t((m - 1) * (n - 1) / 2) * (one - t(m + 1) - t(n + 1) + t(m + n));
  return *divide_exact(num, one - t(2));
}

}  // namespace

TEST_CASE("torus2 examples") {
  CHECK(homfly_torus2(1).normalized == V("1"));
  CHECK(homfly_torus2(2).normalized == V("v*z^-1*(1 - v^2 + z^2)"));
  CHECK(homfly_torus2(3).normalized == V("2*v^2 - v^4 + v^2*z^2"));
  CHECK_THROWS_AS(homfly_torus2(0), std::invalid_argument);
}

TEST_CASE("unnormalized carries the unknot factor") {
  const HomflyPair h = homfly_torus2(5);
  CHECK(h.unnormalized == h.normalized * V("(v - v^-1)*z^-1"));
  const HomflyPair neg = homfly_torus2(5, {-1, false});
  CHECK(neg.unnormalized == -h.unnormalized);
  CHECK(neg.normalized == h.normalized);
  CHECK(homfly_family(KnotFamily::unknot()).unnormalized == V("(v - v^-1)*z^-1"));
}

TEST_CASE("torus2 skein identity and knots-only recursion") {
  HomflyRegistry reg;
  for (int n = 3; n <= 30; ++n)
    CHECK(V("v^-1") * reg.torus2(n) - V("v") * reg.torus2(n - 2) == V("z") * reg.torus2(n - 1));
  for (int n = 3; n <= 41; n += 2) CHECK(torus2_knots_only(n) == reg.torus2(n));
}

TEST_CASE("torus3 examples") {
  CHECK(homfly_torus3(3).normalized ==
        V("v^4*z^2*(2 - v^2 + z^2) + v^4*z^-2*(1 - v^2 + z^2)*(1 - v^2 + 2*z^2)"));
  CHECK(homfly_torus3(2).normalized == homfly_torus2(3).normalized);
  CHECK(homfly_torus3(1).normalized == V("1"));
  CHECK(homfly_torus3(4).normalized == homfly_torus_explicit(3, 4).normalized);
}

TEST_CASE("explicit torus formula") {
  CHECK(torus_explicit_symbolic(1, 1) == RationalFunc::reduce(P("a - a^-1", kAQ), P("q - q^-1", kAQ)));
  const RationalFunc t23 =
      RationalFunc::reduce(P("(a - a^-1)*(a^2*(q^2 + q^-2) - a^4)", kAQ), P("q - q^-1", kAQ));
  CHECK(torus_explicit_symbolic(2, 3) == t23);
  CHECK(torus_explicit_symbolic(3, 2) == t23);
  CHECK_THROWS_AS(torus_explicit_symbolic(2, 4), std::invalid_argument);
  // (1 - q^{2i}) denominators cancel down to a divisor of 1 - q^2
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 9; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const RationalFunc f = torus_explicit_symbolic(m, n);
      CHECK(divide_exact(P("1 - q^2", kAQ), f.den()).has_value());
    }
}

TEST_CASE("explicit formula matches the recursions at N = 0..4") {
  HomflyRegistry reg;
  for (int m = 2; m <= 3; ++m)
    for (int n = 1; n <= 10; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const LaurentPoly h = m == 2 ? reg.torus2(n) : reg.torus3(n);
      const LaurentPoly bar = unknot_factor() * h;
      for (int N = 0; N <= 4; ++N) CHECK(torus_explicit_at(m, n, N) == specialize_bar(bar, N));
      CHECK(torus_explicit_at(m, n, 0).is_zero());
    }
}

TEST_CASE("q_to_z") {
  CHECK(q_to_z(P("q^2 - 2 + q^-2", kQ)) == P("z^2", {"z"}));
  CHECK(q_to_z(P("3", kQ)) == P("3", {"z"}));
  CHECK_THROWS_AS(q_to_z(P("q + q^-1", kQ)), std::invalid_argument);
  CHECK(homfly_torus_explicit(2, 5).normalized == homfly_torus2(5).normalized);
  CHECK(homfly_torus_explicit(4, 1).normalized == V("1"));
}

TEST_CASE("family examples") {
  const auto fig8 = homfly_family(KnotFamily::twisted(FamilyId::Fam_2k_2, 1));
  CHECK(fig8.normalized == V("v^-2 - 1 + v^2 - z^2"));
  CHECK(homfly_family(KnotFamily::twisted(FamilyId::Fam_2k1_2, 1)).unnormalized ==
        homfly_family(KnotFamily::twisted(FamilyId::Pretzel_2_3_2k1, 0)).unnormalized);
  const LaurentPoly f62 = homfly_family(KnotFamily::twisted(FamilyId::Fam_2k1_1_2, 1)).unnormalized;
  CHECK(f62 == V("v^-2") * homfly_torus2(3).unnormalized - V("z*v^-1") * homfly_torus2(4).unnormalized);
  // the k = 0 member of the figure-8 family is the unknot
  CHECK(homfly_family(KnotFamily::twisted(FamilyId::Fam_2k_2, 0), {1, true}).normalized == V("1"));
  CHECK_THROWS_AS(homfly_family(KnotFamily::twisted(FamilyId::Fam_2k_2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(homfly_family(KnotFamily::twisted(FamilyId::Fam_2k_2, kMaxTwist + 1)), std::invalid_argument);
}

TEST_CASE("every family member is a knot polynomial") {
  HomflyRegistry reg;
  for (FamilyId id : {FamilyId::Fam_2k_2, FamilyId::Fam_2k1_2, FamilyId::Fam_2k1_1_2, FamilyId::Fam_2k2_3,
                      FamilyId::Pretzel_2_3_2k1, FamilyId::App_2k_1_1_2, FamilyId::App_2_2km1_1_2,
                      FamilyId::App_4_2k2, FamilyId::App_2k2_1_3})
    for (int k = min_twist(id); k <= 6; ++k) {
      const HomflyPair h = reg.get(KnotFamily::twisted(id, k));
      CAPTURE(KnotFamily::twisted(id, k).to_id());
      // knots: only even, nonnegative powers of z, and H(1, 0) = 1
      CHECK(h.normalized.min_exponent(1) >= 0);
      for (const auto& t : h.normalized.terms()) CHECK(t.exp[1] % 2 == 0);
      CHECK(h.normalized.evaluate(1, 0).evaluate(0, 1).constant_value() == 1);
      CHECK(jones(h).evaluate(0, 1).constant_value() == 1);
    }
}

TEST_CASE("compose") {
  const HomflyPair u = homfly_family(KnotFamily::unknot());
  const HomflyPair t = homfly_torus2(3);
  CHECK(homfly_compose(ComposeKind::ConnectedSum, u, t).normalized == t.normalized);
  CHECK(homfly_compose(ComposeKind::ConnectedSum, t, t).normalized == V("(2*v^2 - v^4 + v^2*z^2)^2"));
  CHECK(homfly_compose(ComposeKind::DisjointUnion, u, u).normalized == V("(v^-1 - v)*z^-1"));
  const auto sum = homfly_family(parse_family_id("compose:sum(torus:2,3,torus:2,3)"));
  CHECK(sum.normalized == V("(2*v^2 - v^4 + v^2*z^2)^2"));
}

TEST_CASE("jones") {
  CHECK(jones(KnotFamily::unknot()) == P("1", kQ));
  CHECK(jones(homfly_torus2(3)) == P("q^2 + q^6 - q^8", kQ));
  for (int m = 2; m <= 3; ++m)
    for (int n = 1; n <= 10; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const LaurentPoly sub = jones(KnotFamily::torus(m, n));
      CHECK(sub == jones_closed(m, n));
      CHECK(jones_torus_recursion(m, n, JonesExponent::NMinusOne) == sub);
    }
  // The (n+1) exponent, applied once from V(2,1) = 1.
  CHECK(jones_torus_recursion(2, 3, JonesExponent::NPlusOne) == P("q^2 + q^12 - q^14", kQ));
}

TEST_CASE("family ids") {
  CHECK(parse_family_id("torus:2,7").to_id() == "torus:2,7");
  CHECK(parse_family_id("torus:3,2").to_id() == "torus:2,3");
  CHECK(parse_family_id("torus:4,5").id == FamilyId::TorusMN);
  CHECK(parse_family_id("fam:2k1_1_2:k=1").id == FamilyId::Fam_2k1_1_2);
  CHECK(parse_family_id("fam:2k2_3:k=0").crossing_n() == 5);
  CHECK(parse_family_id("pretzel:k=2").crossing_n() == 10);
  CHECK(parse_family_id("app:d:k=3").crossing_n() == 12);
  CHECK(parse_family_id("compose:disjoint(torus:2,3,fam:2k2:k=1)").to_id() ==
        "compose:disjoint(torus:2,3,fam:2k2:k=1)");
  CHECK_THROWS_AS(parse_family_id("fam:2k2:k=0"), std::invalid_argument);
  CHECK(parse_family_id("fam:2k2:k=0", true).k == 0);
  CHECK_THROWS_AS(parse_family_id("torus:4,6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_id("knot:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_id("pretzel:k=x"), std::invalid_argument);
}
