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
#include "../support/oracles.hpp"
#include "hzknots/algebra/complex.hpp"
#include "hzknots/algebra/gcd.hpp"
#include "hzknots/algebra/xseries.hpp"

using namespace hzknots;
using namespace hzknots::testing;

TEST_CASE("bigrational parse and render") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-5")) == "-5");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("poly_arith") {
  CHECK(P("v*z^-1", kVZ) * P("z", kVZ) == P("v", kVZ));
  CHECK(P("1 - v^2", kVZ) + P("v^2", kVZ) == P("1", kVZ));
  // (v/z)(1 - v^2 + z^2) * z expanded by hand
  CHECK(P("v*z^-1*(1 - v^2 + z^2)", kVZ) * P("z", kVZ) == P("v - v^3 + v*z^2", kVZ));
  CHECK_THROWS_AS(P("v", kVZ) + P("q", {"q"}), std::invalid_argument);
  // a univariate polynomial embeds into the two-variable ring
  CHECK((P("v", {"v"}) + P("z", kVZ)).variables() == kVZ);
}

TEST_CASE("canonical rendering") {
  CHECK(P("2*v^2 - v^4 + v^2*z^2", kVZ).to_string() == "-1*v^4 + 2*v^2 + 1*v^2*z^2");
  CHECK(P("0", kVZ).to_string() == "0");
  CHECK(P("1", kVZ).to_string() == "1");
  CHECK(P("-1/2*z^-1", kVZ).to_string() == "-1/2*z^-1");
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(P("1 - q^9", kQ), P("1 - q^3", kQ)) == P("1 - q^3", kQ));
  CHECK(poly_gcd(P("1 - lambda*q"), P("1 - lambda*q^3")) == P("1"));
  const LaurentPoly a = P("(1 - lambda*q)*(1 - lambda*q^5)");
  const LaurentPoly b = P("(1 - lambda*q^5)^2");
  CHECK(poly_gcd(a, b) == P("1 - lambda*q^5"));
  CHECK(oracle::subresultant_gcd(a, b) == P("1 - lambda*q^5"));
  CHECK_THROWS_AS(poly_gcd(P("0"), a), std::invalid_argument);
  // monomial factors are units
  CHECK(poly_gcd(P("lambda^-2*q*(1 + q)"), P("q^7*(1 + q)*(1 - q)")) == P("1 + q"));
}

TEST_CASE("poly_gcd agrees with the subresultant oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const LaurentPoly g = random_poly(rng, kHZ, 3, -2, 3);
    const LaurentPoly a = random_poly(rng, kHZ, 4, -2, 4) * g;
    const LaurentPoly b = random_poly(rng, kHZ, 4, -2, 4) * g;
    if (a.is_zero() || b.is_zero()) continue;
    const LaurentPoly fast = poly_gcd(a, b);
    CHECK(oracle::unit_normal(fast) == oracle::subresultant_gcd(a, b));
    auto cof = poly_gcd_cofactors(a, b);
    CHECK(cof.gcd * cof.p_cofactor == a);
    CHECK(cof.gcd * cof.q_cofactor == b);
  }
}

TEST_CASE("poly_gcd on large cyclotomic-style inputs") {
  LaurentPoly a = P("1"), b = P("1");
  for (int k : {1, 3, 5, 7, 9, 11}) a *= P("1 - lambda*q^" + std::to_string(k));
  for (int k : {3, 7, 13, 9}) b *= P("1 - lambda*q^" + std::to_string(k));
  CHECK(poly_gcd(a, b) == P("(1 - lambda*q^3)*(1 - lambda*q^7)*(1 - lambda*q^9)"));
}

TEST_CASE("divide_exact") {
  CHECK(*divide_exact(P("1 - q^9", kQ), P("1 - q^3", kQ)) == P("1 + q^3 + q^6", kQ));
  CHECK_FALSE(divide_exact(P("1 - q^9", kQ), P("1 - q^2", kQ)).has_value());
  CHECK(*divide_exact(P("lambda*q"), P("2*q^3")) == P("1/2*lambda*q^-2"));
}

TEST_CASE("rf_reduce") {
  CHECK(R("lambda*(q - q^-1)", "(q - q^-1)*(1 - lambda*q)") == R("lambda", "1 - lambda*q"));
  const RationalFunc f = R("1 - q^9", "(1 - q)*(1 - q^3)*(1 - q^5)", kQ);
  CHECK(f.num() == P("1 + q^3 + q^6", kQ));
  CHECK(f.den() == P("(1 - q)*(1 - q^5)", kQ));
  const RationalFunc z = R("0", "1 - lambda*q");
  CHECK(z.is_zero());
  CHECK(z.den() == P("1"));
  CHECK_THROWS_AS(R("1", "0"), std::domain_error);
}

TEST_CASE("canonical denominator") {
  // den has no negative exponents, no monomial factor, trailing coefficient +1
  const RationalFunc f = R("lambda", "q^-1 - lambda");
  CHECK(f.den() == P("1 - lambda*q"));
  CHECK(f.num() == P("lambda*q"));
  const RationalFunc g = R("1", "-2*lambda^2*q^3*(1 - lambda*q)");
  CHECK(g.den() == P("1 - lambda*q"));
  CHECK(g.num() == P("-1/2*lambda^-2*q^-3"));
}

TEST_CASE("rf_arith") {
  const RationalFunc u = R("1", "1 - lambda*q") - R("1", "1 - lambda*q^-1");
  CHECK(u == R("lambda*(q - q^-1)", "(1 - lambda*q)*(1 - lambda*q^-1)"));
  CHECK(u / u == R("1", "1"));
  const RationalFunc s = R("lambda", "1 - lambda") + R("lambda^2", "(1 - lambda)^2");
  CHECK(s.den() == P("(1 - lambda)^2"));
  CHECK(s == R("lambda", "(1 - lambda)^2"));
  CHECK_THROWS_AS(u / R("0", "1"), std::domain_error);
}

TEST_CASE("subst_exponent_scale") {
  const RationalFunc unknot = R("lambda", "(1 - lambda*q)*(1 - lambda*q^-1)");
  const std::vector<MonomialImage> inv{{"q", P("q^-1")}, {"lambda", P("lambda^-1")}};
  CHECK(subst_exponent_scale(unknot, inv) == unknot);
  CHECK(subst_exponent_scale(unknot, {}) == unknot);
  CHECK(subst_exponent_scale(R("lambda", "1 - lambda*q"), {{"lambda", P("q^2*lambda")}}) ==
        R("q^2*lambda", "1 - lambda*q^3"));
  CHECK_THROWS_AS(subst_exponent_scale(unknot, {{"q", P("1 + q")}}), std::invalid_argument);
}

TEST_CASE("to_xseries") {
  const XSeries s = to_xseries(R("1", "1 - q", kQ), 1, 2);
  CHECK(s.min_exp() == -1);
  REQUIRE(s.coeffs().size() == 3);
  CHECK(s.coeffs()[0] == -1);
  CHECK(s.coeffs()[1] == BigRational(1, 2));
  CHECK(s.coeffs()[2] == BigRational(-1, 12));

  const RationalFunc z52 = R("lambda*(1 - lambda*q^13)", "(1 - lambda*q)*(1 - lambda*q^5)*(1 - lambda*q^7)");
  const XSeries e = to_xseries(z52, 1, 4);
  CHECK(e.min_exp() == -2);
  CHECK(e.coefficient(-2) == BigRational(13, 35));

  const XSeries one = to_xseries(R("1", "1"), 1, 3);
  CHECK(one.min_exp() == 0);
  CHECK(one.coefficient(0) == 1);
  CHECK(one.coefficient(3) == 0);
  CHECK_THROWS_AS(one.coefficient(4), std::out_of_range);
}

TEST_CASE("eval_complex") {
  const mpfr_prec_t prec = 256;
  const MpComplex one{MpReal(1.0, prec), MpReal(prec)};
  const MpComplex v = eval_complex(P("1 + q^3 + q^6", kQ), one);
  CHECK(v.re.to_double() == 3.0);
  const MpComplex w = unit_root(MpReal::pi(prec) * MpReal(2.0 / 9.0, prec) * MpReal(1.0, prec));
  // 2/9 in double is inexact; rebuild the angle exactly
  MpReal theta = MpReal::pi(prec) * MpReal(2.0, prec) / MpReal(9.0, prec);
  const MpComplex root = unit_root(theta);
  const MpReal tol = MpReal::pow2(-200, prec);
  CHECK(abs(eval_complex(P("1 - q^9", kQ), root)) < tol);
  CHECK(abs(eval_complex(P("1 + q^3 + q^6", kQ), root)) < tol);
  CHECK(abs(eval_complex(P("q^-3 + 1 + q^3", kQ), root)) < tol);
  (void)w;
  const MpComplex zero{MpReal(prec), MpReal(prec)};
  CHECK_THROWS_AS(eval_complex(P("q^-1", kQ), zero), std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_poly(rng, kVZ, 5, -4, 4);
    const auto b = random_poly(rng, kVZ, 5, -4, 4);
    const auto c = random_poly(rng, kVZ, 5, -4, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == LaurentPoly(kVZ));
  }
}

TEST_CASE("rational function properties") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 25; ++i) {
    const auto n1 = random_poly(rng, kHZ, 3, -2, 3), d1 = random_poly(rng, kHZ, 3, -2, 3);
    const auto n2 = random_poly(rng, kHZ, 3, -2, 3), d2 = random_poly(rng, kHZ, 3, -2, 3);
    if (d1.is_zero() || d2.is_zero() || n2.is_zero()) continue;
    const RationalFunc f = RationalFunc::reduce(n1, d1), g = RationalFunc::reduce(n2, d2);
    CHECK(RationalFunc::reduce(f.num(), f.den()) == f);
    CHECK((f * g) / g == f);
    const auto c = random_poly(rng, kHZ, 2, -1, 2);
    if (!c.is_zero()) CHECK(RationalFunc::reduce(n1 * c, d1 * c) == f);
    const std::vector<MonomialImage> inv{{"q", P("q^-1")}, {"lambda", P("lambda^-1")}};
    CHECK(subst_exponent_scale(subst_exponent_scale(f, inv), inv) == f);
  }
}

TEST_CASE("series multiplicativity") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const auto n1 = random_poly(rng, kQ, 3, -3, 3), d1 = random_poly(rng, kQ, 3, -3, 3);
    const auto n2 = random_poly(rng, kQ, 3, -3, 3), d2 = random_poly(rng, kQ, 3, -3, 3);
    if (n1.is_zero() || d1.is_zero() || n2.is_zero() || d2.is_zero()) continue;
    const RationalFunc f = RationalFunc::reduce(n1, d1), g = RationalFunc::reduce(n2, d2);
    const XSeries sf = to_xseries(f, 1, 8), sg = to_xseries(g, 1, 8), sfg = to_xseries(f * g, 1, 8);
    const XSeries prod = sf * sg;
    CHECK(prod.min_exp() == sfg.min_exp());
    for (int e = prod.min_exp(); e <= prod.max_exp(); ++e) CHECK(prod.coefficient(e) == sfg.coefficient(e));
  }
}
