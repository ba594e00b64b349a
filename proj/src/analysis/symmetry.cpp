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

namespace hzknots {

namespace {

const Variables kLambda{"lambda"};
const Variables kQVar{"q"};

LaurentPoly hz_mono(int el, int eq, const BigRational& c = 1) { return LaurentPoly::monomial(kHZVars, {el, eq}, c); }

// Terms of p at the extreme q exponent, as a polynomial in lambda.
LaurentPoly q_edge(const LaurentPoly& p, bool top) {
  const int e = top ? p.max_exponent(1) : p.min_exponent(1);
  std::vector<LaurentPoly::Term> out;
  for (const auto& t : p.terms())
    if (t.exp[1] == e) out.push_back({{t.exp[0], 0}, t.coeff});
  return LaurentPoly(kLambda, std::move(out));
}

bool finite_limits_expected(const KnotFamily& f) {
  return f.id == FamilyId::Fam_2k1_2 || f.id == FamilyId::Fam_2k2_3 ||
         (f.id == FamilyId::Fam_2k1_1_2 && f.crossing_n() >= 10);
}

std::string describe(const std::optional<RationalFunc>& limit) { return limit ? limit->to_string() : "not finite"; }

}  // namespace

std::optional<RationalFunc> q_limit(const HZFunction& z, bool at_infinity) {
  const RationalFunc f = z.value.embed(kHZVars);
  if (f.is_zero()) return RationalFunc(LaurentPoly(kLambda));
  const int en = at_infinity ? f.num().max_exponent(1) : f.num().min_exponent(1);
  const int ed = at_infinity ? f.den().max_exponent(1) : f.den().min_exponent(1);
  if (en != ed) return std::nullopt;
  return RationalFunc::reduce(q_edge(f.num(), at_infinity), q_edge(f.den(), at_infinity));
}

std::vector<CheckResult> symmetry_checks(const HZFunction& z, const std::optional<KnotFamily>& family) {
  const RationalFunc f = z.value.embed(kHZVars);
  std::vector<CheckResult> out;

  const RationalFunc inv = subst_exponent_scale(f, {{"lambda", hz_mono(-1, 0)}, {"q", hz_mono(0, -1)}});
  out.push_back({"inversion", inv == f, true, "Z(1/q, 1/lambda) = Z(q, lambda)"});

  const RationalFunc mod = subst_exponent_scale(f, {{"lambda", hz_mono(-1, 0, -1)}, {"q", hz_mono(0, -1, -1)}});
  out.push_back({"modular", mod == -f, true, "Z(-1/q, -1/lambda) = -Z(q, lambda)"});

  const RationalFunc at1 = f.evaluate(1, 1);
  const LaurentPoly l = LaurentPoly::variable(kLambda, 0);
  const LaurentPoly one = LaurentPoly::constant(1, kLambda);
  out.push_back({"q=1", at1 == RationalFunc::reduce(l, (one - l).pow(2)), true, "Z(1, lambda) = " + at1.to_string()});

  if (family) {
    const auto hi = q_limit(z, true);
    const auto lo = q_limit(z, false);
    const std::string detail = "q->inf: " + describe(hi) + "; q->0: " + describe(lo);
    if (finite_limits_expected(*family)) {
      const bool pass = hi && lo && *hi == RationalFunc::reduce(one, l) && *lo == RationalFunc(l);
      out.push_back({"q-limits", pass, true, detail});
    } else {
      out.push_back({"q-limits", hi.has_value() && lo.has_value(), false, detail});
    }
  }
  return out;
}

std::vector<SpecializationCheck> lambda_power_specializations() {
  const auto q = [](int e, const BigRational& c = 1) { return LaurentPoly::monomial(kQVar, {e, 0}, c); };
  const LaurentPoly one = LaurentPoly::constant(1, kQVar);
  std::vector<SpecializationCheck> out;
  out.push_back({"5bar 2bar", KnotFamily::twisted(FamilyId::Fam_2k1_2, 2), 1,
                 RationalFunc::reduce(q(1) * (one - q(16)), (one - q(2)) * (one - q(6)) * (one - q(10))), {}});
  out.push_back({"4 3", KnotFamily::twisted(FamilyId::Fam_2k2_3, 1), -1,
                 RationalFunc::reduce(-(one + q(10)), q(1) * (one - q(2)) * (one - q(6))), {}});
  out.push_back({"6 3", KnotFamily::twisted(FamilyId::Fam_2k2_3, 2), 1,
                 RationalFunc::reduce(-(q(1) * (one + q(14))), (one - q(6)) * (one - q(10))), {}});
  for (auto& c : out) {
    const RationalFunc z = hz_pipeline(c.family).value.embed(kHZVars);
    c.computed = z.compose(kQVar, {q(c.lambda_power), q(1)});
    c.pass = c.computed == c.expected;
    c.matches_negated = c.computed == -c.expected;
  }
  return out;
}

}  // namespace hzknots
