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

#include "hzknots/hz/hz.hpp"

#include <stdexcept>

#include "hzknots/algebra/gcd.hpp"

namespace hzknots {

namespace {

const Variables kQVar{"q"};

// (bar * z^e) and e, so that the product has no negative z powers.
std::pair<LaurentPoly, int> clear_z(const LaurentPoly& bar) {
  const LaurentPoly b = bar.embed(kHomflyVars);
  const int e = std::max(0, -b.min_exponent(1));
  return {b.shifted({0, e}), e};
}

}  // namespace

RationalFunc symbolic_from_vz(const LaurentPoly& bar) {
  const auto [cleared, e] = clear_z(bar);
  const LaurentPoly a = LaurentPoly::variable(kSymbolicVars, 0);
  const LaurentPoly step = LaurentPoly::variable(kSymbolicVars, 1) - LaurentPoly::variable(kSymbolicVars, 1, -1);
  const LaurentPoly num = cleared.compose(kSymbolicVars, {a, step});
  return RationalFunc::reduce(num, step.pow(static_cast<unsigned>(e)));
}

LaurentPoly bar_at(const LaurentPoly& bar, int N) {
  const auto [cleared, e] = clear_z(bar);
  const LaurentPoly step = LaurentPoly::variable(kQVar, 0) - LaurentPoly::variable(kQVar, 0, -1);
  const LaurentPoly num = cleared.compose(kQVar, {LaurentPoly::variable(kQVar, 0, N), step});
  auto out = divide_exact(num, step.pow(static_cast<unsigned>(e)));
  if (!out) throw std::logic_error("Hbar(q^N, q) is not a Laurent polynomial");
  return *out;
}

HZFunction hz_transform(const RationalFunc& bar_aq, std::string source) {
  const RationalFunc f = bar_aq.embed(kSymbolicVars);
  if (f.den().min_exponent(0) != 0 || f.den().max_exponent(0) != 0)
    throw std::invalid_argument("HZ transform: denominator depends on a");
  if (f.is_zero()) return {RationalFunc(LaurentPoly(kHZVars)), std::move(source)};

  // Common denominator prod_m (1 - lambda q^m); prefix/suffix products give
  // each term its cofactor without quadratic rework.
  const auto coeffs = f.num().collect(0);
  const LaurentPoly one = LaurentPoly::constant(1, kHZVars);
  std::vector<LaurentPoly> factors, prefix{one}, suffix;
  for (const auto& [m, c] : coeffs) factors.push_back(one - LaurentPoly::monomial(kHZVars, {1, m}));
  for (const auto& g : factors) prefix.push_back(prefix.back() * g);
  suffix.assign(factors.size() + 1, one);
  for (std::size_t i = factors.size(); i-- > 0;) suffix[i] = suffix[i + 1] * factors[i];

  LaurentPoly num(kHZVars);
  std::size_t i = 0;
  for (const auto& [m, c] : coeffs) {
    num += c.embed(kHZVars) * (prefix[i] * suffix[i + 1]);
    ++i;
  }
  const LaurentPoly den = f.den().collect(0).begin()->second.embed(kHZVars) * prefix.back();
  return {RationalFunc::reduce(num, den), std::move(source)};
}

HZFunction hz_pipeline(const KnotFamily& family, HomflyRegistry& registry) {
  const int sign = registry.options().sign;
  if (family.id == FamilyId::TorusMN) {
    RationalFunc bar = torus_explicit_symbolic(family.m, family.n);
    if (sign < 0) bar = -bar;
    return hz_transform(bar, family.to_id());
  }
  return hz_transform(symbolic_from_vz(registry.get(family).unnormalized), family.to_id());
}

HZFunction hz_pipeline(const KnotFamily& family, const HomflyOptions& options) {
  HomflyRegistry registry(options);
  return hz_pipeline(family, registry);
}

HZTableResult hz_from_table(const LaurentPoly& normalized, int sign, std::string source) {
  const LaurentPoly h = normalized.embed(kHomflyVars);
  HZTableResult out;
  bool odd_z = false, odd_v = false;
  for (const auto& t : h.terms()) {
    odd_v = odd_v || t.exp[0] % 2 != 0;
    odd_z = odd_z || t.exp[1] % 2 != 0;
  }
  if (odd_z) out.warnings.push_back("odd powers of z: not the HOMFLY polynomial of a knot");
  if (odd_v) out.warnings.push_back("odd powers of v: not the HOMFLY polynomial of a knot");
  if (!h.is_zero() && h.min_exponent(1) < 0) out.warnings.push_back("negative powers of z: not the HOMFLY polynomial of a knot");
  out.hz = hz_transform(symbolic_from_vz(unknot_factor(sign) * h), std::move(source));
  return out;
}

std::vector<RationalFunc> lambda_series(const RationalFunc& z, int order) {
  const RationalFunc f = z.embed(kHZVars);
  if (f.num().min_exponent(0) < 0) throw std::domain_error("lambda series: pole at lambda = 0");
  const auto n = f.num().collect(0);
  const auto d = f.den().collect(0);
  auto at = [](const std::map<int, LaurentPoly>& c, int i) {
    auto it = c.find(i);
    return it == c.end() ? RationalFunc(LaurentPoly(kQVar)) : RationalFunc(it->second);
  };
  const RationalFunc d0 = at(d, 0);
  if (d0.is_zero()) throw std::domain_error("lambda series: denominator vanishes at lambda = 0");
  std::vector<RationalFunc> s;
  for (int i = 0; i <= order; ++i) {
    RationalFunc acc = at(n, i);
    for (int j = 1; j <= i; ++j) acc -= at(d, j) * s[static_cast<std::size_t>(i - j)];
    s.push_back(acc / d0);
  }
  return s;
}

}  // namespace hzknots
