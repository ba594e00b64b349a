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

#include <algorithm>
#include <map>

#include "hzknots/hz/hz.hpp"

namespace hzknots {

namespace {

const Variables kQVar{"q"};

// p(lambda = s q^-k) == 0
bool vanishes_at(const LaurentPoly& p, int s, int k) {
  std::map<int, BigRational> acc;
  for (const auto& t : p.terms()) {
    BigRational c = t.coeff;
    if (s < 0 && t.exp[0] % 2 != 0) c = -c;
    acc[t.exp[1] - k * t.exp[0]] += c;
  }
  return std::all_of(acc.begin(), acc.end(), [](const auto& e) { return e.second == 0; });
}

// Quotient of p by (1 - s lambda q^k); p must have min lambda exponent 0 and
// vanish at lambda = s q^-k.
LaurentPoly divide_basis(const LaurentPoly& p, int s, int k) {
  const auto c = p.collect(0);
  const int d = c.rbegin()->first;
  LaurentPoly prev(kQVar), out(kHZVars);
  for (int i = 0; i < d; ++i) {
    auto it = c.find(i);
    LaurentPoly cur = it == c.end() ? LaurentPoly(kQVar) : it->second.embed(kQVar);
    cur += prev.shifted({k, 0}) * BigRational(s);
    out += cur.embed(kHZVars).shifted({i, 0});
    prev = std::move(cur);
  }
  return out;
}

struct BasisSplit {
  BigRational coeff = 1;
  int q_exp = 0;
  int lambda_exp = 0;
  std::vector<BasisFactor> factors;
  LaurentPoly residual;
};

void strip_monomial(LaurentPoly& p, BasisSplit& out) {
  const auto lo = p.min_exponents();
  out.lambda_exp += lo[0];
  out.q_exp += lo[1];
  p = p.shifted({-lo[0], -lo[1]});
  const BigRational c = p.trailing_term().coeff;
  out.coeff *= c;
  p *= BigRational(1) / c;
}

std::vector<std::pair<int, int>> default_candidates(int span) {
  std::vector<std::pair<int, int>> out;
  for (int s : {1, -1})
    for (int k = -span; k <= span; ++k) out.emplace_back(s, k);
  return out;
}

BasisSplit split_basis(const LaurentPoly& poly, const std::vector<std::pair<int, int>>* candidates) {
  BasisSplit out;
  LaurentPoly p = poly.embed(kHZVars);
  strip_monomial(p, out);
  const auto list = candidates ? *candidates : default_candidates(p.max_exponent(1) - p.min_exponent(1));
  for (const auto& [s, k] : list) {
    int mult = 0;
    while (p.max_exponent(0) > 0 && vanishes_at(p, s, k)) {
      p = divide_basis(p, s, k);
      ++mult;
    }
    if (mult > 0) out.factors.push_back({s, k, mult});
  }
  strip_monomial(p, out);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const BasisFactor& a, const BasisFactor& b) { return a.sign != b.sign ? a.sign > b.sign : a.k < b.k; });
  out.residual = std::move(p);
  return out;
}

LaurentPoly expand(const std::vector<BasisFactor>& factors) {
  LaurentPoly out = LaurentPoly::constant(1, kHZVars);
  const LaurentPoly one = out;
  for (const auto& f : factors)
    out *= (one - LaurentPoly::monomial(kHZVars, {1, f.k}, f.sign)).pow(static_cast<unsigned>(f.multiplicity));
  return out;
}

FactoredForm factorize_impl(const HZFunction& z, const std::vector<std::pair<int, int>>* candidates) {
  const RationalFunc f = z.value.embed(kHZVars);
  FactoredForm out;
  if (f.is_zero()) {
    out.coeff = 0;
    out.residual = out.den_residual = LaurentPoly::constant(1, kHZVars);
    out.fully_factorized = true;
    return out;
  }
  BasisSplit num = split_basis(f.num(), candidates);
  BasisSplit den = split_basis(f.den(), candidates);
  out.coeff = num.coeff / den.coeff;
  out.q_exp = num.q_exp - den.q_exp;
  out.lambda_exp = num.lambda_exp - den.lambda_exp;
  out.num_factors = std::move(num.factors);
  out.den_factors = std::move(den.factors);
  out.residual = std::move(num.residual);
  out.den_residual = std::move(den.residual);
  out.fully_factorized = out.residual.max_exponent(0) == 0 && out.den_residual.max_exponent(0) == 0;
  return out;
}

}  // namespace

RationalFunc FactoredForm::reconstruct() const {
  const LaurentPoly pre = LaurentPoly::monomial(kHZVars, {lambda_exp, q_exp}, coeff);
  return RationalFunc::reduce(pre * expand(num_factors) * residual.embed(kHZVars),
                              expand(den_factors) * den_residual.embed(kHZVars));
}

FactoredForm factorize(const HZFunction& z) { return factorize_impl(z, nullptr); }

FactoredForm factorize(const HZFunction& z, const std::vector<std::pair<int, int>>& candidates) {
  return factorize_impl(z, &candidates);
}

}  // namespace hzknots
