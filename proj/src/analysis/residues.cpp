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

#include <stdexcept>

#include "hzknots/algebra/gcd.hpp"
#include "hzknots/analysis/analysis.hpp"

namespace hzknots {

namespace {

const Variables kQVar{"q"};

RationalFunc zero_q() { return RationalFunc(LaurentPoly(kQVar)); }
RationalFunc const_q(const BigRational& c) { return RationalFunc(LaurentPoly::constant(c, kQVar)); }

// Coefficients of t^0 .. t^(count-1) in p(sign q^-k + t), as polynomials in q.
std::vector<RationalFunc> taylor_at(const LaurentPoly& p, int sign, int k, int count) {
  std::vector<std::vector<LaurentPoly::Term>> terms(static_cast<std::size_t>(count));
  BigInt binom;
  for (const auto& t : p.terms()) {
    const int i = t.exp[0];
    for (int l = 0; l < count && l <= i; ++l) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(l));
      BigRational c = t.coeff * binom;
      if (sign < 0 && (i - l) % 2 != 0) c = -c;
      terms[static_cast<std::size_t>(l)].push_back({{t.exp[1] - k * (i - l), 0}, c});
    }
  }
  std::vector<RationalFunc> out;
  for (auto& ts : terms) out.emplace_back(LaurentPoly(kQVar, std::move(ts)));
  return out;
}

// Coefficients in lambda, as rational functions of q, lowest first.
std::vector<RationalFunc> lambda_coeffs(const LaurentPoly& p) {
  std::vector<RationalFunc> out;
  for (const auto& [i, c] : p.collect(0)) {
    out.resize(static_cast<std::size_t>(i) + 1, zero_q());
    out[static_cast<std::size_t>(i)] = RationalFunc(c.embed(kQVar));
  }
  return out;
}

bool is_cyclotomic_product(LaurentPoly den) {
  den = den.shifted({-den.min_exponent(0), 0});
  const int degree = den.max_exponent(0);
  std::vector<LaurentPoly> phi(static_cast<std::size_t>(degree) + 1);
  for (int k = 1; k <= degree && !den.is_constant(); ++k) {
    LaurentPoly p = LaurentPoly::variable(kQVar, 0, k) - LaurentPoly::constant(1, kQVar);
    for (int d = 1; d < k; ++d)
      if (k % d == 0) p = *divide_exact(p, phi[static_cast<std::size_t>(d)]);
    phi[static_cast<std::size_t>(k)] = p;
    while (auto quot = divide_exact(den, p)) den = *quot;
  }
  return den.is_constant();
}

}  // namespace

ResidueReport lambda_residues(const HZFunction& z) {
  const RationalFunc f = z.value.embed(kHZVars);
  if (!f.is_zero() && f.num().min_exponent(0) < 0) throw std::domain_error("pole at lambda = 0");
  const FactoredForm factored = factorize(z);
  if (factored.den_residual.max_exponent(0) > 0)
    throw std::domain_error("denominator does not factor over (1 -/+ lambda q^k)");

  ResidueReport out;
  out.finite_sum = zero_q();
  const LaurentPoly one = LaurentPoly::constant(1, kHZVars);
  for (const auto& pole : factored.den_factors) {
    const LaurentPoly lin = one - LaurentPoly::monomial(kHZVars, {1, pole.k}, pole.sign);
    const auto rest = divide_exact(f.den(), lin.pow(static_cast<unsigned>(pole.multiplicity)));
    if (!rest) throw std::logic_error("pole factor does not divide the denominator");
    const int r = pole.multiplicity;
    const auto n = taylor_at(f.num(), pole.sign, pole.k, r);
    const auto e = taylor_at(*rest, pole.sign, pole.k, r);
    // Series of N/E around the pole, up to t^(r-1).
    std::vector<RationalFunc> g;
    for (int j = 0; j < r; ++j) {
      RationalFunc acc = n[static_cast<std::size_t>(j)];
      for (int l = 1; l <= j; ++l) acc -= e[static_cast<std::size_t>(l)] * g[static_cast<std::size_t>(j - l)];
      g.push_back(acc / e[0]);
    }
    // lin = -sign q^k (lambda - lambda0)
    const LaurentPoly scale = LaurentPoly::monomial(kQVar, {pole.k, 0}, -pole.sign).pow(static_cast<unsigned>(r));
    RationalFunc residue = g.back() / RationalFunc(scale);
    out.finite_sum += residue;
    out.poles.push_back({pole.sign, pole.k, r, std::move(residue)});
  }

  // Residue at infinity: minus the lambda^-1 coefficient of the remainder
  // part R/D, i.e. -R_{deg D - 1} / lc(D).
  auto num = lambda_coeffs(f.num());
  const auto den = lambda_coeffs(f.den());
  const std::size_t b = den.size() - 1;
  for (std::size_t i = num.size(); i-- > b;) {
    const RationalFunc c = num[i] / den[b];
    for (std::size_t j = 0; j <= b; ++j) num[i - b + j] -= c * den[j];
  }
  const RationalFunc rem = b >= 1 && b - 1 < num.size() ? num[b - 1] : zero_q();
  out.infinity_residue = -(rem / den[b]);

  out.finite_sum_is_one = out.finite_sum == const_q(1);
  out.total_is_zero = (out.finite_sum + out.infinity_residue).is_zero();
  const RationalFunc at1 = f.evaluate(0, 1);
  out.q_poles_at_roots_of_unity = is_cyclotomic_product(at1.den().embed(kQVar));
  return out;
}

Lambda2Check lambda2_partial_residue_check(const KnotFamily& family, bool extrapolate) {
  const HZSplit split = family_hz_split(family, extrapolate);
  Lambda2Check out;
  out.factorized_sum = lambda_residues({split.factorized, family.to_id()}).finite_sum;
  out.correction_sum =
      split.correction.is_zero() ? zero_q() : lambda_residues({split.correction, family.to_id()}).finite_sum;
  out.pass = out.factorized_sum == const_q(1) && out.correction_sum.is_zero();
  return out;
}

}  // namespace hzknots
