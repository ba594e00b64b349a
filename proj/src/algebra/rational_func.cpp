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

#include "hzknots/algebra/rational_func.hpp"

#include <stdexcept>

#include "hzknots/algebra/gcd.hpp"

namespace hzknots {

RationalFunc::RationalFunc(const LaurentPoly& num)
    : num_(num), den_(LaurentPoly::constant(1, num.variables())) {}

RationalFunc RationalFunc::canonical(LaurentPoly num, LaurentPoly den) {
  const Variables vars = unify_variables(num.variables(), den.variables());
  num = num.embed(vars);
  den = den.embed(vars);
  if (num.is_zero()) return {std::move(num), LaurentPoly::constant(1, vars)};
  const auto shift = den.min_exponents();
  const BigRational inv = BigRational(1) / den.trailing_term().coeff;
  num = num.shifted({-shift[0], -shift[1]});
  den = den.shifted({-shift[0], -shift[1]});
  num *= inv;
  den *= inv;
  return {std::move(num), std::move(den)};
}

RationalFunc RationalFunc::reduce(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero() || den.is_monomial() || num.is_monomial()) return canonical(num, den);
  auto g = poly_gcd_cofactors(num, den);
  return canonical(std::move(g.p_cofactor), std::move(g.q_cofactor));
}

RationalFunc RationalFunc::embed(const Variables& target) const { return {num_.embed(target), den_.embed(target)}; }

RationalFunc RationalFunc::evaluate(std::size_t index, const BigRational& value) const {
  LaurentPoly d = den_.evaluate(index, value);
  if (d.is_zero()) throw std::domain_error("denominator vanishes at the evaluation point");
  return reduce(num_.evaluate(index, value), d);
}

RationalFunc RationalFunc::compose(const Variables& target, const std::vector<LaurentPoly>& images) const {
  return reduce(num_.compose(target, images), den_.compose(target, images));
}

RationalFunc RationalFunc::operator-() const { return {-num_, den_}; }

RationalFunc operator+(const RationalFunc& f, const RationalFunc& g) {
  if (f.is_zero()) return g.embed(unify_variables(f.variables(), g.variables()));
  if (g.is_zero()) return f.embed(unify_variables(f.variables(), g.variables()));
  if (f.den_.is_constant() && g.den_.is_constant())
    return RationalFunc::canonical(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
  if (f.den_ == g.den_) return RationalFunc::reduce(f.num_ + g.num_, f.den_);
  auto c = poly_gcd_cofactors(f.den_, g.den_);
  return RationalFunc::reduce(f.num_ * c.q_cofactor + g.num_ * c.p_cofactor, f.den_ * c.q_cofactor);
}

RationalFunc operator-(const RationalFunc& f, const RationalFunc& g) { return f + (-g); }

RationalFunc operator*(const RationalFunc& f, const RationalFunc& g) {
  if (f.is_zero() || g.is_zero())
    return RationalFunc(LaurentPoly(unify_variables(f.variables(), g.variables())));
  if (f.den_.is_constant() && g.den_.is_constant()) return RationalFunc::canonical(f.num_ * g.num_, f.den_ * g.den_);
  // Cross-cancel so the products stay small.
  LaurentPoly a = f.num_, b = f.den_, c = g.num_, d = g.den_;
  if (!a.is_monomial() && !d.is_monomial()) {
    auto x = poly_gcd_cofactors(a, d);
    a = std::move(x.p_cofactor);
    d = std::move(x.q_cofactor);
  }
  if (!c.is_monomial() && !b.is_monomial()) {
    auto x = poly_gcd_cofactors(c, b);
    c = std::move(x.p_cofactor);
    b = std::move(x.q_cofactor);
  }
  return RationalFunc::canonical(a * c, b * d);
}

RationalFunc operator/(const RationalFunc& f, const RationalFunc& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero function");
  return f * RationalFunc::canonical(g.den_, g.num_);
}

bool operator==(const RationalFunc& f, const RationalFunc& g) {
  if (f.variables() == g.variables()) return f.num_ == g.num_ && f.den_ == g.den_;
  const Variables vars = unify_variables(f.variables(), g.variables());
  return f.num_.embed(vars) == g.num_.embed(vars) && f.den_.embed(vars) == g.den_.embed(vars);
}

std::string RationalFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunc subst_exponent_scale(const RationalFunc& f, const std::vector<MonomialImage>& map) {
  const Variables& vars = f.variables();
  std::vector<LaurentPoly> images;
  for (std::size_t i = 0; i < vars.size(); ++i) images.push_back(LaurentPoly::variable(vars, i));
  for (const auto& m : map) {
    if (!m.image.is_monomial()) throw std::invalid_argument("image of " + m.var + " is not a monomial");
    bool found = false;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == m.var) {
        images[i] = m.image.embed(vars);
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown variable " + m.var);
  }
  return f.compose(vars, images);
}

}  // namespace hzknots
