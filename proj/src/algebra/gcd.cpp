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

#include "hzknots/algebra/gcd.hpp"

#include <stdexcept>

#include "hzknots/algebra/detail/dense.hpp"

namespace hzknots {

namespace {

// p == scale * x^shift * dense, dense primitive with integer coefficients.
struct Dense {
  detail::BiPoly poly;
  LaurentPoly::Exponent shift;
  BigRational scale;
};

Dense to_dense(const LaurentPoly& p) {
  Dense out{{}, p.min_exponents(), 1};
  BigInt den = 1;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  const int dx = p.max_exponent(0) - out.shift[0];
  out.poly.assign(static_cast<std::size_t>(dx) + 1, {});
  BigInt g = 0;
  for (const auto& t : p.terms()) {
    const auto i = static_cast<std::size_t>(t.exp[0] - out.shift[0]);
    const auto j = static_cast<std::size_t>(t.exp[1] - out.shift[1]);
    auto& row = out.poly[i];
    if (row.size() <= j) row.resize(j + 1);
    row[j] = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
  }
  for (auto& row : out.poly)
    for (auto& c : row)
      if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  out.scale = BigRational(g, den);
  out.scale.canonicalize();
  return out;
}

LaurentPoly from_dense(const detail::BiPoly& poly, const Variables& vars, const LaurentPoly::Exponent& shift,
                       const BigRational& scale) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < poly.size(); ++i)
    for (std::size_t j = 0; j < poly[i].size(); ++j)
      if (poly[i][j] != 0)
        terms.push_back({{static_cast<int>(i) + shift[0], static_cast<int>(j) + shift[1]},
                         BigRational(poly[i][j]) * scale});
  return LaurentPoly(vars, std::move(terms));
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& q) { return poly_gcd_cofactors(p, q).gcd; }

GcdCofactors poly_gcd_cofactors(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("gcd of the zero polynomial");
  const Variables vars = unify_variables(p.variables(), q.variables());
  const Dense a = to_dense(p.embed(vars));
  const Dense b = to_dense(q.embed(vars));
  const detail::BiPoly g = detail::gcd(a.poly, b.poly);
  const auto ca = detail::divide_exact(a.poly, g);
  const auto cb = detail::divide_exact(b.poly, g);
  if (!ca || !cb) throw std::logic_error("gcd does not divide its inputs");
  LaurentPoly gcd = from_dense(g, vars, {0, 0}, 1);
  BigRational sign = 1;
  if (gcd.trailing_term().coeff < 0) {
    gcd = -gcd;
    sign = -1;
  }
  return {std::move(gcd), from_dense(*ca, vars, a.shift, a.scale * sign), from_dense(*cb, vars, b.shift, b.scale * sign)};
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly(unify_variables(p.variables(), d.variables()));
  const Variables vars = unify_variables(p.variables(), d.variables());
  if (d.is_monomial()) {
    const LaurentPoly::Term t = d.embed(vars).trailing_term();
    LaurentPoly out = p.embed(vars).shifted({-t.exp[0], -t.exp[1]});
    out *= BigRational(1) / t.coeff;
    return out;
  }
  const Dense a = to_dense(p.embed(vars));
  const Dense b = to_dense(d.embed(vars));
  auto q = detail::divide_exact(a.poly, b.poly);
  if (!q) return std::nullopt;
  return from_dense(*q, vars, {a.shift[0] - b.shift[0], a.shift[1] - b.shift[1]}, a.scale / b.scale);
}

}  // namespace hzknots
