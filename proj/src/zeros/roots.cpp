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

#include "hzknots/zeros/zeros.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hzknots/algebra/gcd.hpp"

namespace hzknots {

namespace {

const Variables kQVar{"q"};

template <class Real>
Real make(double x, int prec);
template <>
double make<double>(double x, int) {
  return x;
}
template <>
MpReal make<MpReal>(double x, int prec) {
  return MpReal(x, prec);
}

template <class Real>
Real from_rational(const BigRational& x, int prec);
template <>
double from_rational<double>(const BigRational& x, int) {
  return x.get_d();
}
template <>
MpReal from_rational<MpReal>(const BigRational& x, int prec) {
  return MpReal(x, prec);
}

// Ascending coefficients of an ordinary polynomial.
template <class Real>
std::vector<Real> dense(const LaurentPoly& p, int prec) {
  std::vector<Real> out(static_cast<std::size_t>(p.max_exponent(0)) + 1, make<Real>(0, prec));
  for (const auto& t : p.terms()) out[static_cast<std::size_t>(t.exp[0])] = from_rational<Real>(t.coeff, prec);
  return out;
}

template <class Real>
void horner(const std::vector<Real>& c, const Complex<Real>& z, Complex<Real>& p, Complex<Real>& dp, int prec) {
  p = {c.back(), make<Real>(0, prec)};
  dp = {make<Real>(0, prec), make<Real>(0, prec)};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z;
    p.re += c[i];
  }
}

template <class Real>
Complex<Real> recip(const Complex<Real>& a) {
  const Real d = a.re * a.re + a.im * a.im;
  return {a.re / d, -a.im / d};
}

template <class Real>
bool is_zero(const Complex<Real>& a) {
  return a.re == 0 && a.im == 0;
}
bool is_zero(const MpComplex& a) { return a.re.is_zero() && a.im.is_zero(); }

template <class Real>
bool outside_unit_disc(const Complex<Real>& z, int prec) {
  return z.re * z.re + z.im * z.im > make<Real>(1, prec);
}

// Coefficients of p and of its reversal z^d p(1/z), which is evaluated for
// |z| > 1 to keep Horner's intermediate values bounded.
template <class Real>
struct Evaluator {
  std::vector<Real> c, rev;
  int prec;

  Evaluator(std::vector<Real> coeffs, int precision) : c(std::move(coeffs)), rev(c.rbegin(), c.rend()), prec(precision) {}

  // p(z) / p'(z); false when p(z) = 0 or p'(z) = 0 (ratio is then unset).
  bool newton_ratio(const Complex<Real>& z, Complex<Real>& ratio) const {
    Complex<Real> p, dp;
    if (!outside_unit_disc(z, prec)) {
      horner(c, z, p, dp, prec);
      if (is_zero(p) || is_zero(dp)) return false;
      ratio = p / dp;
      return true;
    }
    // p / p' = z / (d - w r'(w) / r(w)) with w = 1/z, r the reversal.
    const Complex<Real> w = recip(z);
    horner(rev, w, p, dp, prec);
    if (is_zero(p)) return false;
    const Complex<Real> d{make<Real>(static_cast<double>(c.size() - 1), prec), make<Real>(0, prec)};
    const Complex<Real> den = d - w * dp / p;
    if (is_zero(den)) return false;
    ratio = z / den;
    return true;
  }
};

// Gauss-Seidel Aberth-Ehrlich sweeps; returns the sweep count at convergence
// or -1 after cap sweeps.
template <class Real>
int aberth(const Evaluator<Real>& ev, std::vector<Complex<Real>>& z, const Real& tol, int cap) {
  const int prec = ev.prec;
  const std::size_t n = z.size();
  const Complex<Real> one{make<Real>(1, prec), make<Real>(0, prec)};
  Complex<Real> ratio;
  for (int it = 1; it <= cap; ++it) {
    Real worst = make<Real>(0, prec);
    for (std::size_t i = 0; i < n; ++i) {
      if (!ev.newton_ratio(z[i], ratio)) continue;
      Complex<Real> sum{make<Real>(0, prec), make<Real>(0, prec)};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += recip(z[i] - z[j]);
      const Complex<Real> w = ratio / (one - ratio * sum);
      z[i] -= w;
      const Real size = abs(w);
      if (size > worst) worst = size;
    }
    if (worst < tol) return it;
  }
  return -1;
}

LaurentPoly derivative(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> out;
  for (const auto& t : p.terms())
    if (t.exp[0] != 0) out.push_back({{t.exp[0] - 1, 0}, t.coeff * t.exp[0]});
  return LaurentPoly(kQVar, std::move(out));
}

LaurentPoly ordinary(const LaurentPoly& p) { return p.shifted({-p.min_exponent(0), 0}); }

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("squarefree decomposition: inexact division");
  return *q;
}

// Yun: p = prod f_i^i, returned as (f_i, i) with deg f_i >= 1.
std::vector<std::pair<LaurentPoly, int>> squarefree(const LaurentPoly& p) {
  std::vector<std::pair<LaurentPoly, int>> out;
  const LaurentPoly dp = derivative(p);
  const LaurentPoly a0 = ordinary(poly_gcd(p, dp));
  LaurentPoly b = exact_quotient(p, a0);
  LaurentPoly c = exact_quotient(dp, a0);
  LaurentPoly d = c - derivative(b);
  for (int i = 1; b.max_exponent(0) > 0; ++i) {
    const LaurentPoly a = d.is_zero() ? b : ordinary(poly_gcd(b, d));
    if (a.max_exponent(0) > 0) out.emplace_back(a, i);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - derivative(b);
  }
  return out;
}

std::vector<Root> roots_of_squarefree(const LaurentPoly& f, int multiplicity, const LaurentPoly& original,
                                      const ZeroOptions& options) {
  const int prec = options.precision_bits;
  const int deg = f.max_exponent(0);
  std::vector<Root> out;
  if (deg == 1) {
    const BigRational r = -f.coefficient({0, 0}) / f.coefficient({1, 0});
    MpComplex z{MpReal(r, prec), MpReal(prec)};
    out.push_back({z, MpReal(prec), abs(eval_complex(original, z)), multiplicity});
    return out;
  }

  // Start on a circle of radius |a_0 / a_d|^(1/d), rotated off the real axis.
  const double radius =
      std::pow(std::abs(f.coefficient({0, 0}).get_d() / f.coefficient({deg, 0}).get_d()), 1.0 / deg);
  std::vector<Complex<double>> zd;
  for (int k = 0; k < deg; ++k) {
    const double theta = 2 * std::numbers::pi * (k + 0.4) / deg + 0.1;
    zd.push_back({radius * std::cos(theta), radius * std::sin(theta)});
  }
  aberth(Evaluator<double>(dense<double>(f, 0), 0), zd, 1e-14, std::min(options.max_iterations, 200));

  std::vector<MpComplex> z;
  for (std::size_t k = 0; k < zd.size(); ++k) {
    Complex<double> w = zd[k];
    if (!std::isfinite(w.re) || !std::isfinite(w.im)) {
      const double theta = 2 * std::numbers::pi * (static_cast<double>(k) + 0.4) / deg + 0.1;
      w = {radius * std::cos(theta), radius * std::sin(theta)};
    }
    z.push_back({MpReal(w.re, prec), MpReal(w.im, prec)});
  }
  const Evaluator<MpReal> ev(dense<MpReal>(f, prec), prec);
  const MpReal tol = MpReal::pow2(-prec / 2, prec);
  if (aberth(ev, z, tol, options.max_iterations) < 0)
    throw NonConvergence("root iteration did not converge in " + std::to_string(options.max_iterations) + " sweeps");

  MpComplex ratio;
  for (auto& r : z) {
    MpReal radius_bound = ev.newton_ratio(r, ratio) ? abs(ratio) * MpReal(static_cast<double>(deg), prec) : MpReal(prec);
    MpReal residual = abs(eval_complex(original, r));
    out.push_back({std::move(r), std::move(radius_bound), std::move(residual), multiplicity});
  }
  return out;
}

}  // namespace

LaurentPoly zero_polynomial(const HZFunction& z) {
  const RationalFunc at1 = z.value.embed(kHZVars).evaluate(0, 1);
  if (at1.is_zero()) throw std::domain_error("Z(q, 1) vanishes identically");
  LaurentPoly p = ordinary(at1.num().embed(kQVar));
  if (p.trailing_term().coeff < 0) p = -p;
  return p;
}

std::vector<Root> find_roots(const LaurentPoly& p, const ZeroOptions& options) {
  const LaurentPoly poly = p.embed(kQVar);
  if (poly.is_zero() || poly.min_exponent(0) != 0 || poly.max_exponent(0) < 1)
    throw std::invalid_argument("find_roots needs degree >= 1 and a nonzero constant term");
  std::vector<Root> out;
  for (const auto& [f, mult] : squarefree(poly)) {
    auto part = roots_of_squarefree(f, mult, poly, options);
    for (auto& r : part) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hzknots
