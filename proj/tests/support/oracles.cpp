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

#include "oracles.hpp"

#include <stdexcept>

namespace hzknots::oracle {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("divmod by zero");
  QPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  QPoly q(r.size() - b.size() + 1);
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const BigRational f = r.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
  return {q, r};
}

QPoly euclid_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const BigRational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

namespace {

using XPoly = std::vector<QPoly>;  // coefficients in Q[y], index = power of x

void trim(XPoly& p) {
  for (auto& c : p) oracle::trim(c);
  while (!p.empty() && p.back().empty()) p.pop_back();
}

XPoly to_xpoly(const LaurentPoly& p, const LaurentPoly::Exponent& shift) {
  XPoly out;
  for (const auto& t : p.terms()) {
    const auto i = static_cast<std::size_t>(t.exp[0] - shift[0]);
    const auto j = static_cast<std::size_t>(t.exp[1] - shift[1]);
    if (out.size() <= i) out.resize(i + 1);
    if (out[i].size() <= j) out[i].resize(j + 1);
    out[i][j] = t.coeff;
  }
  trim(out);
  return out;
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw std::logic_error("subresultant: inexact division");
  return q;
}

QPoly qpow(const QPoly& a, int e) {
  QPoly r{1};
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

// lc(B)^(degA-degB+1) A = Q B + R
XPoly prem(XPoly a, const XPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  int steps = static_cast<int>(a.size()) - db;
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const QPoly lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = mul(c, b.back());
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mul(lead, b[i]));
    a.pop_back();
    trim(a);
    --steps;
  }
  for (; steps > 0; --steps)
    for (auto& c : a) c = mul(c, b.back());
  return a;
}

QPoly content(const XPoly& p) {
  QPoly g;
  for (const auto& c : p) g = euclid_gcd(g, c);
  return g;
}

}  // namespace

LaurentPoly unit_normal(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const auto shift = p.min_exponents();
  LaurentPoly out = p.shifted({-shift[0], -shift[1]});
  BigInt den = 1, num = 0;
  for (const auto& t : out.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  BigRational scale(den, num);
  scale.canonicalize();
  if (out.trailing_term().coeff < 0) scale = -scale;
  out *= scale;
  return out;
}

LaurentPoly subresultant_gcd(const LaurentPoly& p, const LaurentPoly& q) {
  const Variables vars = unify_variables(p.variables(), q.variables());
  XPoly a = to_xpoly(p.embed(vars), p.embed(vars).min_exponents());
  XPoly b = to_xpoly(q.embed(vars), q.embed(vars).min_exponents());
  if (a.size() < b.size()) std::swap(a, b);
  const QPoly ca = content(a), cb = content(b);
  const QPoly c = euclid_gcd(ca, cb);
  for (auto& x : a) x = exact_div(x, ca);
  for (auto& x : b) x = exact_div(x, cb);

  XPoly g;
  if (b.size() == 1) {
    g = {QPoly{1}};
  } else {
    QPoly gg{1}, h{1};
    for (;;) {
      const int delta = static_cast<int>(a.size() - b.size());
      XPoly r = prem(a, b);
      if (r.empty()) {
        g = b;
        break;
      }
      if (r.size() == 1) {
        g = {QPoly{1}};
        break;
      }
      const QPoly divisor = mul(gg, qpow(h, delta));
      for (auto& x : r) x = exact_div(x, divisor);
      a = std::move(b);
      b = std::move(r);
      gg = a.back();
      // h <- g^delta / h^(delta-1)
      h = delta == 0 ? h : exact_div(qpow(gg, delta), qpow(h, delta - 1));
    }
    const QPoly cg = content(g);
    for (auto& x : g) x = exact_div(x, cg);
  }
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const QPoly row = mul(g[i], c);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) terms.push_back({{static_cast<int>(i), static_cast<int>(j)}, row[j]});
  }
  return unit_normal(LaurentPoly(vars, std::move(terms)));
}

}  // namespace hzknots::oracle
