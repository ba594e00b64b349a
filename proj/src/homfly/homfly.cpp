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

#include "hzknots/homfly/homfly.hpp"

#include <numeric>
#include <stdexcept>

#include "hzknots/algebra/gcd.hpp"

namespace hzknots {

namespace {

const Variables kAQ{"a", "q"};
const Variables kQVar{"q"};

LaurentPoly mono(int ev, int ez, const BigRational& c = 1) { return LaurentPoly::monomial(kHomflyVars, {ev, ez}, c); }

// v^ev z^ez * p
LaurentPoly times(const LaurentPoly& p, int ev, int ez, const BigRational& c = 1) {
  LaurentPoly out = p.embed(kHomflyVars).shifted({ev, ez});
  if (c != 1) out *= c;
  return out;
}

LaurentPoly one() { return LaurentPoly::constant(1, kHomflyVars); }

// sum_{j=lo}^{hi} v^{2j}
LaurentPoly even_power_sum(int lo, int hi) {
  std::vector<LaurentPoly::Term> terms;
  for (int j = lo; j <= hi; ++j) terms.push_back({{2 * j, 0}, 1});
  return LaurentPoly(kHomflyVars, std::move(terms));
}

LaurentPoly divide_by_unknot(const LaurentPoly& bar) {
  auto h = divide_exact(times(bar, 0, 1), mono(1, 0) - mono(-1, 0));
  if (!h) throw std::logic_error("unnormalized HOMFLY is not divisible by the unknot factor");
  return *h;
}

LaurentPoly aq(int ea, int eq, const BigRational& c = 1) { return LaurentPoly::monomial(kAQ, {ea, eq}, c); }

}  // namespace

LaurentPoly unknot_factor(int sign) {
  return (mono(1, -1) - mono(-1, -1)) * BigRational(sign);
}

LaurentPoly HomflyRegistry::torus2(int n) {
  if (n < 1) throw std::invalid_argument("T(2,n) needs n >= 1");
  std::lock_guard lock(mutex_);
  if (torus2_.empty()) {
    torus2_.push_back(LaurentPoly(kHomflyVars));  // unused slot 0
    torus2_.push_back(one());
    torus2_.push_back(times(one() - mono(2, 0) + mono(0, 2), 1, -1));
  }
  while (static_cast<int>(torus2_.size()) <= n) {
    const int i = static_cast<int>(torus2_.size());
    torus2_.push_back(times(torus2_[i - 2], 2, 0) + times(torus2_[i - 1], 1, 1));
  }
  return torus2_[static_cast<std::size_t>(n)];
}

LaurentPoly HomflyRegistry::torus3(int n) {
  if (n < 1) throw std::invalid_argument("T(3,n) needs n >= 1");
  std::lock_guard lock(mutex_);
  if (torus3_.empty()) {
    torus3_.push_back(LaurentPoly(kHomflyVars));
    torus3_.push_back(one());
    torus3_.push_back(torus2(3));
    const LaurentPoly a = times(mono(0, 2), 4, 0) * (2 * one() - mono(2, 0) + mono(0, 2));
    const LaurentPoly b =
        times((one() - mono(2, 0) + mono(0, 2)) * (one() - mono(2, 0) + mono(0, 2, 2)), 4, -2);
    torus3_.push_back(a + b);
  }
  const LaurentPoly tail = one() - mono(2, 0);  // (1 - v^2) H_{T(3,1)}
  while (static_cast<int>(torus3_.size()) <= n) {
    const int i = static_cast<int>(torus3_.size());
    const auto& H = torus3_;
    auto at = [&](int j) -> const LaurentPoly& { return H[static_cast<std::size_t>(j)]; };
    LaurentPoly next(kHomflyVars);
    // sum_{j=lo}^{i-1} v^{2j} H_{T(3,i-j)}
    auto tail_sum = [&](int lo) {
      LaurentPoly s(kHomflyVars);
      for (int j = lo; j <= i - 1; ++j) s += times(at(i - j), 2 * j, 0);
      return s;
    };
    switch (i % 3) {
      case 2:
        next = times(at(i - 1), 2, 0) + times(tail_sum(1), 0, 2) + times(tail, 2 * (i - 1), 0);
        break;
      case 1:
        next = times(at(i - 2), 4, 0) + times(at(i - 1), 2, 2) + times(tail_sum(2), 0, 2, 2) +
               times(tail, 2 * (i - 1), 0, 2);
        break;
      default:
        next = times(at(i - 3), 6, 0) + times(at(i - 1), 2, 2) + times(at(i - 2), 4, 2, 2) +
               times(tail_sum(3), 0, 2, 3) + times(tail, 2 * (i - 1), 0, 3);
        break;
    }
    torus3_.push_back(std::move(next));
  }
  return torus3_[static_cast<std::size_t>(n)];
}

LaurentPoly HomflyRegistry::torus2_bar(int n) { return unknot_factor() * torus2(n); }

LaurentPoly HomflyRegistry::pretzel_bar(int k) {
  std::lock_guard lock(mutex_);
  if (pretzel_.empty()) pretzel_.push_back(twisted_bar(FamilyId::Fam_2k1_2, 1));
  const LaurentPoly trefoil_term = (one() - mono(2, 0) + mono(0, 2)) * torus2_bar(3);
  while (static_cast<int>(pretzel_.size()) <= k) {
    const int i = static_cast<int>(pretzel_.size());
    LaurentPoly s(kHomflyVars);
    for (int j = 1; j <= i; ++j) s += times(pretzel_[static_cast<std::size_t>(i - j)], -2 * j, 0);
    pretzel_.push_back(times(pretzel_.back(), -2, 0) + times(s, 0, 2) - times(trefoil_term, -2 * i, 0));
  }
  return pretzel_[static_cast<std::size_t>(k)];
}

LaurentPoly HomflyRegistry::twisted_bar(FamilyId id, int k) {
  const LaurentPoly U = unknot_factor();
  const LaurentPoly z = mono(0, 1);
  switch (id) {
    case FamilyId::Fam_2k_2:
      return U * (times(one() - mono(-2, 0), 2 * k, 0) + mono(-2, 0) - times(even_power_sum(0, k - 1), 0, 2));
    case FamilyId::Fam_2k1_2:
      return U * (times(one() - mono(2, 0), 2 * (k + 1), 0) + mono(2, 0) + times(even_power_sum(1, k + 1), 0, 2));
    case FamilyId::Fam_2k1_1_2:
      return times(torus2_bar(2 * k + 1), -2, 0) - times(torus2_bar(2 * k + 2), -1, 1);
    case FamilyId::Fam_2k2_3:
      return times(torus2_bar(2 * k + 3), 2, 0) + times(torus2_bar(2 * k + 2), 1, 1);
    case FamilyId::Pretzel_2_3_2k1:
      return pretzel_bar(k);
    case FamilyId::App_2k_1_1_2:
      return times((one() + mono(0, 2)) * torus2_bar(2 * k + 1), -2, 0) - times(torus2_bar(2 * k), -3, 1);
    case FamilyId::App_2_2km1_1_2:
      return times((one() + mono(0, 2)) * twisted_bar(FamilyId::Fam_2k1_2, k - 1), -2, 0) -
             times(torus2_bar(2), -3, 1);
    case FamilyId::App_4_2k2:
      return times(twisted_bar(FamilyId::Fam_2k_2, k + 1), -2, 0) - times(torus2_bar(2), 2 * k - 1, 1) -
             z * (mono(1, 0) - mono(-1, 0)) * even_power_sum(0, k - 1);
    case FamilyId::App_2k2_1_3:
      return times((one() + mono(0, 2)) * twisted_bar(FamilyId::Fam_2k_2, k + 1), -2, 0) -
             times(torus2_bar(2), 2 * k - 3, 1) - z * (mono(1, 0) - mono(-1, 0)) * even_power_sum(-1, k - 2);
    default:
      throw std::invalid_argument("not a twisted family");
  }
}

LaurentPoly HomflyRegistry::normalized(const KnotFamily& f) {
  switch (f.id) {
    case FamilyId::Unknot:
      return one();
    case FamilyId::Torus2n:
      return torus2(f.n);
    case FamilyId::Torus3n:
      return torus3(f.n);
    case FamilyId::TorusMN:
      return homfly_torus_explicit(f.m, f.n).normalized;
    case FamilyId::Composite:
      return normalized(*f.left) * normalized(*f.right);
    case FamilyId::Disjoint:
      return normalized(*f.left) * normalized(*f.right) * -unknot_factor();
    default:
      return divide_by_unknot(twisted_bar(f.id, f.k));
  }
}

HomflyPair HomflyRegistry::get(const KnotFamily& family) {
  validate(family, options_.extrapolate);
  LaurentPoly h = normalized(family).embed(kHomflyVars);
  LaurentPoly bar = unknot_factor(options_.sign) * h;
  return {std::move(h), std::move(bar)};
}

HomflyPair homfly_torus2(int n, const HomflyOptions& options) {
  return HomflyRegistry(options).get(KnotFamily::torus(2, n));
}

HomflyPair homfly_torus3(int n, const HomflyOptions& options) {
  HomflyRegistry r(options);
  if (n < 1) throw std::invalid_argument("T(3,n) needs n >= 1");
  LaurentPoly h = r.torus3(n);
  return {h, unknot_factor(options.sign) * h};
}

HomflyPair homfly_family(const KnotFamily& family, const HomflyOptions& options) {
  return HomflyRegistry(options).get(family);
}

LaurentPoly torus2_knots_only(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("knots-only recursion needs odd n >= 1");
  std::vector<LaurentPoly> h{one()};  // h[k] = H_{T(2,2k+1)}
  for (int k = 1; 2 * k + 1 <= n; ++k) {
    LaurentPoly s(kHomflyVars);
    for (int j = 1; j <= k; ++j) s += times(h[static_cast<std::size_t>(k - j)], 2 * j, 0);
    h.push_back(times(h.back(), 2, 0) + times(s, 0, 2) + times(one() - mono(2, 0), 2 * k, 0));
  }
  return h.back();
}

RationalFunc torus_explicit_symbolic(int m, int n) {
  if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw std::invalid_argument("explicit torus formula needs coprime m, n >= 1");
  const LaurentPoly c1 = LaurentPoly::constant(1, kAQ);
  RationalFunc pref = RationalFunc::reduce(aq(1, 0) - aq(-1, 0), aq(0, 1) - aq(0, -1));
  const int e = (m - 1) * (n - 1);
  pref *= RationalFunc(aq(e, e));
  pref *= RationalFunc::reduce(c1 - aq(0, -2), c1 - aq(0, -2 * m));
  RationalFunc sum{LaurentPoly(kAQ)};
  for (int beta = 0; beta <= m - 1; ++beta) {
    LaurentPoly num = aq(0, -2 * n * beta), den = c1;
    for (int i = 1; i <= beta; ++i) {
      num *= aq(2, 2 * i) - c1;
      den *= aq(0, 2 * i) - c1;
    }
    for (int j = 1; j <= m - 1 - beta; ++j) {
      num *= aq(2, 0) - aq(0, 2 * j);
      den *= c1 - aq(0, 2 * j);
    }
    sum += RationalFunc::reduce(num, den);
  }
  return pref * sum;
}

LaurentPoly torus_explicit_at(int m, int n, int N) {
  const RationalFunc f = torus_explicit_symbolic(m, n);
  const RationalFunc at = f.compose(kQVar, {LaurentPoly::variable(kQVar, 0, N), LaurentPoly::variable(kQVar, 0)});
  if (!at.is_polynomial()) throw std::logic_error("explicit torus formula is not a Laurent polynomial at N");
  return at.num() * (BigRational(1) / at.den().constant_value());
}

LaurentPoly q_to_z(const LaurentPoly& c) {
  const Variables z{"z"};
  LaurentPoly rest = c.embed(kQVar);
  const LaurentPoly step = LaurentPoly::variable(kQVar, 0) - LaurentPoly::variable(kQVar, 0, -1);
  std::vector<LaurentPoly::Term> out;
  while (!rest.is_zero()) {
    const int d = rest.max_exponent(0);
    if (d < 0 || rest.min_exponent(0) != -d) throw std::invalid_argument("not a polynomial in q - q^-1");
    const BigRational coeff = rest.coefficient({d, 0});
    out.push_back({{d, 0}, coeff});
    rest -= step.pow(static_cast<unsigned>(d)) * coeff;
  }
  return LaurentPoly(z, std::move(out));
}

HomflyPair homfly_torus_explicit(int m, int n, int sign) {
  RationalFunc h = torus_explicit_symbolic(m, n) * RationalFunc::reduce(aq(0, 1) - aq(0, -1), aq(1, 0) - aq(-1, 0));
  if (!h.is_polynomial()) throw std::logic_error("explicit torus HOMFLY is not polynomial");
  const LaurentPoly hp = h.num() * (BigRational(1) / h.den().constant_value());
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [ea, coeff] : hp.collect(0)) {
    const LaurentPoly in_z = q_to_z(coeff);
    for (const auto& t : in_z.terms()) terms.push_back({{ea, t.exp[0]}, t.coeff});
  }
  LaurentPoly normalized(kHomflyVars, std::move(terms));
  LaurentPoly bar = unknot_factor(sign) * normalized;
  return {std::move(normalized), std::move(bar)};
}

HomflyPair homfly_compose(ComposeKind kind, const HomflyPair& a, const HomflyPair& b, int sign) {
  LaurentPoly h = a.normalized * b.normalized;
  if (kind == ComposeKind::DisjointUnion) h *= -unknot_factor();
  LaurentPoly bar = unknot_factor(sign) * h;
  return {std::move(h), std::move(bar)};
}

}  // namespace hzknots
