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

#include "hzknots/algebra/laurent_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace hzknots {

namespace {

bool is_subset(const Variables& small, const Variables& big) {
  return std::all_of(small.begin(), small.end(),
                     [&](const std::string& v) { return std::find(big.begin(), big.end(), v) != big.end(); });
}

std::string join(const Variables& vars) {
  std::string out = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + vars[i];
  return out + "}";
}

BigInt denominator_lcm(const std::vector<LaurentPoly::Term>& terms) {
  BigInt l = 1;
  for (const auto& t : terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  return l;
}

}  // namespace

Variables unify_variables(const Variables& a, const Variables& b) {
  if (a == b) return a;
  if (is_subset(a, b)) return b;
  if (is_subset(b, a)) return a;
  throw std::invalid_argument("mismatched variables " + join(a) + " and " + join(b));
}

LaurentPoly::LaurentPoly(Variables vars) : vars_(std::move(vars)) {
  if (vars_.size() > 2) throw std::invalid_argument("at most two variables are supported");
}

LaurentPoly::LaurentPoly(Variables vars, std::vector<Term> terms) : LaurentPoly(std::move(vars)) {
  terms_ = std::move(terms);
  normalize();
}

LaurentPoly LaurentPoly::constant(const BigRational& c, Variables vars) {
  LaurentPoly p(std::move(vars));
  if (c != 0) p.terms_.push_back({{0, 0}, c});
  return p;
}

LaurentPoly LaurentPoly::monomial(Variables vars, Exponent exp, const BigRational& c) {
  LaurentPoly p(std::move(vars));
  if (p.vars_.size() < 2 && exp[1] != 0) throw std::invalid_argument("exponent for missing variable");
  if (p.vars_.empty() && exp[0] != 0) throw std::invalid_argument("exponent for missing variable");
  if (c != 0) p.terms_.push_back({exp, c});
  return p;
}

LaurentPoly LaurentPoly::variable(Variables vars, std::size_t index, int power) {
  if (index >= vars.size()) throw std::invalid_argument("variable index out of range");
  Exponent e{0, 0};
  e[index] = power;
  return monomial(std::move(vars), e);
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exp == t.exp) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.coeff == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{0, 0});
}

BigRational LaurentPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? BigRational(0) : terms_[0].coeff;
}

BigRational LaurentPoly::coefficient(const Exponent& exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, const Exponent& e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

std::optional<std::size_t> LaurentPoly::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

int LaurentPoly::min_exponent(std::size_t index) const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::max();
  for (const auto& t : terms_) m = std::min(m, t.exp[index]);
  return m;
}

int LaurentPoly::max_exponent(std::size_t index) const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::min();
  for (const auto& t : terms_) m = std::max(m, t.exp[index]);
  return m;
}

LaurentPoly::Exponent LaurentPoly::min_exponents() const { return {min_exponent(0), min_exponent(1)}; }

LaurentPoly LaurentPoly::embed(const Variables& target) const {
  if (target == vars_) return *this;
  if (!is_subset(vars_, target))
    throw std::invalid_argument("cannot embed " + join(vars_) + " into " + join(target));
  std::array<std::size_t, 2> where{0, 0};
  for (std::size_t i = 0; i < vars_.size(); ++i)
    where[i] = static_cast<std::size_t>(std::find(target.begin(), target.end(), vars_[i]) - target.begin());
  LaurentPoly out(target);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent e{0, 0};
    for (std::size_t i = 0; i < vars_.size(); ++i) e[where[i]] = t.exp[i];
    out.terms_.push_back({e, t.coeff});
  }
  out.normalize();
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) {
    t.exp[0] += shift[0];
    t.exp[1] += shift[1];
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result = constant(1, vars_);
  LaurentPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::map<int, LaurentPoly> LaurentPoly::collect(std::size_t index) const {
  if (index >= vars_.size()) throw std::invalid_argument("collect: variable index out of range");
  Variables rest;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (i != index) rest.push_back(vars_[i]);
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Exponent e{0, 0};
    if (vars_.size() == 2) e[0] = t.exp[1 - index];
    buckets[t.exp[index]].push_back({e, t.coeff});
  }
  std::map<int, LaurentPoly> out;
  for (auto& [k, ts] : buckets) out.emplace(k, LaurentPoly(rest, std::move(ts)));
  return out;
}

LaurentPoly LaurentPoly::evaluate(std::size_t index, const BigRational& value) const {
  LaurentPoly out;
  bool first = true;
  for (const auto& [k, coeff] : collect(index)) {
    if (value == 0 && k < 0) throw std::domain_error("evaluation at 0 of a negative power");
    BigRational factor = 1;
    if (k != 0) {
      BigRational base = k > 0 ? value : BigRational(1) / value;
      mpz_pow_ui(factor.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::abs(k)));
      mpz_pow_ui(factor.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::abs(k)));
      factor.canonicalize();
    }
    if (first) {
      out = LaurentPoly(coeff.variables());
      first = false;
    }
    out += coeff * factor;
  }
  if (first) {
    Variables rest;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (i != index) rest.push_back(vars_[i]);
    out = LaurentPoly(rest);
  }
  return out;
}

LaurentPoly LaurentPoly::compose(const Variables& target, const std::vector<LaurentPoly>& images) const {
  if (images.size() != vars_.size()) throw std::invalid_argument("compose: one image per variable required");
  std::vector<LaurentPoly> img;
  for (const auto& im : images) img.push_back(im.embed(unify_variables(im.variables(), target)).embed(target));
  // Powers are cached per variable since exponents repeat heavily.
  std::vector<std::map<int, LaurentPoly>> cache(vars_.size());
  auto power = [&](std::size_t i, int k) -> const LaurentPoly& {
    auto it = cache[i].find(k);
    if (it != cache[i].end()) return it->second;
    LaurentPoly p;
    if (k >= 0) {
      p = img[i].pow(static_cast<unsigned>(k));
    } else {
      if (!img[i].is_monomial())
        throw std::domain_error("substitution of a non-monomial into a negative power leaves the Laurent ring");
      const auto& t = img[i].terms_[0];
      BigRational c = BigRational(1) / t.coeff;
      LaurentPoly inv = monomial(target, {-t.exp[0], -t.exp[1]}, c);
      p = inv.pow(static_cast<unsigned>(-k));
    }
    p = p.embed(target);
    return cache[i].emplace(k, std::move(p)).first->second;
  };
  LaurentPoly out(target);
  for (const auto& t : terms_) {
    LaurentPoly term = constant(t.coeff, target);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (t.exp[i] != 0) term *= power(i, t.exp[i]);
    out += term;
  }
  return out;
}

LaurentPoly LaurentPoly::renamed(Variables names) const {
  if (names.size() != vars_.size()) throw std::invalid_argument("renamed: variable count mismatch");
  LaurentPoly out = *this;
  out.vars_ = std::move(names);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  const Variables ring = unify_variables(vars_, rhs.vars_);
  if (ring != vars_) *this = embed(ring);
  const LaurentPoly& r = rhs.vars_ == ring ? rhs : rhs.embed(ring);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + r.terms_.size());
  auto a = terms_.begin();
  auto b = r.terms_.begin();
  while (a != terms_.end() || b != r.terms_.end()) {
    if (b == r.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      merged.push_back(*b++);
    } else {
      BigRational c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigRational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  const Variables ring = unify_variables(lhs.vars_, rhs.vars_);
  if (lhs.is_zero() || rhs.is_zero()) return LaurentPoly(ring);
  const LaurentPoly a = lhs.embed(ring);
  const LaurentPoly b = rhs.embed(ring);
  if (a.is_monomial() || b.is_monomial()) {
    const LaurentPoly& m = a.is_monomial() ? a : b;
    const LaurentPoly& p = a.is_monomial() ? b : a;
    LaurentPoly out = p.shifted(m.terms_[0].exp);
    out *= m.terms_[0].coeff;
    return out;
  }

  // Products are accumulated over the integers after clearing denominators.
  const BigInt la = denominator_lcm(a.terms_);
  const BigInt lb = denominator_lcm(b.terms_);
  auto integerize = [](const std::vector<LaurentPoly::Term>& ts, const BigInt& l) {
    std::vector<BigInt> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(t.coeff.get_num() * (l / t.coeff.get_den()));
    return out;
  };
  const std::vector<BigInt> ca = integerize(a.terms_, la);
  const std::vector<BigInt> cb = integerize(b.terms_, lb);

  const auto amin = a.min_exponents();
  const auto bmin = b.min_exponents();
  const std::int64_t w0 = std::int64_t(a.max_exponent(0)) + b.max_exponent(0) - amin[0] - bmin[0] + 1;
  const std::int64_t w1 = std::int64_t(a.max_exponent(1)) + b.max_exponent(1) - amin[1] - bmin[1] + 1;
  const std::int64_t area = w0 * w1;
  const std::int64_t work = std::int64_t(a.size()) * std::int64_t(b.size());

  std::vector<LaurentPoly::Term> terms;
  const BigRational scale(1, la * lb);
  if (area <= 4 * work + 4096 && area <= (std::int64_t(1) << 26)) {
    std::vector<BigInt> acc(static_cast<std::size_t>(area));
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const auto& ei = a.terms_[i].exp;
      for (std::size_t j = 0; j < b.terms_.size(); ++j) {
        const auto& ej = b.terms_[j].exp;
        const std::int64_t r = ei[0] + ej[0] - amin[0] - bmin[0];
        const std::int64_t c = ei[1] + ej[1] - amin[1] - bmin[1];
        mpz_addmul(acc[static_cast<std::size_t>(r * w1 + c)].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
      }
    }
    for (std::int64_t idx = 0; idx < area; ++idx) {
      if (acc[static_cast<std::size_t>(idx)] == 0) continue;
      LaurentPoly::Exponent e{static_cast<int>(idx / w1 + amin[0] + bmin[0]),
                              static_cast<int>(idx % w1 + amin[1] + bmin[1])};
      terms.push_back({e, BigRational(acc[static_cast<std::size_t>(idx)]) * scale});
    }
  } else {
    std::map<LaurentPoly::Exponent, BigInt> acc;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      for (std::size_t j = 0; j < b.terms_.size(); ++j) {
        LaurentPoly::Exponent e{a.terms_[i].exp[0] + b.terms_[j].exp[0], a.terms_[i].exp[1] + b.terms_[j].exp[1]};
        mpz_addmul(acc[e].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
      }
    for (auto& [e, c] : acc)
      if (c != 0) terms.push_back({e, BigRational(c) * scale});
  }
  for (auto& t : terms) t.coeff.canonicalize();
  LaurentPoly out(ring);
  out.terms_ = std::move(terms);
  return out;
}

bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.vars_ == rhs.vars_) {
    if (lhs.terms_.size() != rhs.terms_.size()) return false;
    for (std::size_t i = 0; i < lhs.terms_.size(); ++i)
      if (lhs.terms_[i].exp != rhs.terms_[i].exp || lhs.terms_[i].coeff != rhs.terms_[i].coeff) return false;
    return true;
  }
  Variables ring;
  try {
    ring = unify_variables(lhs.vars_, rhs.vars_);
  } catch (const std::invalid_argument&) {
    return lhs.is_zero() && rhs.is_zero();
  }
  return lhs.embed(ring) == rhs.embed(ring);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    if (a->exp[0] != b->exp[0]) return a->exp[0] > b->exp[0];
    return a->exp[1] < b->exp[1];
  });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    BigRational c = t->coeff;
    if (first) {
      first = false;
    } else if (c < 0) {
      out += " - ";
      c = -c;
    } else {
      out += " + ";
    }
    out += hzknots::to_string(c);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (t->exp[i] != 0) out += "*" + vars_[i] + "^" + std::to_string(t->exp[i]);
  }
  return out;
}

}  // namespace hzknots
