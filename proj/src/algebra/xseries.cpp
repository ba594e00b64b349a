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

#include "hzknots/algebra/xseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace hzknots {

XSeries::XSeries(int min_exp, std::vector<BigRational> coeffs) : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  strip_leading_zeros();
}

void XSeries::strip_leading_zeros() {
  std::size_t lead = 0;
  while (lead + 1 < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == 0) return;
  // Dropping known zeros keeps max_exp fixed.
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  min_exp_ += static_cast<int>(lead);
}

BigRational XSeries::coefficient(int e) const {
  if (e < min_exp_) return 0;
  if (e > max_exp()) throw std::out_of_range("coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

bool XSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c == 0; });
}

XSeries operator+(const XSeries& a, const XSeries& b) {
  const int lo = std::min(a.min_exp_, b.min_exp_);
  const int hi = std::min(a.max_exp(), b.max_exp());
  std::vector<BigRational> c;
  for (int e = lo; e <= hi; ++e) c.push_back(a.coefficient(e) + b.coefficient(e));
  return XSeries(lo, std::move(c));
}

XSeries operator-(const XSeries& a, const XSeries& b) {
  std::vector<BigRational> neg = b.coeffs_;
  for (auto& c : neg) c = -c;
  return a + XSeries(b.min_exp_, std::move(neg));
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
  std::vector<BigRational> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return XSeries(a.min_exp_ + b.min_exp_, std::move(c));
}

XSeries operator/(const XSeries& a, const XSeries& b) {
  if (b.coeffs_.empty() || b.coeffs_[0] == 0) throw std::domain_error("series division by zero");
  const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
  std::vector<BigRational> c(n);
  const BigRational inv = 1 / b.coeffs_[0];
  for (std::size_t i = 0; i < n; ++i) {
    BigRational s = a.coeffs_[i];
    for (std::size_t j = 1; j <= i; ++j) s -= b.coeffs_[j] * c[i - j];
    c[i] = s * inv;
  }
  return XSeries(a.min_exp_ - b.min_exp_, std::move(c));
}

std::string XSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += hzknots::to_string(coeffs_[i]) + "*x^" + std::to_string(min_exp_ + static_cast<int>(i));
  }
  return (out.empty() ? "0" : out) + " + O(x^" + std::to_string(max_exp() + 1) + ")";
}

XSeries exp_series(const LaurentPoly& p, int count) {
  if (p.num_variables() > 1) throw std::invalid_argument("exp_series needs a univariate polynomial");
  if (p.is_zero()) throw std::domain_error("series of the zero polynomial");
  // Coefficient of x^j is sum_t c_t k_t^j / j!. With T distinct exponents the
  // first T of these cannot all vanish, so the valuation is below T.
  const std::size_t terms = p.size();
  std::vector<BigRational> c(p.terms().size());
  std::vector<BigInt> k(p.terms().size()), pw(p.terms().size(), 1);
  for (std::size_t t = 0; t < terms; ++t) {
    c[t] = p.terms()[t].coeff;
    k[t] = p.terms()[t].exp[0];
  }
  std::vector<BigRational> out;
  BigInt fact = 1;
  int valuation = -1;
  for (int j = 0; valuation < 0 || j < valuation + count; ++j) {
    if (j > 0) fact *= j;
    BigRational s = 0;
    for (std::size_t t = 0; t < terms; ++t) {
      s += c[t] * pw[t];
      pw[t] *= k[t];
    }
    if (valuation < 0 && s == 0) continue;
    if (valuation < 0) valuation = j;
    out.push_back(s / fact);
  }
  for (auto& x : out) x.canonicalize();
  return XSeries(valuation, std::move(out));
}

XSeries to_xseries(const RationalFunc& f, const BigRational& lambda_value, int order, const std::string& lambda_name) {
  if (order < 0) throw std::invalid_argument("negative series order");
  RationalFunc g = f;
  if (auto idx = f.num().index_of(lambda_name)) g = f.evaluate(*idx, lambda_value);
  if (g.num().num_variables() > 1) throw std::invalid_argument("to_xseries needs a function of q alone");
  const int count = order + 1;
  if (g.is_zero()) return XSeries(0, std::vector<BigRational>(static_cast<std::size_t>(count)));
  return exp_series(g.num(), count) / exp_series(g.den(), count);
}

}  // namespace hzknots
