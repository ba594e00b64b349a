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

#pragma once

#include <string>
#include <vector>

#include "hzknots/algebra/rational_func.hpp"

namespace hzknots {

/// Truncated Laurent series c_0 x^m + c_1 x^(m+1) + ... + c_r x^(m+r) where
/// m = min_exp() and r = order(). Terms beyond x^(m+r) are unknown.
class XSeries {
 public:
  XSeries() = default;
  XSeries(int min_exp, std::vector<BigRational> coeffs);

  int min_exp() const noexcept { return min_exp_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Largest exponent whose coefficient is known.
  int max_exp() const noexcept { return min_exp_ + order(); }
  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^e; zero below min_exp, throws std::out_of_range above max_exp.
  BigRational coefficient(int e) const;
  bool is_zero() const;

  friend XSeries operator+(const XSeries& a, const XSeries& b);
  friend XSeries operator-(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  /// Throws std::domain_error if b is zero to its stored order.
  friend XSeries operator/(const XSeries& a, const XSeries& b);

  std::string to_string() const;

 private:
  void strip_leading_zeros();

  int min_exp_ = 0;
  std::vector<BigRational> coeffs_;
};

/// Series in x of a univariate Laurent polynomial in q with q = e^x, giving
/// `count` coefficients starting at its x-adic valuation.
XSeries exp_series(const LaurentPoly& p, int count);

/// Sets lambda (if present) to `lambda_value`, then expands f(e^x) with
/// order + 1 coefficients starting at the pole/zero order.
XSeries to_xseries(const RationalFunc& f, const BigRational& lambda_value, int order = 12,
                   const std::string& lambda_name = "lambda");

}  // namespace hzknots
