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

#include "hzknots/algebra/laurent_poly.hpp"

namespace hzknots {

/// Quotient of two Laurent polynomials over a common ring, always kept in
/// canonical reduced form: gcd(num, den) is a monomial, den has no negative
/// exponents and no monomial factor, and den's trailing coefficient is +1.
/// Canonical form makes operator== structural.
class RationalFunc {
 public:
  RationalFunc() : den_(LaurentPoly::constant(1)) {}
  explicit RationalFunc(const LaurentPoly& num);

  /// Builds num/den and reduces it. Throws std::domain_error for den == 0.
  static RationalFunc reduce(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  const Variables& variables() const noexcept { return num_.variables(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunc embed(const Variables& target) const;

  /// Substitutes a rational value for variable `index`. Throws
  /// std::domain_error when the denominator vanishes there.
  RationalFunc evaluate(std::size_t index, const BigRational& value) const;

  /// Ring map with variable i -> images[i] (Laurent polynomials in `target`).
  /// Negative powers need monomial images.
  RationalFunc compose(const Variables& target, const std::vector<LaurentPoly>& images) const;

  RationalFunc operator-() const;
  friend RationalFunc operator+(const RationalFunc& f, const RationalFunc& g);
  friend RationalFunc operator-(const RationalFunc& f, const RationalFunc& g);
  friend RationalFunc operator*(const RationalFunc& f, const RationalFunc& g);
  /// Throws std::domain_error when g == 0.
  friend RationalFunc operator/(const RationalFunc& f, const RationalFunc& g);
  RationalFunc& operator+=(const RationalFunc& g) { return *this = *this + g; }
  RationalFunc& operator-=(const RationalFunc& g) { return *this = *this - g; }
  RationalFunc& operator*=(const RationalFunc& g) { return *this = *this * g; }

  friend bool operator==(const RationalFunc& f, const RationalFunc& g);

  /// `num` when den == 1, otherwise `(num)/(den)`.
  std::string to_string() const;

 private:
  RationalFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  // Assumes gcd(num, den) is a unit.
  static RationalFunc canonical(LaurentPoly num, LaurentPoly den);

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Substitution for the symmetry and rescaling maps: each entry sends a
/// variable to a signed monomial, e.g. q -> -q^-1 or lambda -> q^6*lambda.
/// Variables not mentioned map to themselves. Throws std::invalid_argument for
/// a non-monomial image (the result would leave the Laurent ring).
struct MonomialImage {
  std::string var;
  LaurentPoly image;
};
RationalFunc subst_exponent_scale(const RationalFunc& f, const std::vector<MonomialImage>& map);

}  // namespace hzknots
