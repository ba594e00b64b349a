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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hzknots/algebra/bigrational.hpp"

namespace hzknots {

/// Ordered list of 0, 1 or 2 variable names. Index 0 is the primary variable.
using Variables = std::vector<std::string>;

/// Exact Laurent polynomial in at most two named variables with rational
/// coefficients. Terms are kept sorted by exponent vector (lexicographic,
/// primary first) with no stored zeros, so structural equality is equality.
///
/// A polynomial over fewer variables is embedded into a larger ring on demand;
/// combining polynomials whose variable names cannot be aligned throws
/// std::invalid_argument.
class LaurentPoly {
 public:
  using Exponent = std::array<int, 2>;
  struct Term {
    Exponent exp;
    BigRational coeff;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(Variables vars);
  LaurentPoly(Variables vars, std::vector<Term> terms);

  static LaurentPoly constant(const BigRational& c, Variables vars = {});
  static LaurentPoly monomial(Variables vars, Exponent exp, const BigRational& c = 1);
  /// `vars[index]^power`.
  static LaurentPoly variable(Variables vars, std::size_t index, int power = 1);

  const Variables& variables() const noexcept { return vars_; }
  std::size_t num_variables() const noexcept { return vars_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// The constant value; throws if not constant.
  BigRational constant_value() const;

  BigRational coefficient(const Exponent& exp) const;
  /// Index of `name` in variables(), if present.
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Smallest / largest exponent of variable `index` over all terms (0 for zero).
  int min_exponent(std::size_t index) const;
  int max_exponent(std::size_t index) const;
  Exponent min_exponents() const;

  const Term& trailing_term() const { return terms_.front(); }

  /// Re-expresses this polynomial in a ring whose variables include ours.
  LaurentPoly embed(const Variables& target) const;

  /// Multiplies by the monomial with exponent `shift`.
  LaurentPoly shifted(const Exponent& shift) const;
  LaurentPoly pow(unsigned exponent) const;

  /// Groups terms by the exponent of variable `index`; each value is a
  /// polynomial in the remaining variable.
  std::map<int, LaurentPoly> collect(std::size_t index) const;

  /// Substitutes a rational number for variable `index`. The result lives in
  /// the ring of the remaining variable.
  LaurentPoly evaluate(std::size_t index, const BigRational& value) const;

  /// Ring homomorphism: variable i is replaced by `images[i]` (polynomials in
  /// the ring `target`). Negative powers need a monomial image.
  LaurentPoly compose(const Variables& target, const std::vector<LaurentPoly>& images) const;

  /// Renames the variables without touching the terms.
  LaurentPoly renamed(Variables names) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const BigRational& scalar);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend LaurentPoly operator*(const BigRational& lhs, LaurentPoly rhs) { return rhs *= lhs; }

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs);

  /// Canonical rendering, e.g. `-1*v^4 + 2*v^2 + 1*v^2*z^2`: primary exponent
  /// descending, secondary ascending, zero exponents omitted.
  std::string to_string() const;

 private:
  void normalize();

  Variables vars_;
  std::vector<Term> terms_;
};

/// Common ring of two variable lists; throws std::invalid_argument when the
/// names cannot be aligned.
Variables unify_variables(const Variables& a, const Variables& b);

}  // namespace hzknots
