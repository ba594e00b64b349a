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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hzknots/algebra/xseries.hpp"
#include "hzknots/hz/hz.hpp"

namespace hzknots {

// Expansion of Z(e^x, 1) around x = 0.
struct ExpansionReport {
  std::string source;
  int n_or_k = 0;
  int max_exp = 0;
  std::map<int, BigRational> coeffs;  // even exponents only, from -2
  BigRational odd_coeff_max_abs;
  /// lcm of the coefficient denominators, and its largest odd divisor.
  BigInt denominator_lcm = 1;
  BigInt odd_modulus = 1;

  BigRational a(int exponent) const;
};

/// Coefficients of x^-2 .. x^max_exp. Throws std::domain_error if Z(q, 1)
/// vanishes identically or the pole at x = 0 is not of order 2.
ExpansionReport expand_at_1(const HZFunction& z, int max_exp = 12);

/// Closed-form a_{-2} of a twisted family, evaluated at its n(k).
/// Throws std::invalid_argument for families without one.
BigRational a2_closed_form(const KnotFamily& family);

/// Largest odd integer dividing every denominator (1 for an empty list).
BigInt common_odd_modulus(const std::vector<BigRational>& values);

struct LambdaPole {
  int sign;  // pole at lambda = sign * q^-k
  int k;
  int order;
  RationalFunc residue;  // in q
};

struct ResidueReport {
  std::vector<LambdaPole> poles;
  RationalFunc finite_sum;
  RationalFunc infinity_residue;
  bool finite_sum_is_one = false;
  bool total_is_zero = false;
  /// After lambda = 1 the q-denominator is a monomial times cyclotomic factors.
  bool q_poles_at_roots_of_unity = false;
};

/// Throws std::domain_error when the denominator does not factor over the
/// (1 -/+ lambda q^k) basis or lambda = 0 is a pole.
ResidueReport lambda_residues(const HZFunction& z);

struct Lambda2Check {
  RationalFunc factorized_sum;
  RationalFunc correction_sum;
  bool pass = false;
};

/// Residue sums of the two parts of a family's closed form (see family_hz_split).
Lambda2Check lambda2_partial_residue_check(const KnotFamily& family, bool extrapolate = false);

struct CheckResult {
  std::string name;
  bool pass = false;
  /// false for informational entries, which never fail a suite.
  bool required = true;
  std::string detail;
};

/// Top (q -> infinity) or bottom (q -> 0) q-degree ratio; nullopt when the
/// limit is 0 or infinite.
std::optional<RationalFunc> q_limit(const HZFunction& z, bool at_infinity);

/// Checks (i) q, lambda -> 1/q, 1/lambda; (ii) q, lambda -> -1/q, -1/lambda;
/// (iii) q = 1. With a family, also the q -> infinity / 0 limits: required
/// where finite limits 1/lambda and lambda are expected, informational otherwise.
std::vector<CheckResult> symmetry_checks(const HZFunction& z, const std::optional<KnotFamily>& family = {});

struct SpecializationCheck {
  std::string label;
  KnotFamily family;
  int lambda_power;  // lambda = q^lambda_power
  RationalFunc expected;
  RationalFunc computed;
  bool pass = false;
  /// computed == -expected
  bool matches_negated = false;
};

/// Twisted knots whose Z factorizes at lambda = q^{+-1}: 5bar 2bar, 4 3, 6 3.
std::vector<SpecializationCheck> lambda_power_specializations();

}  // namespace hzknots
