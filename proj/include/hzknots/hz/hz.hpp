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
#include <utility>
#include <vector>

#include "hzknots/algebra/rational_func.hpp"
#include "hzknots/homfly/homfly.hpp"

namespace hzknots {

/// Ring of HZ functions; lambda is the primary variable.
inline const Variables kHZVars{"lambda", "q"};
/// Ring of the symbolic HOMFLY, a = q^N.
inline const Variables kSymbolicVars{"a", "q"};

struct HZFunction {
  RationalFunc value;
  std::string source;
};

/// Hbar(v, z) rewritten as a rational function of (a, q) via v = a, z = q - q^-1.
RationalFunc symbolic_from_vz(const LaurentPoly& bar);

/// Hbar(q^N, q) for one integer N, from Hbar(v, z).
LaurentPoly bar_at(const LaurentPoly& bar, int N);

/// Z(q, lambda) = sum_m c_m(q) / (1 - lambda q^m) for Hbar = sum_m c_m(q) a^m,
/// reduced. Throws std::invalid_argument if the denominator involves a.
HZFunction hz_transform(const RationalFunc& bar_aq, std::string source = {});

/// Factorized torus formula; requires gcd(m, n) = 1.
HZFunction torus_hz_closed(int m, int n);

/// Closed form of a family member (torus, twisted, unknot).
/// Throws std::invalid_argument for members without one.
HZFunction family_hz_closed(const KnotFamily& family, bool extrapolate = false);

/// Closed form split as (leading factorized term) + (lambda^2 correction terms).
/// The correction is zero for the torus and Pretzel families.
struct HZSplit {
  RationalFunc factorized;
  RationalFunc correction;
};
HZSplit family_hz_split(const KnotFamily& family, bool extrapolate = false);

/// Z from the HOMFLY pipeline (torus:m,n with m, n > 3 uses the explicit formula).
HZFunction hz_pipeline(const KnotFamily& family, HomflyRegistry& registry);
HZFunction hz_pipeline(const KnotFamily& family, const HomflyOptions& options = {});

struct HZTableResult {
  HZFunction hz;
  std::vector<std::string> warnings;
};
/// Normalized H(v, z) of a knot -> Z. Odd z powers only produce a warning.
HZTableResult hz_from_table(const LaurentPoly& normalized, int sign = 1, std::string source = {});

/// Coefficients of lambda^0 .. lambda^order in the power series of Z, each a
/// rational function of q.
std::vector<RationalFunc> lambda_series(const RationalFunc& z, int order);

/// (1 - sign * lambda * q^k)^multiplicity
struct BasisFactor {
  int sign;
  int k;
  int multiplicity;
  friend bool operator==(const BasisFactor&, const BasisFactor&) = default;
};

struct FactoredForm {
  BigRational coeff = 1;
  int q_exp = 0;
  int lambda_exp = 0;
  std::vector<BasisFactor> num_factors;
  std::vector<BasisFactor> den_factors;
  LaurentPoly residual;      // numerator part outside the basis
  LaurentPoly den_residual;  // denominator part outside the basis (1 for HZ functions)
  bool fully_factorized = false;

  /// prefactor * prod(num) * residual / (prod(den) * den_residual)
  RationalFunc reconstruct() const;
};

/// Trial division by (1 -/+ lambda q^k), |k| <= q-exponent span, with
/// multiplicity; factors ordered sign +1 first, then k ascending.
FactoredForm factorize(const HZFunction& z);
/// Same, with trial candidates (sign, k) taken in the given order. Factor
/// lists are still returned sorted.
FactoredForm factorize(const HZFunction& z, const std::vector<std::pair<int, int>>& candidates);

}  // namespace hzknots
