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

#include <mutex>
#include <vector>

#include "hzknots/algebra/laurent_poly.hpp"
#include "hzknots/algebra/rational_func.hpp"
#include "hzknots/homfly/family.hpp"

namespace hzknots {

/// Ring of the HOMFLY variables.
inline const Variables kHomflyVars{"v", "z"};

/// Normalized H (unknot = 1) and unnormalized Hbar = sign * H * (v - v^-1)/z.
struct HomflyPair {
  LaurentPoly normalized;
  LaurentPoly unnormalized;
};

struct HomflyOptions {
  /// Global sign toggle on the unknot factor, +1 or -1.
  int sign = 1;
  /// Admit twist parameters below the default ranges (k >= 0).
  bool extrapolate = false;
};

/// sign * (v - v^-1) / z.
LaurentPoly unknot_factor(int sign = 1);

/// Memo table for the recursive families, safe to share between threads.
class HomflyRegistry {
 public:
  explicit HomflyRegistry(HomflyOptions options = {}) : options_(options) {}

  const HomflyOptions& options() const { return options_; }

  HomflyPair get(const KnotFamily& family);

  /// Normalized H of T(2,n), n >= 1 (links included).
  LaurentPoly torus2(int n);
  /// Normalized H of T(3,n), n >= 1 (links included).
  LaurentPoly torus3(int n);

 private:
  // Hbar with sign +1 for a twisted family member.
  LaurentPoly twisted_bar(FamilyId id, int k);
  LaurentPoly torus2_bar(int n);
  LaurentPoly pretzel_bar(int k);
  LaurentPoly normalized(const KnotFamily& family);

  HomflyOptions options_;
  // Members are filled in increasing order; the recursions refer back to
  // every earlier entry.
  std::recursive_mutex mutex_;
  std::vector<LaurentPoly> torus2_;
  std::vector<LaurentPoly> torus3_;
  std::vector<LaurentPoly> pretzel_;
};

HomflyPair homfly_torus2(int n, const HomflyOptions& options = {});
HomflyPair homfly_torus3(int n, const HomflyOptions& options = {});
HomflyPair homfly_family(const KnotFamily& family, const HomflyOptions& options = {});

/// Knots-only recursion for T(2, 2k+1), normalized. n must be odd.
LaurentPoly torus2_knots_only(int n);

/// Explicit torus formula as a rational function in (a, q), a = q^N.
/// Requires gcd(m, n) = 1.
RationalFunc torus_explicit_symbolic(int m, int n);
/// The same formula evaluated at integer N.
LaurentPoly torus_explicit_at(int m, int n, int N);
/// Normalized HOMFLY of T(m, n) recovered from the explicit formula.
HomflyPair homfly_torus_explicit(int m, int n, int sign = 1);

/// Rewrites a Laurent polynomial in q, invariant under q -> -1/q, as a
/// polynomial in z = q - q^-1. Throws std::invalid_argument otherwise.
LaurentPoly q_to_z(const LaurentPoly& c);

enum class ComposeKind { ConnectedSum, DisjointUnion };
HomflyPair homfly_compose(ComposeKind kind, const HomflyPair& a, const HomflyPair& b, int sign = 1);

}  // namespace hzknots
