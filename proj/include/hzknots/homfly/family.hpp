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

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace hzknots {

enum class FamilyId {
  Torus2n,
  Torus3n,
  TorusMN,
  Fam_2k_2,
  Fam_2k1_2,
  Fam_2k1_1_2,
  Fam_2k2_3,
  Pretzel_2_3_2k1,
  App_2k_1_1_2,
  App_2_2km1_1_2,
  App_4_2k2,
  App_2k2_1_3,
  Unknot,
  Composite,
  Disjoint,
};

/// Largest twist parameter accepted by any family.
inline constexpr int kMaxTwist = 10000;

/// A member of one of the implemented knot families. Torus members carry
/// (m, n); twisted families carry k; Composite/Disjoint carry two children.
struct KnotFamily {
  FamilyId id = FamilyId::Unknot;
  int m = 0;
  int n = 0;
  int k = 0;
  std::shared_ptr<const KnotFamily> left;
  std::shared_ptr<const KnotFamily> right;

  static KnotFamily unknot() { return {}; }
  /// Picks Torus2n / Torus3n when one of m, n is 2 or 3, else TorusMN.
  static KnotFamily torus(int m, int n);
  static KnotFamily twisted(FamilyId id, int k);
  static KnotFamily composite(const KnotFamily& a, const KnotFamily& b);
  static KnotFamily disjoint(const KnotFamily& a, const KnotFamily& b);

  bool is_torus() const { return id == FamilyId::Torus2n || id == FamilyId::Torus3n || id == FamilyId::TorusMN; }
  bool is_twisted() const;
  /// One component (torus with gcd 1, twisted families, sums of knots).
  bool is_knot() const;

  /// Crossing number n(k) of a twisted-family member, or the torus n.
  int crossing_n() const;

  /// Canonical id string, e.g. "torus:2,3", "fam:2k1_2:k=2".
  std::string to_id() const;

  friend bool operator==(const KnotFamily& a, const KnotFamily& b) { return a.to_id() == b.to_id(); }
};

/// Smallest admitted k of a twisted family.
int min_twist(FamilyId id);

/// "fam:2k2" style prefix of a twisted family.
std::string family_prefix(FamilyId id);
std::optional<FamilyId> family_from_prefix(std::string_view prefix);

/// Parses an id string; throws std::invalid_argument with a message naming
/// the problem. Parameter ranges are checked (see min_twist) unless
/// `extrapolate` is set, which admits k >= 0.
KnotFamily parse_family_id(std::string_view text, bool extrapolate = false);

/// Throws std::invalid_argument if the parameters are out of range.
void validate(const KnotFamily& family, bool extrapolate = false);

}  // namespace hzknots
