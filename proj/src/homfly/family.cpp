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

#include "hzknots/homfly/family.hpp"

#include <array>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace hzknots {

namespace {

struct PrefixEntry {
  FamilyId id;
  const char* prefix;
  int min_k;
  int n_offset;  // n = n_offset + 2k
};

constexpr std::array<PrefixEntry, 9> kTwisted{{
    {FamilyId::Fam_2k_2, "fam:2k2", 1, 2},
    {FamilyId::Fam_2k1_2, "fam:2k1_2", 1, 3},
    {FamilyId::Fam_2k1_1_2, "fam:2k1_1_2", 1, 4},
    {FamilyId::Fam_2k2_3, "fam:2k2_3", 0, 5},
    {FamilyId::Pretzel_2_3_2k1, "pretzel", 0, 6},
    {FamilyId::App_2k_1_1_2, "app:a", 1, 4},
    {FamilyId::App_2_2km1_1_2, "app:b", 1, 4},
    {FamilyId::App_4_2k2, "app:c", 1, 6},
    {FamilyId::App_2k2_1_3, "app:d", 1, 6},
}};

const PrefixEntry* twisted_entry(FamilyId id) {
  for (const auto& e : kTwisted)
    if (e.id == id) return &e;
  return nullptr;
}

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(s) + "'");
  return value;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

KnotFamily KnotFamily::torus(int m, int n) {
  KnotFamily f;
  if (m == 2 || n == 2) {
    f.id = FamilyId::Torus2n;
    f.m = 2;
    f.n = m == 2 ? n : m;
  } else if (m == 3 || n == 3) {
    f.id = FamilyId::Torus3n;
    f.m = 3;
    f.n = m == 3 ? n : m;
  } else {
    f.id = FamilyId::TorusMN;
    f.m = m;
    f.n = n;
  }
  return f;
}

KnotFamily KnotFamily::twisted(FamilyId id, int k) {
  if (!twisted_entry(id)) throw std::invalid_argument("not a twisted family");
  KnotFamily f;
  f.id = id;
  f.k = k;
  return f;
}

KnotFamily KnotFamily::composite(const KnotFamily& a, const KnotFamily& b) {
  KnotFamily f;
  f.id = FamilyId::Composite;
  f.left = std::make_shared<const KnotFamily>(a);
  f.right = std::make_shared<const KnotFamily>(b);
  return f;
}

KnotFamily KnotFamily::disjoint(const KnotFamily& a, const KnotFamily& b) {
  KnotFamily f = composite(a, b);
  f.id = FamilyId::Disjoint;
  return f;
}

bool KnotFamily::is_twisted() const { return twisted_entry(id) != nullptr; }

bool KnotFamily::is_knot() const {
  switch (id) {
    case FamilyId::Torus2n:
    case FamilyId::Torus3n:
    case FamilyId::TorusMN:
      return std::gcd(m, n) == 1;
    case FamilyId::Composite:
      return left->is_knot() && right->is_knot();
    case FamilyId::Disjoint:
      return false;
    default:
      return true;
  }
}

int KnotFamily::crossing_n() const {
  if (is_torus()) return n;
  if (const auto* e = twisted_entry(id)) return e->n_offset + 2 * k;
  throw std::invalid_argument("no crossing map for " + to_id());
}

std::string KnotFamily::to_id() const {
  switch (id) {
    case FamilyId::Unknot:
      return "unknot";
    case FamilyId::Torus2n:
    case FamilyId::Torus3n:
    case FamilyId::TorusMN:
      return "torus:" + std::to_string(m) + "," + std::to_string(n);
    case FamilyId::Composite:
      return "compose:sum(" + left->to_id() + "," + right->to_id() + ")";
    case FamilyId::Disjoint:
      return "compose:disjoint(" + left->to_id() + "," + right->to_id() + ")";
    default:
      return family_prefix(id) + ":k=" + std::to_string(k);
  }
}

int min_twist(FamilyId id) {
  if (const auto* e = twisted_entry(id)) return e->min_k;
  throw std::invalid_argument("not a twisted family");
}

std::string family_prefix(FamilyId id) {
  if (const auto* e = twisted_entry(id)) return e->prefix;
  throw std::invalid_argument("not a twisted family");
}

std::optional<FamilyId> family_from_prefix(std::string_view prefix) {
  for (const auto& e : kTwisted)
    if (prefix == e.prefix) return e.id;
  return std::nullopt;
}

void validate(const KnotFamily& f, bool extrapolate) {
  switch (f.id) {
    case FamilyId::Unknot:
      return;
    case FamilyId::Torus2n:
    case FamilyId::Torus3n:
      if (f.n < 1) throw std::invalid_argument("torus parameter n must be >= 1");
      return;
    case FamilyId::TorusMN:
      if (f.m < 1 || f.n < 1) throw std::invalid_argument("torus parameters must be >= 1");
      if (std::gcd(f.m, f.n) != 1) throw std::invalid_argument("torus:m,n needs gcd(m,n) = 1 beyond 3 strands");
      return;
    case FamilyId::Composite:
    case FamilyId::Disjoint:
      validate(*f.left, extrapolate);
      validate(*f.right, extrapolate);
      return;
    default: {
      const int lo = extrapolate ? 0 : min_twist(f.id);
      if (f.k < lo)
        throw std::invalid_argument("parameter k=" + std::to_string(f.k) + " out of range for " + family_prefix(f.id) +
                                    " (k >= " + std::to_string(lo) + ")");
      if (f.k > kMaxTwist) throw std::invalid_argument("parameter k exceeds the depth cap " + std::to_string(kMaxTwist));
    }
  }
}

KnotFamily parse_family_id(std::string_view text, bool extrapolate) {
  KnotFamily f;
  if (text == "unknot") return f;
  if (starts_with(text, "torus:")) {
    const std::string_view rest = text.substr(6);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("expected torus:m,n");
    const int m = parse_int(rest.substr(0, comma), "torus m");
    const int n = parse_int(rest.substr(comma + 1), "torus n");
    if (m < 1 || n < 1) throw std::invalid_argument("torus parameters must be >= 1");
    f = KnotFamily::torus(m, n);
  } else if (starts_with(text, "compose:")) {
    std::string_view rest = text.substr(8);
    bool sum;
    if (starts_with(rest, "sum(")) {
      sum = true;
      rest = rest.substr(4);
    } else if (starts_with(rest, "disjoint(")) {
      sum = false;
      rest = rest.substr(9);
    } else {
      throw std::invalid_argument("expected compose:sum(...) or compose:disjoint(...)");
    }
    if (rest.empty() || rest.back() != ')') throw std::invalid_argument("missing ')' in compose id");
    rest.remove_suffix(1);
    // Children may contain commas themselves; take the first top-level split
    // where both halves parse.
    int depth = 0;
    std::string last_error = "expected two comma-separated ids";
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == '(') ++depth;
      if (rest[i] == ')') --depth;
      if (rest[i] != ',' || depth != 0) continue;
      try {
        const KnotFamily a = parse_family_id(rest.substr(0, i), extrapolate);
        const KnotFamily b = parse_family_id(rest.substr(i + 1), extrapolate);
        return sum ? KnotFamily::composite(a, b) : KnotFamily::disjoint(a, b);
      } catch (const std::invalid_argument& e) {
        last_error = e.what();
      }
    }
    throw std::invalid_argument(last_error);
  } else {
    const auto colon = text.rfind(":k=");
    if (colon == std::string_view::npos) throw std::invalid_argument("unknown family '" + std::string(text) + "'");
    const auto id = family_from_prefix(text.substr(0, colon));
    if (!id) throw std::invalid_argument("unknown family '" + std::string(text.substr(0, colon)) + "'");
    f = KnotFamily::twisted(*id, parse_int(text.substr(colon + 3), "k"));
  }
  validate(f, extrapolate);
  return f;
}

}  // namespace hzknots
