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

#include "hzknots/hz/hz.hpp"

namespace hzknots::checks {

struct Check {
  std::string name;
  bool pass = false;
  /// Informational entries are reported but never fail a suite.
  bool required = true;
  std::string detail;
};

bool all_pass(const std::vector<Check>& checks);

/// Parameter ranges of the sweeps. full() is what the acceptance binary runs.
struct Ranges {
  int torus_m = 4;
  int torus_n = 9;
  int k_max = 12;
  int jones_m = 3;
  int jones_n = 10;
  int zero_torus_m = 5;
  int zero_torus_n = 17;
  int zero_pretzel_k = 42;
  int zero_family_k = 12;
  int precision_bits = 256;
  double root_tol = 1e-20;
  int jobs = 1;

  static Ranges full() { return {}; }
  static Ranges quick();
};

/// A knot with its Z computed by both routes and its Hbar(v, z).
struct Member {
  KnotFamily family;
  LaurentPoly bar;
  HZFunction pipeline;
  HZFunction closed;
};

/// Coprime torus knots up to (torus_m, torus_n), then every twisted family
/// for min_twist..k_max, in that order. Built on `jobs` threads.
std::vector<Member> build_corpus(const Ranges& ranges);

/// True for the members whose Z is expected to factorize completely: torus
/// knots, the Pretzel family and the other family members that are 5_2.
bool expected_factorized(const KnotFamily& family);

Check torus_oracle(const std::vector<Member>& corpus);
Check family_oracles(const std::vector<Member>& corpus);
Check factorization_census(const std::vector<Member>& corpus);
Check a2_identities(const std::vector<Member>& corpus);
Check residue_identities(const std::vector<Member>& corpus);
Check symmetry_suite(const std::vector<Member>& corpus);
Check zero_structure(const Ranges& ranges);
Check jones_crosscheck(const Ranges& ranges);
Check series_consistency(const std::vector<Member>& corpus);

/// Module suites for `hzknots verify`: algebra, homfly, hz, analysis, zeros.
std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite.
std::vector<Check> run_suite(const std::string& suite, const Ranges& ranges);

}  // namespace hzknots::checks
