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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "checks.hpp"
#include "pool.hpp"

using namespace hzknots;
using namespace hzknots::checks;

namespace {

// Pinned sweep parameters and wall-clock budgets (seconds).
constexpr int kPrecisionBits = 256;
constexpr double kRootTolerance = 1e-20;
constexpr double kTorusBudget = 30;
constexpr double kFamilyBudget = 120;
constexpr double kZeroBudget = 300;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hzknots acceptance criteria"};
  int jobs = default_jobs();
  app.add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  Ranges ranges = Ranges::full();
  ranges.precision_bits = kPrecisionBits;
  ranges.root_tol = kRootTolerance;
  ranges.jobs = jobs;

  int failed = 0;
  auto report = [&](int id, Check c, double elapsed, double budget) {
    if (budget > 0 && elapsed > budget) {
      c.pass = false;
      c.detail += "; over the " + std::to_string(static_cast<int>(budget)) + " s budget";
    }
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", elapsed);
    std::cout << "criterion " << id << " " << (c.pass ? "PASS" : "FAIL") << " " << c.name << " [" << time << "] " << c.detail
              << std::endl;
    failed += c.pass ? 0 : 1;
  };
  auto timed = [&](int id, double budget, const std::function<Check()>& run) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c = run();
    report(id, std::move(c), seconds_since(t0), budget);
  };

  Ranges torus_only = ranges;
  torus_only.k_max = -1;
  Ranges families_only = ranges;
  families_only.torus_m = 1;

  std::vector<Member> corpus;
  timed(1, kTorusBudget, [&] {
    corpus = build_corpus(torus_only);
    return torus_oracle(corpus);
  });
  timed(2, kFamilyBudget, [&] {
    auto families = build_corpus(families_only);
    Check c = family_oracles(families);
    corpus.insert(corpus.end(), families.begin(), families.end());
    return c;
  });
  timed(3, 0, [&] { return factorization_census(corpus); });
  timed(4, 0, [&] { return a2_identities(corpus); });
  timed(5, 0, [&] { return residue_identities(corpus); });
  timed(6, 0, [&] { return symmetry_suite(corpus); });
  timed(7, kZeroBudget, [&] { return zero_structure(ranges); });
  timed(8, 0, [&] { return jones_crosscheck(ranges); });
  timed(9, 0, [&] { return series_consistency(corpus); });

  std::cout << (9 - failed) << "/9 criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
