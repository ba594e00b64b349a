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

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hzknots::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kIdentity = 3, kNonConvergence = 4 };

enum class Format { Text, Json };

struct RunConfig {
  int precision_bits = 256;
  double circle_tol = 1e-10;
  double pair_tol = 1e-8;
  int order = 12;
  bool strict = false;
  int sign = 1;
  bool extrapolate = false;
  int jobs = 1;
  Format format = Format::Text;
  std::string csv_path;
  std::string svg_path;
};

/// Which ways of computing Z a command was asked for; neither means pipeline.
struct Routes {
  bool closed_form = false;
  bool pipeline = false;
};

/// Raised for bad arguments discovered after option parsing (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output of one command: the JSON document, its text rendering and the
/// exit code.
struct Outcome {
  Json json;
  std::string text;
  int exit_code = kOk;
};

Outcome cmd_homfly(const std::vector<std::string>& ids, const RunConfig& config);
Outcome cmd_hz(const std::vector<std::string>& ids, Routes routes, bool check_factorized, const RunConfig& config);
Outcome cmd_expand(const std::vector<std::string>& ids, Routes routes, const RunConfig& config);
Outcome cmd_residues(const std::vector<std::string>& ids, Routes routes, const RunConfig& config);
Outcome cmd_zeros(const std::vector<std::string>& ids, Routes routes, const RunConfig& config);
Outcome cmd_ingest(const std::string& path, const RunConfig& config);
Outcome cmd_verify(const std::string& suite, bool quick, const RunConfig& config);

}  // namespace hzknots::cli
