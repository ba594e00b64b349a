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

#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "pool.hpp"

using namespace hzknots::cli;

int main(int argc, char** argv) {
  CLI::App app{"Harer-Zagier transforms of HOMFLY polynomials for knot families"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  config.jobs = hzknots::checks::default_jobs();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", config.precision_bits, "Root finding precision in bits")
      ->envname("HZKNOTS_PRECISION");
  app.add_flag("--strict", config.strict, "Identity mismatches and bad input lines are fatal")->envname("HZKNOTS_STRICT");
  app.add_option("--sign", config.sign, "Sign of the unknot factor")->check(CLI::IsMember({1, -1}));
  app.add_flag("--extrapolate", config.extrapolate, "Admit k >= 0 for every family");
  app.add_option("--order", config.order, "Highest exponent of the q = e^x expansion")->check(CLI::Range(2, 200));
  app.add_option("--circle-tol", config.circle_tol, "||r| - 1| below which a root is on the circle")
      ->check(CLI::PositiveNumber);
  app.add_option("--pair-tol", config.pair_tol, "Distance for conformal pairing")->check(CLI::PositiveNumber);
  app.add_option("-j,--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> ids;
  Routes routes;
  bool check_factorized = false;
  auto family_command = [&](const std::string& name, const std::string& help, bool with_routes) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("ids", ids, "Family ids, e.g. torus:2,3 fam:2k2:k=1 pretzel:k=0")->required();
    if (with_routes) {
      sub->add_flag("--closed-form", routes.closed_form, "Use the closed form");
      sub->add_flag("--pipeline", routes.pipeline, "Use the HOMFLY pipeline (default); with --closed-form, compare both");
    }
    return sub;
  };
  CLI::App* homfly = family_command("homfly", "Normalized and unnormalized HOMFLY polynomials", false);
  CLI::App* hz = family_command("hz", "HZ transform Z(q, lambda)", true);
  hz->add_flag("--check-factorized", check_factorized, "Factorize over (1 -/+ lambda q^k)");
  CLI::App* expand = family_command("expand", "Expansion of Z(e^x, 1) at x = 0", true);
  CLI::App* residues = family_command("residues", "Residues of Z in lambda", true);
  CLI::App* zeros = family_command("zeros", "Zeros of Z(q, 1)", true);
  zeros->add_option("--csv", config.csv_path, "Write the roots as CSV");
  zeros->add_option("--svg", config.svg_path, "Write a 600x600 SVG plot");

  std::string ingest_path;
  CLI::App* ingest = app.add_subcommand("ingest", "Z and factorization for a file of 'name : polynomial' lines");
  ingest->add_option("path", ingest_path, "Input file")->required();

  std::string suite;
  bool quick = false;
  CLI::App* verify = app.add_subcommand("verify", "Run a check suite");
  verify->add_option("suite", suite, "algebra, homfly, hz, analysis, zeros or all")->required();
  verify->add_flag("--quick", quick, "Smaller parameter ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  // Checked here rather than on the option: CLI11 silently ignores an
  // environment value that fails a validator.
  if (config.precision_bits < 64 || config.precision_bits > (1 << 16)) {
    std::cerr << "error: precision must be between 64 and 65536 bits\n";
    return kUsage;
  }
  config.format = format == "json" ? Format::Json : Format::Text;

  Outcome out;
  try {
    if (*homfly) out = cmd_homfly(ids, config);
    else if (*hz) out = cmd_hz(ids, routes, check_factorized, config);
    else if (*expand) out = cmd_expand(ids, routes, config);
    else if (*residues) out = cmd_residues(ids, routes, config);
    else if (*zeros) out = cmd_zeros(ids, routes, config);
    else if (*ingest) out = cmd_ingest(ingest_path, config);
    else if (*verify) out = cmd_verify(suite, quick, config);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  if (config.format == Format::Json) std::cout << out.json.dump(2) << "\n";
  else std::cout << out.text;
  return out.exit_code;
}
