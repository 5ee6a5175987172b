// Copyright 2026 The qblotto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

int main(int argc, char** argv) {
  using namespace qblotto::tools;

  CLI::App app{"qblotto: multiplayer quantum Colonel Blotto simulator"};
  app.require_subcommand(1);

  GlobalOptions global;
  double eps = 0.0;
  app.add_option("--eps", eps, "Tie tolerance for payoff signs")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", global.jobs, "Worker threads for sweeps")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--out", global.out, "Write CSV output to this file");
  app.add_flag("--degrees", global.degrees,
               "Read angles in degrees instead of radians");

  std::string path;

  auto* play = app.add_subcommand("play", "Evaluate a scenario");
  play->fallthrough();
  play->add_option("scenario", path, "Scenario JSON file")->required();

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one angle, emit CSV");
  sweep_cmd->fallthrough();
  sweep_cmd->add_option("scenario", path, "Scenario JSON file")->required();
  sweep_cmd->add_option("--player", sweep.player, "Player index (1-based)");
  sweep_cmd->add_option("--battlefield", sweep.battlefield,
                        "Battlefield index (1-based)");
  sweep_cmd->add_option("--param", sweep.param, "phi, lambda or gamma")
      ->capture_default_str();
  sweep_cmd->add_option("--from", sweep.from, "Range start (default 0)");
  sweep_cmd->add_option("--to", sweep.to, "Range end (default pi/2)");
  sweep_cmd->add_option("--steps", sweep.steps, "Grid points")
      ->capture_default_str();

  VerifyOptions verify;
  bool skip_matching_index = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the golden checks");
  verify_cmd->fallthrough();
  verify_cmd->add_flag("--debug-skip-matching-index", skip_matching_index,
                       "Debug: drop battlefield k == j from player j's sum");
  verify_cmd->add_option("--seed", verify.seed, "Seed for random scenarios")
      ->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Compare against classical");
  oracle->fallthrough();
  oracle->add_option("scenario", path, "Scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  if (app.count("--eps") > 0) global.eps = eps;

  if (*play) return RunPlay(path, global, std::cout, std::cerr);
  if (*sweep_cmd) {
    return RunSweepCommand(path, sweep, global, std::cout, std::cerr);
  }
  if (*verify_cmd) {
    if (skip_matching_index) {
      verify.summation = qblotto::PayoffSummation::kSkipMatchingIndex;
    }
    return RunVerify(verify, global, std::cout, std::cerr);
  }
  return RunOracle(path, global, std::cout, std::cerr);
}
