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

// Subcommands of the qblotto tool. Each returns the process exit code and
// writes nothing to `out` unless it succeeds.

#ifndef QBLOTTO_TOOLS_COMMANDS_H_
#define QBLOTTO_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qblotto/engine.h"
#include "qblotto/error.h"
#include "qblotto/scenario.h"

namespace qblotto::tools {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInput = 2,
  kExitNumerical = 3,
};

int ExitCodeFor(ErrorCode code);

struct GlobalOptions {
  std::optional<double> eps;  // overrides the scenario's tie tolerance
  unsigned jobs = 1;
  std::string out;            // empty: no file output
  bool degrees = false;
};

struct SweepOptions {
  std::size_t player = 0;
  std::size_t battlefield = 0;
  std::string param = "phi";
  std::optional<double> from;  // default 0
  std::optional<double> to;    // default pi/2
  std::size_t steps = 101;
};

struct VerifyOptions {
  PayoffSummation summation = PayoffSummation::kAllBattlefields;
  std::size_t random_scenarios = 100;
  std::uint64_t seed = 20260401;
};

int RunPlay(const std::string& path, const GlobalOptions& global,
            std::ostream& out, std::ostream& err);
int RunSweepCommand(const std::string& path, const SweepOptions& sweep,
                    const GlobalOptions& global, std::ostream& out,
                    std::ostream& err);
// --eps sets the quantum tie tolerance used by the golden checks.
int RunVerify(const VerifyOptions& verify, const GlobalOptions& global,
              std::ostream& out, std::ostream& err);
int RunOracle(const std::string& path, const GlobalOptions& global,
              std::ostream& out, std::ostream& err);

// Random integer-soldier game with all phases zero. Blotto's total is drawn
// from [1, 8] and every enemy's total from [0, Blotto's].
Scenario RandomClassicalScenario(std::mt19937_64& rng,
                                 std::size_t num_players,
                                 std::size_t num_battlefields);

// As above with phases uniform in [0, 2*pi).
Scenario RandomQuantumScenario(std::mt19937_64& rng, std::size_t num_players,
                               std::size_t num_battlefields);

}  // namespace qblotto::tools

#endif  // QBLOTTO_TOOLS_COMMANDS_H_
