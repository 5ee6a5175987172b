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

#include "qblotto/scenario.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qblotto/error.h"
#include "qblotto/tensor.h"

namespace qblotto {

namespace {

std::string PlayerLabel(const Scenario& scenario, std::size_t j) {
  std::string label = "player " + std::to_string(j + 1);
  if (j < scenario.player_names.size() && !scenario.player_names[j].empty()) {
    label += " (" + scenario.player_names[j] + ")";
  }
  return label;
}

std::string DefaultName(std::size_t j) {
  return j == 0 ? "Blotto" : "enemy " + std::to_string(j);
}

}  // namespace

bool Scenario::HasQuantumPhases() const {
  for (const auto& row : phases) {
    for (double phi : row) {
      if (phi != 0.0) return true;
    }
  }
  return false;
}

std::vector<int> DefaultSignPattern(std::size_t num_battlefields) {
  std::vector<int> pattern(num_battlefields, 1);
  if (!pattern.empty()) pattern.back() = -1;
  return pattern;
}

std::vector<std::string> NormalizeScenario(Scenario& scenario) {
  std::vector<std::string> notices;
  const std::size_t num_players = scenario.num_players();

  // Throws on fewer than two players or an enemy stronger than Blotto.
  const PlayerRoster roster(scenario.totals);
  if (num_players == 2) {
    notices.push_back(
        "two-player game: the multiplayer formulation assumes three or more "
        "players, but every formula is well defined for two");
  }

  if (scenario.allocations.size() != num_players) {
    throw Error(ErrorCode::kValidation,
                "expected " + std::to_string(num_players) +
                    " allocation rows, got " +
                    std::to_string(scenario.allocations.size()));
  }
  const std::size_t n = scenario.num_battlefields();
  if (n == 0) {
    throw Error(ErrorCode::kValidation, "a game needs at least 1 battlefield");
  }
  // Throws kDimension past the 2^20 limit.
  (void)TensorDims::ForGame(num_players, n);

  if (!(scenario.eps >= 0.0) || !std::isfinite(scenario.eps)) {
    throw Error(ErrorCode::kValidation,
                "eps must be a finite non-negative number");
  }

  if (scenario.player_names.empty()) {
    for (std::size_t j = 0; j < num_players; ++j) {
      scenario.player_names.push_back(DefaultName(j));
    }
  } else if (scenario.player_names.size() != num_players) {
    throw Error(ErrorCode::kValidation,
                "expected " + std::to_string(num_players) +
                    " player names, got " +
                    std::to_string(scenario.player_names.size()));
  }

  for (std::size_t j = 0; j < num_players; ++j) {
    const auto& row = scenario.allocations[j];
    if (row.size() != n) {
      throw Error(ErrorCode::kValidation,
                  PlayerLabel(scenario, j) + " allocates over " +
                      std::to_string(row.size()) + " battlefields, expected " +
                      std::to_string(n));
    }
    if (auto violation =
            ValidateAllocation(row, scenario.totals[j], scenario.eps)) {
      throw Error(ErrorCode::kValidation,
                  PlayerLabel(scenario, j) + ": " + violation->Describe());
    }
  }

  if (scenario.phases.empty()) {
    scenario.phases.assign(num_players, std::vector<double>(n, 0.0));
  } else if (scenario.phases.size() != num_players) {
    throw Error(ErrorCode::kValidation,
                "expected " + std::to_string(num_players) +
                    " phase rows, got " +
                    std::to_string(scenario.phases.size()));
  }
  for (std::size_t j = 0; j < num_players; ++j) {
    auto& row = scenario.phases[j];
    if (row.size() != n) {
      throw Error(ErrorCode::kValidation,
                  PlayerLabel(scenario, j) + " has " +
                      std::to_string(row.size()) + " phases, expected " +
                      std::to_string(n));
    }
    for (std::size_t k = 0; k < n; ++k) {
      double& phi = row[k];
      if (!std::isfinite(phi)) {
        throw Error(ErrorCode::kValidation, PlayerLabel(scenario, j) +
                                                ": phase on battlefield " +
                                                std::to_string(k + 1) +
                                                " is not finite");
      }
      if (phi < 0.0 || phi >= 2 * kPi) {
        double wrapped = std::fmod(phi, 2 * kPi);
        if (wrapped < 0.0) wrapped += 2 * kPi;
        if (wrapped >= 2 * kPi) wrapped = 0.0;
        std::ostringstream msg;
        msg.precision(12);
        msg << PlayerLabel(scenario, j) << ": phase " << phi
            << " on battlefield " << k + 1 << " reduced to " << wrapped
            << " (mod 2pi)";
        notices.push_back(msg.str());
        phi = wrapped;
      }
    }
  }

  if (!(scenario.gamma >= 0.0 && scenario.gamma <= kPi / 2)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "gamma " << scenario.gamma << " is outside [0, pi/2]";
    throw Error(ErrorCode::kValidation, msg.str());
  }

  if (scenario.sign_pattern.empty()) {
    scenario.sign_pattern = DefaultSignPattern(n);
  }
  if (scenario.sign_pattern.size() != n) {
    throw Error(ErrorCode::kValidation,
                "sign_pattern has " +
                    std::to_string(scenario.sign_pattern.size()) +
                    " entries, expected " + std::to_string(n));
  }
  for (int s : scenario.sign_pattern) {
    if (s != 1 && s != -1) {
      throw Error(ErrorCode::kValidation,
                  "sign_pattern entries must be +1 or -1, got " +
                      std::to_string(s));
    }
  }
  const bool uniform =
      std::all_of(scenario.sign_pattern.begin(), scenario.sign_pattern.end(),
                  [&](int s) { return s == scenario.sign_pattern.front(); });
  if (uniform && n >= 2) {
    if (!scenario.allow_uniform_sign_pattern) {
      throw Error(ErrorCode::kValidation,
                  "sign_pattern must contain at least one entry whose sign "
                  "differs from the others (set allow_uniform_sign_pattern "
                  "to override)");
    }
    notices.push_back("uniform sign_pattern accepted by explicit override");
  } else if (n == 1) {
    notices.push_back(
        "single battlefield: the sign_pattern cannot contain differing "
        "signs");
  }

  return notices;
}

Scenario ReferenceScenario(double gamma) {
  Scenario scenario;
  scenario.player_names = {"Blotto", "enemy 1", "enemy 2"};
  scenario.totals = {6, 4, 3};
  scenario.allocations = {{3, 3}, {3, 1}, {0, 3}};
  scenario.phases = {{0, 0}, {0, 0}, {0, 0}};
  scenario.gamma = gamma;
  scenario.sign_pattern = DefaultSignPattern(2);
  return scenario;
}

}  // namespace qblotto
