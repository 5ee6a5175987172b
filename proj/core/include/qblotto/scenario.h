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

#ifndef QBLOTTO_SCENARIO_H_
#define QBLOTTO_SCENARIO_H_

#include <cstddef>
#include <string>
#include <vector>

#include "qblotto/classical.h"

namespace qblotto {

inline constexpr double kPi = 3.14159265358979323846;

// Full description of one game. Player 1 is Blotto. Angles are radians.
struct Scenario {
  std::vector<std::string> player_names;
  std::vector<double> totals;
  // allocations[j][k]: soldiers of player j+1 on battlefield k+1.
  std::vector<Allocation> allocations;
  // Same shape as allocations; empty means all zero.
  std::vector<std::vector<double>> phases;
  double gamma = 0.0;
  // Diagonal signs of the battlefield block of the entanglement generator;
  // empty means DefaultSignPattern().
  std::vector<int> sign_pattern;
  double eps = kDefaultTieEps;
  // Permits a sign pattern whose entries are all equal.
  bool allow_uniform_sign_pattern = false;

  std::size_t num_players() const { return totals.size(); }
  std::size_t num_battlefields() const {
    return allocations.empty() ? 0 : allocations.front().size();
  }
  bool HasQuantumPhases() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// (+1, ..., +1, -1).
std::vector<int> DefaultSignPattern(std::size_t num_battlefields);

// Validates the scenario and fills defaults (names, zero phases, sign
// pattern). Phases outside [0, 2*pi) are wrapped. Returns human-readable
// notices for anything accepted but worth flagging; throws kValidation
// (or kDimension for oversized games) on anything else.
std::vector<std::string> NormalizeScenario(Scenario& scenario);

// Three players over two battlefields: Blotto (3, 3) of 6, enemy 1 (3, 1) of
// 4, enemy 2 (0, 3) of 3, all phases zero.
Scenario ReferenceScenario(double gamma = kPi / 2);

}  // namespace qblotto

#endif  // QBLOTTO_SCENARIO_H_
