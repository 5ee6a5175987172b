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

// Parameter sweeps over a single strategy or entanglement parameter.
//
// Payoffs are integer step functions of the swept parameter, so a sweep
// records exact payoff vectors per grid point and then narrows every jump
// between neighbouring points down to a bracket of width boundary_width by
// bisection.

#ifndef QBLOTTO_SWEEP_H_
#define QBLOTTO_SWEEP_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qblotto/engine.h"
#include "qblotto/scenario.h"

namespace qblotto {

inline constexpr std::size_t kDefaultSweepSteps = 101;
inline constexpr double kDefaultBoundaryWidth = 1e-6;
// Best-response grids are capped at 2^24 points (4 battlefields at 64 steps).
inline constexpr std::size_t kMaxBestResponseGridBits = 24;

enum class SweepParameter { kPhi, kLambda, kGamma };

const char* SweepParameterName(SweepParameter parameter);
std::optional<SweepParameter> ParseSweepParameter(std::string_view name);

struct SweepSpec {
  Scenario base;
  // 1-based; ignored when sweeping gamma.
  std::size_t player = 1;
  std::size_t battlefield = 1;
  SweepParameter parameter = SweepParameter::kPhi;
  double lo = 0.0;
  double hi = kPi / 2;
  std::size_t steps = kDefaultSweepSteps;
  // Worker threads for grid evaluation; results never depend on it.
  unsigned jobs = 1;
  bool locate_transitions = true;
  double boundary_width = kDefaultBoundaryWidth;
};

struct SweepPoint {
  double value = 0.0;
  std::vector<int> payoffs;
  std::vector<std::vector<double>> m;
};

// Payoffs change somewhere inside (lower, upper].
struct PayoffTransition {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<int> payoffs_below;
  std::vector<int> payoffs_above;

  double midpoint() const { return 0.5 * (lower + upper); }
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::vector<PayoffTransition> transitions;
};

// steps values from lo to hi inclusive; value i is
// lo + (hi - lo) * (i / (steps - 1)).
std::vector<double> SweepGrid(double lo, double hi, std::size_t steps);

// Evaluates the base scenario at every grid value with only the swept
// parameter replaced. Throws kValidation for an invalid spec; engine errors
// keep their code and gain the offending grid value in the message.
SweepResult RunSweep(const SweepSpec& spec);

// Same engine evaluation RunSweep performs for one parameter value.
MeasurementTable EvaluateAt(const GameSetup& base, const SweepSpec& spec,
                            double value);

struct PhaseInsensitivityReport {
  std::vector<double> samples;
  std::vector<std::vector<int>> sample_payoffs;
  // All sample payoff vectors are identical.
  bool samples_agree = false;
  std::vector<int> zero_payoffs;
  // The phase-zero vector differs from the first sample's vector.
  bool jump_at_zero = false;
};

// Evaluates the payoffs with one phase set to each sample (all strictly
// inside (0, pi/2)) and to zero.
PhaseInsensitivityReport CheckPhaseInsensitivity(
    const Scenario& base, std::size_t player, std::size_t battlefield,
    std::span<const double> samples);

struct BestResponse {
  int payoff = 0;
  // Lexicographically smallest maximizing phase vector.
  std::vector<double> phases;
  std::size_t evaluated = 0;
};

// Exhaustive search over the player's phases on the grid
// SweepGrid(0, pi/2, steps) per battlefield, allocations fixed.
BestResponse BestResponseGrid(const Scenario& base, std::size_t player,
                              std::size_t steps);

}  // namespace qblotto

#endif  // QBLOTTO_SWEEP_H_
