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

#include "qblotto/sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "qblotto/error.h"

namespace qblotto {

namespace {

void ValidateSpec(const SweepSpec& spec, const GameSetup& setup) {
  if (spec.steps < 2) {
    throw Error(ErrorCode::kValidation, "a sweep needs at least 2 steps");
  }
  if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi) || spec.lo > spec.hi) {
    throw Error(ErrorCode::kValidation,
                "sweep range must be finite with lo <= hi");
  }
  if (!(spec.boundary_width > 0.0)) {
    throw Error(ErrorCode::kValidation, "boundary width must be positive");
  }
  if (spec.parameter != SweepParameter::kGamma) {
    if (spec.player < 1 || spec.player > setup.num_players()) {
      throw Error(ErrorCode::kValidation,
                  "sweep player " + std::to_string(spec.player) +
                      " out of range 1.." +
                      std::to_string(setup.num_players()));
    }
    if (spec.battlefield < 1 || spec.battlefield > setup.num_battlefields()) {
      throw Error(ErrorCode::kValidation,
                  "sweep battlefield " + std::to_string(spec.battlefield) +
                      " out of range 1.." +
                      std::to_string(setup.num_battlefields()));
    }
  }
  if (spec.parameter != SweepParameter::kPhi &&
      (spec.lo < 0.0 || spec.hi > kPi / 2)) {
    throw Error(ErrorCode::kValidation,
                std::string(SweepParameterName(spec.parameter)) +
                    " sweeps must stay within [0, pi/2]");
  }
}

std::string AtValue(const SweepSpec& spec, double value) {
  std::ostringstream out;
  out.precision(12);
  out << "at " << SweepParameterName(spec.parameter) << " = " << value << ": ";
  return out.str();
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. The first
// exception by index is rethrown.
template <typename Fn>
void ParallelFor(std::size_t count, unsigned jobs, Fn fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(jobs, 1u), count));
  std::vector<std::exception_ptr> errors(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

const char* SweepParameterName(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kPhi:
      return "phi";
    case SweepParameter::kLambda:
      return "lambda";
    case SweepParameter::kGamma:
      return "gamma";
  }
  return "unknown";
}

std::optional<SweepParameter> ParseSweepParameter(std::string_view name) {
  if (name == "phi") return SweepParameter::kPhi;
  if (name == "lambda") return SweepParameter::kLambda;
  if (name == "gamma") return SweepParameter::kGamma;
  return std::nullopt;
}

std::vector<double> SweepGrid(double lo, double hi, std::size_t steps) {
  if (steps < 2) {
    throw Error(ErrorCode::kValidation, "a sweep needs at least 2 steps");
  }
  std::vector<double> grid(steps);
  const double denominator = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    grid[i] = lo + (hi - lo) * (static_cast<double>(i) / denominator);
  }
  grid.back() = hi;
  return grid;
}

MeasurementTable EvaluateAt(const GameSetup& base, const SweepSpec& spec,
                            double value) {
  GameSetup setup = base;
  switch (spec.parameter) {
    case SweepParameter::kPhi:
      setup.strategies[spec.player - 1].phis[spec.battlefield - 1] = value;
      break;
    case SweepParameter::kLambda:
      setup.strategies[spec.player - 1].lambdas[spec.battlefield - 1] = value;
      break;
    case SweepParameter::kGamma:
      setup.entangler.gamma = value;
      break;
  }
  try {
    return Evaluate(setup);
  } catch (const Error& e) {
    throw Error(e.code(), AtValue(spec, value) + e.what());
  }
}

SweepResult RunSweep(const SweepSpec& spec) {
  const GameSetup base = PrepareGame(spec.base);
  ValidateSpec(spec, base);

  const std::vector<double> grid = SweepGrid(spec.lo, spec.hi, spec.steps);
  SweepResult result;
  result.points.resize(grid.size());
  ParallelFor(grid.size(), spec.jobs, [&](std::size_t i) {
    MeasurementTable table = EvaluateAt(base, spec, grid[i]);
    result.points[i] = {grid[i], std::move(table.payoffs), std::move(table.m)};
  });

  if (!spec.locate_transitions) return result;
  for (std::size_t i = 0; i + 1 < result.points.size(); ++i) {
    const SweepPoint& left = result.points[i];
    const SweepPoint& right = result.points[i + 1];
    if (left.payoffs == right.payoffs) continue;

    PayoffTransition transition{left.value, right.value, left.payoffs,
                                right.payoffs};
    while (transition.upper - transition.lower > spec.boundary_width) {
      const double mid = transition.midpoint();
      if (mid <= transition.lower || mid >= transition.upper) break;
      std::vector<int> payoffs = EvaluateAt(base, spec, mid).payoffs;
      if (payoffs == transition.payoffs_below) {
        transition.lower = mid;
      } else {
        transition.upper = mid;
        transition.payoffs_above = std::move(payoffs);
      }
    }
    result.transitions.push_back(std::move(transition));
  }
  return result;
}

PhaseInsensitivityReport CheckPhaseInsensitivity(
    const Scenario& base, std::size_t player, std::size_t battlefield,
    std::span<const double> samples) {
  if (samples.empty()) {
    throw Error(ErrorCode::kValidation, "at least one phase sample required");
  }
  for (double s : samples) {
    if (!(s > 0.0 && s < kPi / 2)) {
      throw Error(ErrorCode::kValidation,
                  "phase samples must lie strictly inside (0, pi/2)");
    }
  }
  SweepSpec spec;
  spec.base = base;
  spec.player = player;
  spec.battlefield = battlefield;
  spec.parameter = SweepParameter::kPhi;
  const GameSetup setup = PrepareGame(base);
  ValidateSpec(spec, setup);

  PhaseInsensitivityReport report;
  report.samples.assign(samples.begin(), samples.end());
  for (double s : samples) {
    report.sample_payoffs.push_back(EvaluateAt(setup, spec, s).payoffs);
  }
  report.samples_agree = std::all_of(
      report.sample_payoffs.begin(), report.sample_payoffs.end(),
      [&](const auto& p) { return p == report.sample_payoffs.front(); });
  report.zero_payoffs = EvaluateAt(setup, spec, 0.0).payoffs;
  report.jump_at_zero = report.zero_payoffs != report.sample_payoffs.front();
  return report;
}

BestResponse BestResponseGrid(const Scenario& base, std::size_t player,
                              std::size_t steps) {
  const GameSetup setup = PrepareGame(base);
  if (steps < 2) {
    throw Error(ErrorCode::kValidation, "phase grid needs at least 2 steps");
  }
  if (player < 1 || player > setup.num_players()) {
    throw Error(ErrorCode::kValidation,
                "player " + std::to_string(player) + " out of range 1.." +
                    std::to_string(setup.num_players()));
  }
  const std::size_t n = setup.num_battlefields();
  const double bits = static_cast<double>(n) * std::log2(steps);
  if (bits > static_cast<double>(kMaxBestResponseGridBits) + 1e-9) {
    std::ostringstream msg;
    msg << "best-response grid of " << steps << "^" << n
        << " points exceeds the limit of 2^" << kMaxBestResponseGridBits;
    throw Error(ErrorCode::kValidation, msg.str());
  }

  const std::vector<double> grid = SweepGrid(0.0, kPi / 2, steps);
  std::vector<std::size_t> index(n, 0);
  BestResponse best;
  bool have_best = false;
  GameSetup candidate = setup;
  while (true) {
    for (std::size_t k = 0; k < n; ++k) {
      candidate.strategies[player - 1].phis[k] = grid[index[k]];
    }
    const int payoff = Evaluate(candidate).payoffs[player - 1];
    ++best.evaluated;
    if (!have_best || payoff > best.payoff) {
      have_best = true;
      best.payoff = payoff;
      best.phases = candidate.strategies[player - 1].phis;
    }
    // Odometer with battlefield 1 most significant: lexicographic order.
    std::size_t k = n;
    while (k > 0 && ++index[k - 1] == steps) index[--k] = 0;
    if (k == 0) break;
  }
  return best;
}

}  // namespace qblotto
