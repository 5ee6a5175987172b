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

#include "qblotto/engine.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <utility>

#include "qblotto/error.h"

namespace qblotto {

namespace {

constexpr double kOperatorTolerance = 1e-10;
constexpr Complex kI{0.0, 1.0};

// Seed for the classical strategies sampled when checking that J commutes
// with them. Fixed so that identical inputs give identical behavior.
constexpr std::uint64_t kCommutationSeed = 0x9e3779b97f4a7c15ULL;

std::size_t NumPlayers(const TensorDims& dims) {
  return dims.num_factors() - 1;
}

std::size_t NumBattlefields(const TensorDims& dims) {
  return dims.factors().back();
}

void RequireDense(const TensorDims& dims, const char* what) {
  if (dims.total() > kMaxDenseDimension) {
    throw Error(ErrorCode::kDimension,
                std::string(what) + ": dense operator of dim " +
                    std::to_string(dims.total()) + " exceeds the limit " +
                    std::to_string(kMaxDenseDimension));
  }
}

void RequireStrategyShape(const QuantumStrategy& strategy,
                          std::size_t num_battlefields, std::size_t player) {
  if (strategy.lambdas.size() != num_battlefields ||
      strategy.phis.size() != num_battlefields) {
    throw Error(ErrorCode::kValidation,
                "player " + std::to_string(player) + " strategy has " +
                    std::to_string(strategy.lambdas.size()) + " angles and " +
                    std::to_string(strategy.phis.size()) +
                    " phases, expected " + std::to_string(num_battlefields));
  }
}

void RequirePlayer(std::size_t player, std::size_t num_players) {
  if (player < 1 || player > num_players) {
    throw Error(ErrorCode::kValidation,
                "player index " + std::to_string(player) +
                    " out of range 1.." + std::to_string(num_players));
  }
}

void ValidateSetup(const GameSetup& setup) {
  if (setup.num_players() < 1) {
    throw Error(ErrorCode::kValidation, "game has no players");
  }
  const std::size_t n = setup.num_battlefields();
  if (n == 0) {
    throw Error(ErrorCode::kValidation, "a game needs at least 1 battlefield");
  }
  for (std::size_t j = 0; j < setup.num_players(); ++j) {
    RequireStrategyShape(setup.strategies[j], n, j + 1);
  }
  if (setup.entangler.sign_pattern.size() != n) {
    throw Error(ErrorCode::kValidation,
                "sign_pattern has " +
                    std::to_string(setup.entangler.sign_pattern.size()) +
                    " entries, expected " + std::to_string(n));
  }
}

std::vector<std::size_t> ResolveOrder(std::span<const std::size_t> order,
                                      std::size_t num_players) {
  std::vector<std::size_t> resolved;
  if (order.empty()) {
    for (std::size_t j = 1; j <= num_players; ++j) resolved.push_back(j);
    return resolved;
  }
  resolved.assign(order.begin(), order.end());
  std::vector<std::size_t> sorted = resolved;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    if (sorted[j] != j + 1 || sorted.size() != num_players) {
      throw Error(ErrorCode::kValidation,
                  "player order must be a permutation of 1.." +
                      std::to_string(num_players));
    }
  }
  return resolved;
}

// Deterministic unit vector with no special structure.
StateVector ProbeState(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(dim);
  double norm = 0.0;
  for (auto& a : amps) {
    a = Complex(gauss(rng), gauss(rng));
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector(std::move(amps));
}

QuantumStrategy RandomClassicalStrategy(std::size_t num_battlefields,
                                        std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kPi / 2);
  QuantumStrategy strategy;
  for (std::size_t k = 0; k < num_battlefields; ++k) {
    strategy.lambdas.push_back(angle(rng));
    strategy.phis.push_back(0.0);
  }
  return strategy;
}

std::string ParityDiagnostic(std::size_t num_players, double gamma,
                             double defect) {
  std::ostringstream msg;
  msg.precision(6);
  msg << "entangler J = cos(gamma/2) I + i sin(gamma/2) A is not unitary for "
      << num_players << " players at gamma = " << gamma
      << " (defect " << defect << "): with an even number of players the "
      << "generator A is anti-Hermitian and squares to -I, so the closed form "
      << "only yields a unitary for an odd number of players or gamma = 0";
  return msg.str();
}

}  // namespace

double LambdaOf(double soldiers, double blotto_total) {
  if (!(blotto_total > 0.0)) {
    throw Error(ErrorCode::kValidation,
                "Blotto's total must be positive to derive angles");
  }
  if (!(soldiers >= 0.0) || soldiers > blotto_total) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "cannot derive an angle for " << soldiers
        << " soldiers: must lie in [0, " << blotto_total << "]";
    throw Error(ErrorCode::kValidation, msg.str());
  }
  return (kPi / 2) * (soldiers / blotto_total);
}

ComplexMatrix BuildQ(double lambda, double phi) {
  const double c = std::cos(lambda);
  const double s = std::sin(lambda);
  if (phi == 0.0) return ComplexMatrix{{c, -s}, {s, c}};
  return ComplexMatrix{{std::polar(1.0, phi) * c, -s},
                       {s, std::polar(1.0, -phi) * c}};
}

ComplexMatrix BuildU(std::size_t player, const QuantumStrategy& strategy,
                     std::size_t num_players, std::size_t num_battlefields) {
  const TensorDims dims = TensorDims::ForGame(num_players, num_battlefields);
  RequireDense(dims, "BuildU");
  RequirePlayer(player, num_players);
  RequireStrategyShape(strategy, num_battlefields, player);

  ComplexMatrix u(dims.total(), dims.total());
  std::vector<ComplexMatrix> factors(num_players + 1,
                                     ComplexMatrix::Identity(2));
  for (std::size_t k = 0; k < num_battlefields; ++k) {
    factors[player - 1] = BuildQ(strategy.lambdas[k], strategy.phis[k]);
    factors.back() = ComplexMatrix::Projector(num_battlefields, k);
    u += Kron(factors);
  }
  return u;
}

EntanglementGenerator BuildA(std::size_t num_players,
                             std::size_t num_battlefields,
                             std::span<const int> sign_pattern) {
  const TensorDims dims = TensorDims::ForGame(num_players, num_battlefields);
  RequireDense(dims, "BuildA");
  if (sign_pattern.size() != num_battlefields) {
    throw Error(ErrorCode::kValidation,
                "sign_pattern has " + std::to_string(sign_pattern.size()) +
                    " entries, expected " + std::to_string(num_battlefields));
  }

  const ComplexMatrix flip{{0.0, 1.0}, {-1.0, 0.0}};
  std::vector<ComplexMatrix> factors(num_players, flip);
  std::vector<Complex> diagonal;
  for (int s : sign_pattern) {
    if (s != 1 && s != -1) {
      throw Error(ErrorCode::kValidation,
                  "sign_pattern entries must be +1 or -1");
    }
    diagonal.push_back(kI * static_cast<double>(s));
  }
  factors.push_back(ComplexMatrix::Diagonal(diagonal));

  EntanglementGenerator generator;
  generator.matrix = Kron(factors);
  if (num_players % 2 == 1) generator.matrix *= -1.0;

  const ComplexMatrix square = generator.matrix * generator.matrix;
  const ComplexMatrix identity = ComplexMatrix::Identity(dims.total());
  if (ApproxEqual(square, identity, kOperatorTolerance)) {
    generator.square_sign = 1;
  } else if (ApproxEqual(square, -1.0 * identity, kOperatorTolerance)) {
    generator.square_sign = -1;
  } else {
    throw Error(ErrorCode::kInternal,
                "entanglement generator does not square to +/- identity");
  }
  return generator;
}

ComplexMatrix BuildJ(double gamma, const EntanglementGenerator& generator,
                     const TensorDims& dims) {
  const ComplexMatrix& a = generator.matrix;
  if (!a.is_square() || a.rows() != dims.total()) {
    throw Error(ErrorCode::kDimension,
                "BuildJ: generator is " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + ", expected dim " +
                    std::to_string(dims.total()) + " for " + dims.ToString());
  }
  RequireDense(dims, "BuildJ");

  ComplexMatrix j = ComplexMatrix::Identity(a.rows());
  if (gamma != 0.0) {
    j = std::cos(gamma / 2) * j + (kI * std::sin(gamma / 2)) * a;
  }

  const double defect = UnitarityDefect(j);
  if (defect > kOperatorTolerance) {
    throw Error(ErrorCode::kEntanglerParity,
                ParityDiagnostic(NumPlayers(dims), gamma, defect));
  }

  std::mt19937_64 rng(kCommutationSeed);
  const std::size_t num_players = NumPlayers(dims);
  const std::size_t n = NumBattlefields(dims);
  for (std::size_t player = 1; player <= num_players; ++player) {
    const ComplexMatrix u =
        BuildU(player, RandomClassicalStrategy(n, rng), num_players, n);
    const double commutator = MaxAbs(Commutator(j, u));
    if (commutator > kOperatorTolerance) {
      std::ostringstream msg;
      msg << "entangler does not commute with a classical strategy of player "
          << player << " (commutator norm " << commutator << ")";
      throw Error(ErrorCode::kInternal, msg.str());
    }
  }
  return j;
}

GameSetup PrepareGame(const Scenario& input,
                      std::vector<std::string>* notices) {
  Scenario scenario = input;
  std::vector<std::string> messages = NormalizeScenario(scenario);
  if (notices) *notices = std::move(messages);

  GameSetup setup;
  const double blotto_total = scenario.totals.front();
  for (std::size_t j = 0; j < scenario.num_players(); ++j) {
    QuantumStrategy strategy;
    for (std::size_t k = 0; k < scenario.num_battlefields(); ++k) {
      strategy.lambdas.push_back(
          LambdaOf(scenario.allocations[j][k], blotto_total));
      strategy.phis.push_back(scenario.phases[j][k]);
    }
    setup.strategies.push_back(std::move(strategy));
  }
  setup.entangler.gamma = scenario.gamma;
  setup.entangler.sign_pattern = scenario.sign_pattern;
  setup.eps = scenario.eps;
  return setup;
}

std::vector<QuantumStrategy> ClassicalPart(
    std::span<const QuantumStrategy> strategies) {
  std::vector<QuantumStrategy> out(strategies.begin(), strategies.end());
  for (auto& s : out) std::fill(s.phis.begin(), s.phis.end(), 0.0);
  return out;
}

StateVector InitialState(std::size_t num_players,
                         std::size_t num_battlefields) {
  const TensorDims dims = TensorDims::ForGame(num_players, num_battlefields);
  std::vector<Complex> amps(dims.total());
  const double weight = 1.0 / std::sqrt(static_cast<double>(num_battlefields));
  for (std::size_t t = 0; t < num_battlefields; ++t) amps[t] = weight;
  return StateVector(std::move(amps));
}

void ApplyStrategy(StateVector& psi, std::size_t player,
                   const QuantumStrategy& strategy, const TensorDims& dims) {
  const std::size_t num_players = NumPlayers(dims);
  const std::size_t n = NumBattlefields(dims);
  RequirePlayer(player, num_players);
  RequireStrategyShape(strategy, n, player);
  if (psi.dim() != dims.total()) {
    throw Error(ErrorCode::kDimension,
                "state of dim " + std::to_string(psi.dim()) +
                    " does not match " + dims.ToString());
  }

  std::vector<ComplexMatrix> blocks;
  blocks.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    blocks.push_back(BuildQ(strategy.lambdas[k], strategy.phis[k]));
  }

  const std::size_t stride = (std::size_t{1} << (num_players - player)) * n;
  auto amps = psi.mutable_amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i / stride) % 2 != 0) continue;
    const ComplexMatrix& q = blocks[i % n];
    const Complex a0 = amps[i];
    const Complex a1 = amps[i + stride];
    amps[i] = q(0, 0) * a0 + q(0, 1) * a1;
    amps[i + stride] = q(1, 0) * a0 + q(1, 1) * a1;
  }
}

void ApplyGenerator(StateVector& psi, std::span<const int> sign_pattern,
                    const TensorDims& dims, bool adjoint) {
  const std::size_t num_players = NumPlayers(dims);
  const std::size_t n = NumBattlefields(dims);
  if (sign_pattern.size() != n) {
    throw Error(ErrorCode::kValidation,
                "sign_pattern has " + std::to_string(sign_pattern.size()) +
                    " entries, expected " + std::to_string(n));
  }
  // [[0,1],[-1,0]] maps |0> -> -|1> and |1> -> |0>; its transpose maps
  // |0> -> |1> and |1> -> -|0>. Hence on |b>|T_t>:
  //   A        -> (-1)^popcount(b)       *  i s_t |~b>|T_t>
  //   A^dagger -> (-1)^(N + popcount(b)) * -i s_t |~b>|T_t>
  const std::size_t all_ones = (std::size_t{1} << num_players) - 1;
  const auto in = psi.amplitudes();
  std::vector<Complex> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const std::size_t bits = i / n;
    const std::size_t t = i % n;
    int sign = (std::popcount(bits) % 2 == 0) ? 1 : -1;
    if (adjoint && num_players % 2 == 1) sign = -sign;
    Complex coefficient = kI * static_cast<double>(sign * sign_pattern[t]);
    if (adjoint) coefficient = -coefficient;
    out[(bits ^ all_ones) * n + t] = coefficient * in[i];
  }
  psi = StateVector(std::move(out));
}

void ApplyEntangler(StateVector& psi, const EntanglerConfig& config,
                    const TensorDims& dims, bool adjoint) {
  if (config.gamma == 0.0) return;
  StateVector generated = psi;
  ApplyGenerator(generated, config.sign_pattern, dims, adjoint);
  // J = c I + i s A, J^dagger = c I - i s A^dagger.
  const double c = std::cos(config.gamma / 2);
  const Complex is = (adjoint ? -kI : kI) * std::sin(config.gamma / 2);
  auto amps = psi.mutable_amplitudes();
  const auto gen = generated.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] = c * amps[i] + is * gen[i];
  }
}

void VerifyEntangler(const EntanglerConfig& config, const TensorDims& dims) {
  if (config.gamma == 0.0) return;
  const StateVector probe = ProbeState(dims.total(), kCommutationSeed);

  // J is unitary iff A is Hermitian (A itself is always unitary).
  StateVector forward = probe;
  StateVector backward = probe;
  ApplyGenerator(forward, config.sign_pattern, dims, /*adjoint=*/false);
  ApplyGenerator(backward, config.sign_pattern, dims, /*adjoint=*/true);
  const double hermiticity = MaxAbsDiff(forward, backward);
  StateVector entangled = probe;
  ApplyEntangler(entangled, config, dims, /*adjoint=*/false);
  const double norm_defect = std::abs(entangled.SquaredNorm() - 1.0);
  if (hermiticity > kOperatorTolerance || norm_defect > kOperatorTolerance) {
    throw Error(ErrorCode::kEntanglerParity,
                ParityDiagnostic(NumPlayers(dims), config.gamma,
                                 std::max(hermiticity, norm_defect)));
  }

  std::mt19937_64 rng(kCommutationSeed);
  for (std::size_t player = 1; player <= NumPlayers(dims); ++player) {
    const QuantumStrategy classical =
        RandomClassicalStrategy(NumBattlefields(dims), rng);
    StateVector ju = probe;
    ApplyStrategy(ju, player, classical, dims);
    ApplyEntangler(ju, config, dims, false);
    StateVector uj = probe;
    ApplyEntangler(uj, config, dims, false);
    ApplyStrategy(uj, player, classical, dims);
    const double commutator = MaxAbsDiff(ju, uj);
    if (commutator > kOperatorTolerance) {
      std::ostringstream msg;
      msg << "entangler does not commute with a classical strategy of player "
          << player << " (residual " << commutator << ")";
      throw Error(ErrorCode::kInternal, msg.str());
    }
  }
}

StateVector Evolve(const GameSetup& setup, std::span<const std::size_t> order) {
  ValidateSetup(setup);
  const TensorDims dims = setup.dims();
  const auto players = ResolveOrder(order, setup.num_players());
  VerifyEntangler(setup.entangler, dims);

  StateVector psi = InitialState(setup.num_players(), setup.num_battlefields());
  ApplyEntangler(psi, setup.entangler, dims, /*adjoint=*/false);
  for (std::size_t player : players) {
    ApplyStrategy(psi, player, setup.strategies[player - 1], dims);
  }
  ApplyEntangler(psi, setup.entangler, dims, /*adjoint=*/true);

  const double norm_defect = std::abs(psi.SquaredNorm() - 1.0);
  if (norm_defect > kOperatorTolerance) {
    std::ostringstream msg;
    msg << "final state norm deviates from 1 by " << norm_defect;
    throw Error(ErrorCode::kNumericalIntegrity, msg.str());
  }
  return psi;
}

StateVector Evolve(const Scenario& scenario) {
  return Evolve(PrepareGame(scenario));
}

MeasurementTable Measure(const StateVector& psi, const TensorDims& dims) {
  if (psi.dim() != dims.total()) {
    throw Error(ErrorCode::kDimension,
                "state of dim " + std::to_string(psi.dim()) +
                    " does not match " + dims.ToString());
  }
  const std::size_t num_players = NumPlayers(dims);
  const std::size_t n = NumBattlefields(dims);

  std::vector<ComplexMatrix> observables;
  for (std::size_t k = 0; k < n; ++k) {
    observables.push_back(Kron(ComplexMatrix::Projector(2, 1),
                               ComplexMatrix::Projector(n, k)));
  }

  MeasurementTable table;
  table.m.assign(num_players, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < num_players; ++j) {
    const std::size_t keep[] = {j + 1, num_players + 1};
    const ComplexMatrix reduced = ReducedDensityMatrix(psi, dims, keep);
    for (std::size_t k = 0; k < n; ++k) {
      const double value =
          Expectation(observables[k], reduced, kOperatorTolerance);
      if (value < -kOperatorTolerance || value > 1.0 + kOperatorTolerance) {
        std::ostringstream msg;
        msg << "measurement for player " << j + 1 << " on battlefield "
            << k + 1 << " is " << value << ", outside [0, 1]";
        throw Error(ErrorCode::kNumericalIntegrity, msg.str());
      }
      table.m[j][k] = value;
    }
  }

  table.m_max.assign(num_players, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < num_players; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      double best = -1.0;
      for (std::size_t i = 0; i < num_players; ++i) {
        if (i != j) best = std::max(best, table.m[i][k]);
      }
      // A lone player has no rival.
      table.m_max[j][k] = num_players > 1 ? best : 0.0;
    }
  }
  return table;
}

std::vector<int> QuantumPayoffs(const MeasurementTable& table, double eps,
                                PayoffSummation summation) {
  std::vector<int> payoffs(table.num_players(), 0);
  for (std::size_t j = 0; j < table.num_players(); ++j) {
    for (std::size_t k = 0; k < table.num_battlefields(); ++k) {
      if (summation == PayoffSummation::kSkipMatchingIndex && k == j) continue;
      payoffs[j] += SignWithTolerance(table.m[j][k] - table.m_max[j][k], eps);
    }
  }
  return payoffs;
}

MeasurementTable Evaluate(const GameSetup& setup,
                          std::span<const std::size_t> order) {
  const StateVector psi = Evolve(setup, order);
  MeasurementTable table = Measure(psi, setup.dims());
  table.payoffs = QuantumPayoffs(table, setup.eps);
  return table;
}

MeasurementTable Evaluate(const Scenario& scenario) {
  return Evaluate(PrepareGame(scenario));
}

StructuralReport CheckStructure(const GameSetup& setup) {
  ValidateSetup(setup);
  const TensorDims dims = setup.dims();
  RequireDense(dims, "CheckStructure");
  const std::size_t num_players = setup.num_players();
  const std::size_t n = setup.num_battlefields();

  StructuralReport report;
  std::vector<ComplexMatrix> strategies;
  for (std::size_t j = 1; j <= num_players; ++j) {
    strategies.push_back(BuildU(j, setup.strategies[j - 1], num_players, n));
    report.strategy_unitarity =
        std::max(report.strategy_unitarity, UnitarityDefect(strategies.back()));
  }
  for (std::size_t a = 0; a < num_players; ++a) {
    for (std::size_t b = a + 1; b < num_players; ++b) {
      report.strategy_commutator =
          std::max(report.strategy_commutator,
                   MaxAbs(Commutator(strategies[a], strategies[b])));
    }
  }

  const EntanglementGenerator generator =
      BuildA(num_players, n, setup.entangler.sign_pattern);
  const ComplexMatrix j = BuildJ(setup.entangler.gamma, generator, dims);
  report.entangler_unitarity = UnitarityDefect(j);
  const auto classical = ClassicalPart(setup.strategies);
  for (std::size_t p = 1; p <= num_players; ++p) {
    const ComplexMatrix u = BuildU(p, classical[p - 1], num_players, n);
    report.entangler_classical_commutator =
        std::max(report.entangler_classical_commutator,
                 MaxAbs(Commutator(j, u)));
  }

  StateVector dense = InitialState(num_players, n);
  dense = Apply(j, dense);
  for (const auto& u : strategies) dense = Apply(u, dense);
  dense = Apply(Dagger(j), dense);
  const StateVector psi = Evolve(setup);
  report.dense_state_mismatch = MaxAbsDiff(dense, psi);
  report.norm_defect = std::abs(psi.SquaredNorm() - 1.0);

  const ComplexMatrix rho = psi.OuterProduct();
  report.trace_defect = std::abs(Trace(rho) - Complex{1.0, 0.0});
  report.rho_hermiticity = HermiticityDefect(rho);
  for (std::size_t p = 1; p <= num_players; ++p) {
    const std::size_t keep[] = {p, num_players + 1};
    const ComplexMatrix reduced = PartialTrace(rho, dims, keep);
    report.reduced_hermiticity =
        std::max(report.reduced_hermiticity, HermiticityDefect(reduced));
    report.reduced_trace_defect =
        std::max(report.reduced_trace_defect,
                 std::abs(Trace(reduced) - Complex{1.0, 0.0}));
  }
  return report;
}

}  // namespace qblotto
