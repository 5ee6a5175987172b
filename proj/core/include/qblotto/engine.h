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

// Quantum multiplayer Colonel Blotto.
//
// The game lives on H = H_1 (x) ... (x) H_N (x) H_T: one soldier qubit per
// player followed by an n-dimensional battlefield register. Starting from
// |0...0> (x) uniform(T), the state is entangled by J, each player applies
// its strategy operator U_j, and J^dagger disentangles:
//
//   |psi_f> = J^dagger U_N ... U_1 J |psi_i>
//
// Player j's strength on battlefield k is the probability of finding its
// qubit in |1> together with the register in |T_k>, read off the reduced
// state over (qubit j, register). Payoffs compare that strength against the
// strongest rival on every battlefield.
//
// The dense Build* functions return full operators and are meant for checks
// and small games; Evolve() applies the same operators structurally and
// scales to the full dimension limit.

#ifndef QBLOTTO_ENGINE_H_
#define QBLOTTO_ENGINE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qblotto/classical.h"
#include "qblotto/scenario.h"
#include "qblotto/tensor.h"

namespace qblotto {

// One player's rotation angles and phases, indexed by battlefield.
struct QuantumStrategy {
  std::vector<double> lambdas;
  std::vector<double> phis;

  std::size_t num_battlefields() const { return lambdas.size(); }
};

struct EntanglerConfig {
  double gamma = 0.0;
  std::vector<int> sign_pattern;
};

// Everything the engine needs, with angles already derived.
struct GameSetup {
  std::vector<QuantumStrategy> strategies;
  EntanglerConfig entangler;
  double eps = kDefaultTieEps;

  std::size_t num_players() const { return strategies.size(); }
  std::size_t num_battlefields() const {
    return strategies.empty() ? 0 : strategies.front().num_battlefields();
  }
  TensorDims dims() const {
    return TensorDims::ForGame(num_players(), num_battlefields());
  }
};

struct MeasurementTable {
  // m[j][k]: player j+1, battlefield k+1.
  std::vector<std::vector<double>> m;
  // m_max[j][k]: largest m[i][k] over i != j.
  std::vector<std::vector<double>> m_max;
  std::vector<int> payoffs;

  std::size_t num_players() const { return m.size(); }
  std::size_t num_battlefields() const {
    return m.empty() ? 0 : m.front().size();
  }
};

// (pi/2) * soldiers / blotto_total. Throws kValidation if soldiers is
// negative or exceeds blotto_total, or blotto_total is not positive.
double LambdaOf(double soldiers, double blotto_total);

// [[e^{i phi} cos, -sin], [sin, e^{-i phi} cos]]; phi = 0 is a real rotation.
ComplexMatrix BuildQ(double lambda, double phi);

// Sum over k of Q(lambda_k, phi_k) on qubit `player` (1-based) tensored with
// the battlefield projector |T_k><T_k|. Dense; throws kDimension above
// kMaxDenseDimension.
ComplexMatrix BuildU(std::size_t player, const QuantumStrategy& strategy,
                     std::size_t num_players, std::size_t num_battlefields);

struct EntanglementGenerator {
  ComplexMatrix matrix;
  // matrix * matrix == square_sign * I; +1 for odd player counts.
  int square_sign = 0;
};

// (-1)^N [[0,1],[-1,0]]^{(x)N} (x) diag(i * sign_pattern).
EntanglementGenerator BuildA(std::size_t num_players,
                             std::size_t num_battlefields,
                             std::span<const int> sign_pattern);

// cos(gamma/2) I + i sin(gamma/2) A. Verifies unitarity to 1e-10 (throws
// kEntanglerParity otherwise, which happens for even N and gamma > 0) and
// commutation with randomly sampled classical strategy operators (throws
// kInternal).
ComplexMatrix BuildJ(double gamma, const EntanglementGenerator& generator,
                     const TensorDims& dims);

// Validates the scenario and derives every player's angles. Validation
// notices are written to `notices` when given.
GameSetup PrepareGame(const Scenario& scenario,
                      std::vector<std::string>* notices = nullptr);

// Strategies with every phase set to zero.
std::vector<QuantumStrategy> ClassicalPart(
    std::span<const QuantumStrategy> strategies);

StateVector InitialState(std::size_t num_players, std::size_t num_battlefields);

// In-place structured applications on a game state.
void ApplyStrategy(StateVector& psi, std::size_t player,
                   const QuantumStrategy& strategy, const TensorDims& dims);
void ApplyGenerator(StateVector& psi, std::span<const int> sign_pattern,
                    const TensorDims& dims, bool adjoint);
void ApplyEntangler(StateVector& psi, const EntanglerConfig& config,
                    const TensorDims& dims, bool adjoint);

// Throws kEntanglerParity if J is not unitary for this game and kInternal if
// it fails to commute with classical strategies. Cheap: works on states.
void VerifyEntangler(const EntanglerConfig& config, const TensorDims& dims);

// Final state. `order` lists 1-based players in application order; empty
// means ascending.
StateVector Evolve(const GameSetup& setup,
                   std::span<const std::size_t> order = {});
StateVector Evolve(const Scenario& scenario);

// Forms each player's reduced state over (its qubit, battlefield register)
// and measures |1><1| (x) |T_k><T_k|. Fills m and m_max; payoffs are left
// empty. Throws kNumericalIntegrity on a complex or negative measurement.
MeasurementTable Measure(const StateVector& psi, const TensorDims& dims);

enum class PayoffSummation {
  kAllBattlefields,
  // Skips battlefield k == j for player j. Kept only to demonstrate that
  // this reading contradicts the reference game's payoffs.
  kSkipMatchingIndex,
};

std::vector<int> QuantumPayoffs(
    const MeasurementTable& table, double eps = kDefaultTieEps,
    PayoffSummation summation = PayoffSummation::kAllBattlefields);

// Evolve, Measure and QuantumPayoffs in one call.
MeasurementTable Evaluate(const GameSetup& setup,
                          std::span<const std::size_t> order = {});
MeasurementTable Evaluate(const Scenario& scenario);

// Worst-case deviations of the structural invariants for one game. Uses
// dense operators, so the game must fit kMaxDenseDimension.
struct StructuralReport {
  double norm_defect = 0.0;               // | <psi|psi> - 1 |
  double trace_defect = 0.0;              // | tr rho - 1 |
  double rho_hermiticity = 0.0;
  double reduced_hermiticity = 0.0;       // worst over players
  double reduced_trace_defect = 0.0;      // worst over players
  double strategy_unitarity = 0.0;        // worst over players
  double entangler_unitarity = 0.0;
  double entangler_classical_commutator = 0.0;  // worst over players
  double strategy_commutator = 0.0;       // worst over player pairs
  double dense_state_mismatch = 0.0;      // dense vs structured evolution
};

StructuralReport CheckStructure(const GameSetup& setup);

}  // namespace qblotto

#endif  // QBLOTTO_ENGINE_H_
