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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "oracles.h"
#include "qblotto/classical.h"
#include "qblotto/error.h"
#include "qblotto/scenario.h"

namespace qblotto {
namespace {

const Complex kI(0, 1);
// (1/2) sin^2(pi/12), frozen from an independent high-precision evaluation.
constexpr double kEnemyOneSecondField = 0.0334936490538903;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInternal;
}

Scenario WithPhase(Scenario s, std::size_t player, std::size_t field,
                   double phi) {
  s.phases[player - 1][field - 1] = phi;
  return s;
}

oracle::ThreeByTwo OracleGame(const Scenario& s) {
  oracle::ThreeByTwo g;
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 2; ++k) {
      g.lambda[j][k] = (kPi / 2) * (s.allocations[j][k] / s.totals[0]);
      g.phi[j][k] = s.phases[j][k];
    }
  }
  g.gamma = s.gamma;
  g.signs = {s.sign_pattern[0], s.sign_pattern[1]};
  return g;
}

// Random odd-player game with random phases; integer soldiers so ties occur.
Scenario RandomGame(std::mt19937_64& rng, std::size_t players,
                    std::size_t fields, bool phases) {
  Scenario s;
  const int blotto = std::uniform_int_distribution<int>(1, 7)(rng);
  std::uniform_int_distribution<int> enemy(0, blotto);
  std::uniform_int_distribution<std::size_t> field(0, fields - 1);
  for (std::size_t j = 0; j < players; ++j) {
    const int total = j == 0 ? blotto : enemy(rng);
    Allocation a(fields, 0.0);
    for (int t = 0; t < total; ++t) a[field(rng)] += 1.0;
    s.totals.push_back(total);
    s.allocations.push_back(a);
  }
  s.gamma = std::uniform_real_distribution<double>(0.0, kPi / 2)(rng);
  NormalizeScenario(s);
  if (phases) {
    std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
    for (auto& row : s.phases)
      for (double& p : row) p = phase(rng);
  }
  return s;
}

TEST(LambdaOfTest, ReferenceAngles) {
  EXPECT_DOUBLE_EQ(LambdaOf(3, 6), kPi / 4);
  EXPECT_EQ(LambdaOf(0, 6), 0.0);
  EXPECT_DOUBLE_EQ(LambdaOf(1, 6), kPi / 12);
  EXPECT_DOUBLE_EQ(LambdaOf(6, 6), kPi / 2);
}

TEST(LambdaOfTest, DomainErrors) {
  EXPECT_EQ(CodeOf([] { LambdaOf(7, 6); }), ErrorCode::kValidation);
  EXPECT_EQ(CodeOf([] { LambdaOf(-1, 6); }), ErrorCode::kValidation);
  EXPECT_EQ(CodeOf([] { LambdaOf(0, 0); }), ErrorCode::kValidation);
}

TEST(LambdaOfTest, MonotoneInSoldiers) {
  double previous = -1.0;
  for (int x = 0; x <= 60; ++x) {
    const double lambda = LambdaOf(x / 10.0, 6.0);
    EXPECT_GT(lambda, previous);
    previous = lambda;
  }
}

TEST(BuildQTest, ZeroIsIdentity) {
  EXPECT_EQ(BuildQ(0, 0), ComplexMatrix::Identity(2));
}

TEST(BuildQTest, PhaseFreeIsRotation) {
  const double h = std::sqrt(2.0) / 2;
  const ComplexMatrix expected{{h, -h}, {h, h}};
  EXPECT_LE(MaxAbsDiff(BuildQ(kPi / 4, 0), expected), 1e-15);
  for (double lambda : {0.1, 0.7, 1.3}) {
    const ComplexMatrix r{{std::cos(lambda), -std::sin(lambda)},
                          {std::sin(lambda), std::cos(lambda)}};
    EXPECT_EQ(BuildQ(lambda, 0.0), r);
  }
}

TEST(BuildQTest, SpecialUnitary) {
  const ComplexMatrix q = BuildQ(kPi / 4, kPi / 3);
  const Complex det = q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0);
  EXPECT_LE(std::abs(det - Complex(1, 0)), 1e-12);
  EXPECT_LE(UnitarityDefect(q), 1e-12);
  EXPECT_LE(std::abs(q(0, 0) - std::exp(kI * (kPi / 3)) * std::cos(kPi / 4)),
            1e-15);
}

TEST(BuildUTest, ZeroStrategyIsIdentity) {
  const QuantumStrategy s{{0, 0}, {0, 0}};
  EXPECT_EQ(BuildU(2, s, 3, 2), ComplexMatrix::Identity(16));
}

TEST(BuildUTest, SinglePlayerIsBlockDiagonal) {
  const QuantumStrategy s{{kPi / 4, kPi / 12}, {0, 0}};
  const ComplexMatrix u = BuildU(1, s, 1, 2);
  // Index q * 2 + t; block t acts on q.
  for (std::size_t t = 0; t < 2; ++t) {
    const ComplexMatrix r = BuildQ(s.lambdas[t], 0.0);
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        EXPECT_NEAR(std::abs(u(a * 2 + t, b * 2 + t) - r(a, b)), 0.0, 1e-15);
        EXPECT_EQ(u(a * 2 + t, b * 2 + (1 - t)), Complex(0, 0));
      }
    }
  }
}

TEST(BuildUTest, UnitaryWithPhases) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, kPi / 2);
  for (std::size_t j = 1; j <= 3; ++j) {
    QuantumStrategy s{{angle(rng), angle(rng), angle(rng)},
                      {angle(rng), angle(rng), angle(rng)}};
    EXPECT_LE(UnitarityDefect(BuildU(j, s, 3, 3)), 1e-12);
  }
}

TEST(BuildUTest, BlottoAloneGivesQuarterPerField) {
  const Scenario s = ReferenceScenario();
  const GameSetup setup = PrepareGame(s);
  const ComplexMatrix u =
      BuildU(1, setup.strategies[0], 3, 2);
  const StateVector psi = Apply(u, InitialState(3, 2));
  const MeasurementTable table = Measure(psi, TensorDims::ForGame(3, 2));
  EXPECT_NEAR(table.m[0][0], 0.25, 1e-12);
  EXPECT_NEAR(table.m[0][1], 0.25, 1e-12);
}

TEST(BuildATest, OneQubitOneField) {
  const int pattern[] = {+1};
  const EntanglementGenerator a = BuildA(1, 1, pattern);
  const ComplexMatrix expected{{0, -kI}, {kI, 0}};
  EXPECT_EQ(a.matrix, expected);
  EXPECT_EQ(HermiticityDefect(a.matrix), 0.0);
  EXPECT_EQ(a.square_sign, +1);
}

TEST(BuildATest, ThreePlayersSquareToIdentity) {
  const int pattern[] = {+1, -1};
  const EntanglementGenerator a = BuildA(3, 2, pattern);
  ASSERT_EQ(a.matrix.rows(), 16u);
  EXPECT_LE(HermiticityDefect(a.matrix), 1e-12);
  EXPECT_LE(MaxAbsDiff(a.matrix * a.matrix, ComplexMatrix::Identity(16)),
            1e-12);
  EXPECT_EQ(a.square_sign, +1);
}

TEST(BuildATest, TwoPlayersSquareToMinusIdentity) {
  const int pattern[] = {-1, +1};
  const EntanglementGenerator a = BuildA(2, 2, pattern);
  EXPECT_LE(MaxAbsDiff(a.matrix * a.matrix, -1.0 * ComplexMatrix::Identity(8)),
            1e-12);
  EXPECT_LE(MaxAbsDiff(Dagger(a.matrix), -1.0 * a.matrix), 1e-12);
  EXPECT_EQ(a.square_sign, -1);
}

TEST(BuildATest, MatchesIndependentExpansion) {
  const int pattern[] = {+1, -1};
  const EntanglementGenerator a = BuildA(3, 2, pattern);
  const oracle::Dense s = {{0, 1}, {-1, 0}};
  const oracle::Dense d = {{kI, 0}, {0, -kI}};
  const oracle::Dense expected = oracle::BruteKron(
      oracle::BruteKron(oracle::BruteKron(s, s), s), d);
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c)
      EXPECT_EQ(a.matrix(r, c), -expected[r][c]);
}

TEST(BuildJTest, GammaZeroIsIdentity) {
  const int pattern[] = {+1, -1};
  const TensorDims dims = TensorDims::ForGame(3, 2);
  EXPECT_EQ(BuildJ(0.0, BuildA(3, 2, pattern), dims),
            ComplexMatrix::Identity(16));
  const TensorDims even = TensorDims::ForGame(2, 2);
  EXPECT_EQ(BuildJ(0.0, BuildA(2, 2, pattern), even),
            ComplexMatrix::Identity(8));
}

TEST(BuildJTest, UnitaryForThreePlayers) {
  const int pattern[] = {+1, -1};
  const ComplexMatrix j =
      BuildJ(kPi / 2, BuildA(3, 2, pattern), TensorDims::ForGame(3, 2));
  EXPECT_LE(MaxAbsDiff(Dagger(j) * j, ComplexMatrix::Identity(16)), 1e-12);
}

TEST(BuildJTest, CommutesWithReferenceClassicalStrategies) {
  const int pattern[] = {+1, -1};
  const ComplexMatrix j =
      BuildJ(kPi / 2, BuildA(3, 2, pattern), TensorDims::ForGame(3, 2));
  const GameSetup setup = PrepareGame(ReferenceScenario());
  for (std::size_t p = 1; p <= 3; ++p) {
    const ComplexMatrix u = BuildU(p, setup.strategies[p - 1], 3, 2);
    EXPECT_LE(MaxAbs(Commutator(j, u)), 1e-12);
  }
}

TEST(BuildJTest, EvenPlayersRejectedWithParityDiagnostic) {
  const int pattern[] = {+1, -1};
  try {
    BuildJ(kPi / 4, BuildA(4, 2, pattern), TensorDims::ForGame(4, 2));
    FAIL() << "expected rejection";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEntanglerParity);
    EXPECT_NE(std::string(e.what()).find("even"), std::string::npos)
        << e.what();
  }
}

TEST(EvolveTest, TrivialGameKeepsInitialState) {
  // No scenario can describe this game (Blotto needs soldiers), so build
  // the setup directly.
  GameSetup setup;
  setup.strategies.assign(3, QuantumStrategy{{0, 0, 0}, {0, 0, 0}});
  setup.entangler = {0.0, {1, 1, -1}};
  const StateVector psi = Evolve(setup);
  EXPECT_EQ(MaxAbsDiff(psi, InitialState(3, 3)), 0.0);
  const MeasurementTable table = Measure(psi, setup.dims());
  for (const auto& row : table.m)
    for (double m : row) EXPECT_NEAR(m, 0.0, 1e-15);
}

TEST(EvolveTest, InitialStateLayout) {
  const StateVector psi = InitialState(3, 4);
  ASSERT_EQ(psi.dim(), 32u);
  for (std::size_t t = 0; t < 4; ++t) EXPECT_EQ(psi[t], Complex(0.5, 0));
  for (std::size_t i = 4; i < 32; ++i) EXPECT_EQ(psi[i], Complex(0, 0));
}

TEST(EvolveTest, MatchesAmplitudeOracleWithQuantumPhase) {
  const Scenario s = WithPhase(ReferenceScenario(), 3, 1, kPi / 3);
  const StateVector psi = Evolve(s);
  const std::vector<Complex> expected = oracle::FinalState(OracleGame(s));
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_LE(std::abs(psi[i] - expected[i]), 1e-12) << "amplitude " << i;
  }
  const MeasurementTable table = Measure(psi, TensorDims::ForGame(3, 2));
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 2; ++k)
      EXPECT_NEAR(table.m[j][k], oracle::Measurement(expected, j, k), 1e-12);
  EXPECT_NEAR(table.m[2][0], 0.375, 1e-12);
}

TEST(EvolveTest, MatchesAmplitudeOracleOnRandomGames) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    Scenario s = RandomGame(rng, 3, 2, true);
    if (trial % 3 == 0) s.sign_pattern = {-1, +1};
    const StateVector psi = Evolve(s);
    const std::vector<Complex> expected = oracle::FinalState(OracleGame(s));
    for (std::size_t i = 0; i < 16; ++i) {
      EXPECT_LE(std::abs(psi[i] - expected[i]), 1e-12);
    }
  }
}

TEST(EvolveTest, RejectsBadOrders) {
  const GameSetup setup = PrepareGame(ReferenceScenario());
  const std::size_t duplicate[] = {1, 1, 2};
  const std::size_t short_order[] = {1, 2};
  const std::size_t out_of_range[] = {1, 2, 4};
  EXPECT_EQ(CodeOf([&] { Evolve(setup, duplicate); }), ErrorCode::kValidation);
  EXPECT_EQ(CodeOf([&] { Evolve(setup, short_order); }),
            ErrorCode::kValidation);
  EXPECT_EQ(CodeOf([&] { Evolve(setup, out_of_range); }),
            ErrorCode::kValidation);
}

TEST(EvolveTest, EvenPlayerGameRejected) {
  Scenario s;
  s.totals = {4, 4, 2, 1};
  s.allocations = {{2, 2}, {1, 3}, {2, 0}, {0, 1}};
  s.gamma = 0.3;
  NormalizeScenario(s);
  EXPECT_EQ(CodeOf([&] { Evolve(s); }), ErrorCode::kEntanglerParity);
  s.gamma = 0.0;
  EXPECT_NO_THROW(Evolve(s));
}

TEST(EvolveTest, StructuredMatchesDenseForFivePlayers) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    const Scenario s = RandomGame(rng, 5, 3, true);
    const StructuralReport report = CheckStructure(PrepareGame(s));
    EXPECT_LE(report.dense_state_mismatch, 1e-12);
  }
}

TEST(MeasureTest, ReferenceTable) {
  const MeasurementTable table = Evaluate(ReferenceScenario());
  const double expected[3][2] = {
      {0.25, 0.25}, {0.25, kEnemyOneSecondField}, {0.0, 0.25}};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 2; ++k)
      EXPECT_NEAR(table.m[j][k], expected[j][k], 1e-12);
  EXPECT_NEAR(0.5 * std::pow(std::sin(kPi / 12), 2), kEnemyOneSecondField,
              1e-16);
  EXPECT_NEAR(table.m_max[0][1], 0.25, 1e-12);
  EXPECT_NEAR(table.m_max[2][0], 0.25, 1e-12);
}

TEST(MeasureTest, ClassicalClosedForm) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Scenario s = RandomGame(rng, trial % 2 ? 3 : 5, n, false);
    const GameSetup setup = PrepareGame(s);
    const MeasurementTable table = Evaluate(setup);
    for (std::size_t j = 0; j < setup.num_players(); ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double sin = std::sin(setup.strategies[j].lambdas[k]);
        EXPECT_NEAR(table.m[j][k], sin * sin / static_cast<double>(n), 1e-12);
      }
    }
  }
}

TEST(MeasureTest, ValuesAreProbabilities) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const MeasurementTable table = Evaluate(RandomGame(rng, 3, 3, true));
    for (const auto& row : table.m) {
      for (double m : row) {
        EXPECT_GE(m, -1e-12);
        EXPECT_LE(m, 1.0 + 1e-12);
      }
    }
  }
}

TEST(PayoffTest, ReferencePayoffs) {
  const MeasurementTable table = Evaluate(ReferenceScenario());
  EXPECT_EQ(table.payoffs, (std::vector<int>{0, -1, -1}));
  EXPECT_EQ(QuantumPayoffs(table), table.payoffs);
}

TEST(PayoffTest, SkippingTheMatchingIndexBreaksTheReference) {
  const MeasurementTable table = Evaluate(ReferenceScenario());
  const std::vector<int> literal =
      QuantumPayoffs(table, kDefaultTieEps, PayoffSummation::kSkipMatchingIndex);
  EXPECT_EQ(literal[1], 0);
  EXPECT_NE(literal, (std::vector<int>{0, -1, -1}));
}

TEST(PayoffTest, IdenticalStrategiesTie) {
  Scenario s;
  s.totals = {5, 5, 5};
  s.allocations = {{1, 4}, {1, 4}, {1, 4}};
  s.phases = {{0.4, 1.1}, {0.4, 1.1}, {0.4, 1.1}};
  s.gamma = kPi / 2;
  NormalizeScenario(s);
  EXPECT_EQ(Evaluate(s).payoffs, (std::vector<int>{0, 0, 0}));
}

TEST(PayoffTest, EnemyTwoGainsJustAbovePiOverFour) {
  const Scenario s = WithPhase(ReferenceScenario(), 3, 1, kPi / 4 + 1e-3);
  EXPECT_GT(Evaluate(s).payoffs[2], 0);
}

TEST(PayoffTest, BoundedByBattlefieldCount) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    for (int p : Evaluate(RandomGame(rng, 3, n, true)).payoffs) {
      EXPECT_LE(std::abs(p), static_cast<int>(n));
    }
  }
}

TEST(InvariantTest, ClassicalCorrespondence) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const Scenario s = RandomGame(rng, trial % 4 ? 3 : 5, 2 + trial % 2, false);
    EXPECT_EQ(Evaluate(s).payoffs,
              ClassicalPayoffs(s.allocations, PlayerRoster(s.totals), s.eps));
  }
}

TEST(InvariantTest, OrderInvariance) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const GameSetup setup = PrepareGame(RandomGame(rng, 5, 2, true));
    const MeasurementTable reference = Evaluate(setup);
    std::vector<std::size_t> order(5);
    std::iota(order.begin(), order.end(), 1);
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      std::shuffle(order.begin(), order.end(), rng);
      const MeasurementTable table = Evaluate(setup, order);
      EXPECT_EQ(table.payoffs, reference.payoffs);
      for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          EXPECT_NEAR(table.m[j][k], reference.m[j][k], 1e-12);
    }
  }
}

TEST(InvariantTest, GammaZeroIgnoresSignPattern) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    Scenario s = RandomGame(rng, 3, 3, true);
    s.gamma = 0.0;
    const std::vector<int> payoffs = Evaluate(s).payoffs;
    s.sign_pattern = {-1, +1, +1};
    EXPECT_EQ(Evaluate(s).payoffs, payoffs);
  }
}

TEST(InvariantTest, StructuralReportIsClean) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const StructuralReport r =
        CheckStructure(PrepareGame(RandomGame(rng, 3, 2 + trial % 2, true)));
    EXPECT_LE(r.norm_defect, 1e-10);
    EXPECT_LE(r.trace_defect, 1e-10);
    EXPECT_LE(r.rho_hermiticity, 1e-12);
    EXPECT_LE(r.reduced_hermiticity, 1e-12);
    EXPECT_LE(r.reduced_trace_defect, 1e-10);
    EXPECT_LE(r.strategy_unitarity, 1e-10);
    EXPECT_LE(r.entangler_unitarity, 1e-10);
    EXPECT_LE(r.entangler_classical_commutator, 1e-10);
    EXPECT_LE(r.strategy_commutator, 1e-10);
    EXPECT_LE(r.dense_state_mismatch, 1e-12);
  }
}

TEST(PrepareGameTest, DerivesAnglesFromAllocations) {
  const GameSetup setup = PrepareGame(ReferenceScenario());
  ASSERT_EQ(setup.num_players(), 3u);
  EXPECT_DOUBLE_EQ(setup.strategies[1].lambdas[1], kPi / 12);
  EXPECT_EQ(setup.strategies[2].lambdas[0], 0.0);
  EXPECT_EQ(setup.entangler.sign_pattern, (std::vector<int>{1, -1}));
  const auto classical = ClassicalPart(setup.strategies);
  for (const auto& s : classical)
    for (double phi : s.phis) EXPECT_EQ(phi, 0.0);
}

}  // namespace
}  // namespace qblotto
