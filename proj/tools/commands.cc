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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "csv.h"
#include "qblotto/classical.h"
#include "qblotto/sweep.h"
#include "scenario_file.h"

namespace qblotto::tools {

namespace {

constexpr double kGoldenTolerance = 1e-10;

std::string Fixed(double value, int digits = 10) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string FormatPayoffs(const std::vector<int>& payoffs) {
  std::string text = "(";
  for (std::size_t j = 0; j < payoffs.size(); ++j) {
    if (j > 0) text += ", ";
    text += std::to_string(payoffs[j]);
  }
  return text + ")";
}

LoadedScenario Load(const std::string& path, const GlobalOptions& global) {
  LoadedScenario loaded = LoadScenarioFile(path, {global.degrees});
  if (global.eps) {
    if (!(*global.eps >= 0.0) || !std::isfinite(*global.eps)) {
      throw Error(ErrorCode::kValidation,
                  "--eps must be a finite non-negative number");
    }
    loaded.scenario.eps = *global.eps;
  }
  return loaded;
}

// Writes `content` to `path`; false if the file cannot be written.
bool WriteFile(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) return false;
  file << content;
  file.close();
  return static_cast<bool>(file);
}

// Runs `body`, mapping every failure to an exit code and an error line.
int Guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ScenarioFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error [internal]: " << e.what() << '\n';
    return kExitNumerical;
  }
}

void PrintTable(std::ostream& out, const Scenario& scenario,
                const MeasurementTable& table) {
  const std::size_t n = table.num_battlefields();
  std::size_t name_width = 6;
  for (const auto& name : scenario.player_names) {
    name_width = std::max(name_width, name.size());
  }
  out << std::string(name_width, ' ');
  for (std::size_t k = 1; k <= n; ++k) {
    std::string label = "M(T" + std::to_string(k) + ")";
    out << "  " << std::string(14 - label.size(), ' ') << label;
  }
  out << "  payoff\n";
  for (std::size_t j = 0; j < table.num_players(); ++j) {
    const std::string& name = scenario.player_names[j];
    out << name << std::string(name_width - name.size(), ' ');
    for (double m : table.m[j]) out << "  " << Fixed(m, 12);
    char payoff[16];
    std::snprintf(payoff, sizeof(payoff), "%6d", table.payoffs[j]);
    out << "  " << payoff << '\n';
  }
}

// Draws a non-negative integer split of `total` over n battlefields.
Allocation RandomSplit(std::mt19937_64& rng, int total, std::size_t n) {
  Allocation allocation(n, 0.0);
  std::uniform_int_distribution<std::size_t> field(0, n - 1);
  for (int s = 0; s < total; ++s) allocation[field(rng)] += 1.0;
  return allocation;
}

// One verify check: a name and the failures it found.
struct Check {
  std::string name;
  std::vector<std::string> failures;

  void Fail(std::string message) { failures.push_back(std::move(message)); }
  bool passed() const { return failures.empty(); }
};

Check CheckReferenceMeasurements() {
  Check check{"reference measurements", {}};
  const MeasurementTable table = Evaluate(ReferenceScenario());
  const double sin15 = std::sin(kPi / 12);
  const double expected[3][2] = {
      {0.25, 0.25}, {0.25, 0.5 * sin15 * sin15}, {0.0, 0.25}};
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 2; ++k) {
      const double got = table.m[j][k];
      if (!(std::abs(got - expected[j][k]) <= kGoldenTolerance)) {
        check.Fail("M[" + std::to_string(j + 1) + "][" +
                   std::to_string(k + 1) + "] = " + Fixed(got, 15) +
                   ", expected " + Fixed(expected[j][k], 15));
      }
    }
  }
  return check;
}

Check CheckReferencePayoffs(double eps, PayoffSummation summation) {
  Check check{"reference payoffs", {}};
  const Scenario scenario = ReferenceScenario();
  const MeasurementTable table = Evaluate(scenario);
  const std::vector<int> expected = {0, -1, -1};
  const std::vector<int> quantum = QuantumPayoffs(table, eps, summation);
  const std::vector<int> classical = ClassicalPayoffs(
      scenario.allocations, PlayerRoster(scenario.totals), scenario.eps);
  if (quantum != expected) {
    check.Fail("quantum payoffs " + FormatPayoffs(quantum) + ", expected " +
               FormatPayoffs(expected));
  }
  if (classical != expected) {
    check.Fail("classical payoffs " + FormatPayoffs(classical) +
               ", expected " + FormatPayoffs(expected));
  }
  return check;
}

// Equal allocations on every battlefield; all payoffs hinge on ties.
Check CheckTieGame(double eps, PayoffSummation summation) {
  Check check{"tie game", {}};
  Scenario scenario;
  scenario.totals = {4, 4, 4};
  scenario.allocations = {{1, 3}, {1, 3}, {1, 3}};
  scenario.gamma = kPi / 2;
  NormalizeScenario(scenario);
  const std::vector<int> quantum =
      QuantumPayoffs(Evaluate(scenario), eps, summation);
  if (quantum != std::vector<int>{0, 0, 0}) {
    check.Fail("payoffs " + FormatPayoffs(quantum) + ", expected (0, 0, 0)");
  }
  return check;
}

Check CheckClassicalCorrespondence(const VerifyOptions& verify, double eps) {
  Check check{"classical correspondence", {}};
  std::mt19937_64 rng(verify.seed);
  std::uniform_int_distribution<std::size_t> fields(2, 3);
  for (std::size_t s = 0; s < verify.random_scenarios; ++s) {
    const Scenario scenario = RandomClassicalScenario(rng, 3, fields(rng));
    const GameSetup setup = PrepareGame(scenario);
    const MeasurementTable table = Evaluate(setup);
    const std::vector<int> quantum =
        QuantumPayoffs(table, eps, verify.summation);
    const std::vector<int> classical = ClassicalPayoffs(
        scenario.allocations, PlayerRoster(scenario.totals), scenario.eps);
    const std::string tag = "scenario " + std::to_string(s + 1) + ": ";
    if (quantum != classical) {
      check.Fail(tag + "quantum " + FormatPayoffs(quantum) + " vs classical " +
                 FormatPayoffs(classical));
    }
    const double n = static_cast<double>(scenario.num_battlefields());
    for (std::size_t j = 0; j < setup.num_players(); ++j) {
      for (std::size_t k = 0; k < setup.num_battlefields(); ++k) {
        const double s2 = std::sin(setup.strategies[j].lambdas[k]);
        if (!(std::abs(table.m[j][k] - s2 * s2 / n) <= kGoldenTolerance)) {
          check.Fail(tag + "M[" + std::to_string(j + 1) + "][" +
                     std::to_string(k + 1) + "] off the closed form");
        }
      }
    }
  }
  return check;
}

Check CheckOrderInvariance(const VerifyOptions& verify, double eps) {
  Check check{"order invariance", {}};
  std::mt19937_64 rng(verify.seed ^ 0x5bd1e995u);
  std::uniform_int_distribution<std::size_t> fields(2, 3);
  for (std::size_t s = 0; s < verify.random_scenarios; ++s) {
    const Scenario scenario = RandomQuantumScenario(rng, 3, fields(rng));
    const GameSetup setup = PrepareGame(scenario);
    const std::vector<int> reference =
        QuantumPayoffs(Evaluate(setup), eps, verify.summation);
    std::vector<std::size_t> order(setup.num_players());
    std::iota(order.begin(), order.end(), 1);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      const std::vector<int> payoffs =
          QuantumPayoffs(Evaluate(setup, order), eps, verify.summation);
      if (payoffs != reference) {
        check.Fail("scenario " + std::to_string(s + 1) + ": payoffs " +
                   FormatPayoffs(payoffs) + " under a shuffled order vs " +
                   FormatPayoffs(reference));
        break;
      }
    }
  }
  return check;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation:
    case ErrorCode::kDimension:
      return kExitInput;
    case ErrorCode::kNumericalIntegrity:
    case ErrorCode::kEntanglerParity:
    case ErrorCode::kInternal:
      return kExitNumerical;
  }
  return kExitNumerical;
}

Scenario RandomClassicalScenario(std::mt19937_64& rng,
                                 std::size_t num_players,
                                 std::size_t num_battlefields) {
  Scenario scenario;
  const int blotto = std::uniform_int_distribution<int>(1, 8)(rng);
  std::uniform_int_distribution<int> enemy(0, blotto);
  for (std::size_t j = 0; j < num_players; ++j) {
    const int total = j == 0 ? blotto : enemy(rng);
    scenario.totals.push_back(total);
    scenario.allocations.push_back(RandomSplit(rng, total, num_battlefields));
  }
  scenario.gamma = std::uniform_real_distribution<double>(0.0, kPi / 2)(rng);
  NormalizeScenario(scenario);
  return scenario;
}

Scenario RandomQuantumScenario(std::mt19937_64& rng, std::size_t num_players,
                               std::size_t num_battlefields) {
  Scenario scenario =
      RandomClassicalScenario(rng, num_players, num_battlefields);
  std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
  for (auto& row : scenario.phases) {
    for (double& phi : row) phi = phase(rng);
  }
  NormalizeScenario(scenario);
  return scenario;
}

int RunPlay(const std::string& path, const GlobalOptions& global,
            std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const LoadedScenario loaded = Load(path, global);
    const Scenario& scenario = loaded.scenario;
    std::vector<std::string> notices = loaded.notices;
    const GameSetup setup = PrepareGame(scenario, &notices);
    const MeasurementTable table = Evaluate(setup);

    std::ostringstream report;
    report << "scenario: " << path << '\n'
           << "players: " << scenario.num_players()
           << "  battlefields: " << scenario.num_battlefields()
           << "  state dimension: " << setup.dims().total() << '\n'
           << "gamma: " << FormatReal(scenario.gamma)
           << "  tie eps: " << FormatReal(scenario.eps) << "  sign pattern:";
    for (int s : scenario.sign_pattern) report << ' ' << (s > 0 ? '+' : '-');
    report << "\n\n";
    PrintTable(report, scenario, table);
    for (const auto& notice : notices) report << "note: " << notice << '\n';

    if (!global.out.empty()) {
      std::ostringstream csv;
      WriteTableCsv(csv, table);
      if (!WriteFile(global.out, csv.str())) {
        throw Error(ErrorCode::kValidation, "cannot write " + global.out);
      }
    }
    out << report.str();
    return kExitOk;
  });
}

int RunSweepCommand(const std::string& path, const SweepOptions& sweep,
                    const GlobalOptions& global, std::ostream& out,
                    std::ostream& err) {
  return Guarded(err, [&] {
    const auto parameter = ParseSweepParameter(sweep.param);
    if (!parameter) {
      throw Error(ErrorCode::kValidation,
                  "unknown sweep parameter '" + sweep.param +
                      "' (expected phi, lambda or gamma)");
    }
    const LoadedScenario loaded = Load(path, global);
    const auto angle = [&](double value) {
      return global.degrees ? DegreesToRadians(value) : value;
    };

    SweepSpec spec;
    spec.base = loaded.scenario;
    spec.player = sweep.player;
    spec.battlefield = sweep.battlefield;
    spec.parameter = *parameter;
    spec.lo = sweep.from ? angle(*sweep.from) : 0.0;
    spec.hi = sweep.to ? angle(*sweep.to) : kPi / 2;
    spec.steps = sweep.steps;
    spec.jobs = global.jobs;
    const SweepResult result = RunSweep(spec);

    std::ostringstream csv;
    WriteSweepCsv(csv, result, loaded.scenario.num_players(),
                  loaded.scenario.num_battlefields());
    std::ostringstream summary;
    summary << result.points.size() << " points, "
            << result.transitions.size() << " payoff transition"
            << (result.transitions.size() == 1 ? "" : "s") << '\n';
    for (const auto& t : result.transitions) {
      summary << "transition at " << SweepParameterName(spec.parameter)
              << " in [" << Fixed(t.lower, 9) << ", " << Fixed(t.upper, 9)
              << "]: " << FormatPayoffs(t.payoffs_below) << " -> "
              << FormatPayoffs(t.payoffs_above) << '\n';
    }

    if (global.out.empty()) {
      // CSV owns stdout; the summary goes to stderr.
      out << csv.str();
      err << summary.str();
    } else {
      if (!WriteFile(global.out, csv.str())) {
        throw Error(ErrorCode::kValidation, "cannot write " + global.out);
      }
      out << summary.str();
    }
    return kExitOk;
  });
}

int RunVerify(const VerifyOptions& verify, const GlobalOptions& global,
              std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const double eps = global.eps.value_or(kDefaultTieEps);
    if (!(eps >= 0.0) || !std::isfinite(eps)) {
      throw Error(ErrorCode::kValidation,
                  "--eps must be a finite non-negative number");
    }
    const std::vector<Check> checks = {
        CheckReferenceMeasurements(),
        CheckReferencePayoffs(eps, verify.summation),
        CheckTieGame(eps, verify.summation),
        CheckClassicalCorrespondence(verify, eps),
        CheckOrderInvariance(verify, eps),
    };
    std::ostringstream report;
    bool all_passed = true;
    for (const auto& check : checks) {
      report << (check.passed() ? "PASS " : "FAIL ") << check.name << '\n';
      all_passed = all_passed && check.passed();
    }
    if (all_passed) {
      out << report.str();
      return kExitOk;
    }
    err << report.str() << "\nfailure manifest:\n";
    for (const auto& check : checks) {
      for (const auto& failure : check.failures) {
        err << "  " << check.name << ": " << failure << '\n';
      }
    }
    return kExitCheckFailed;
  });
}

int RunOracle(const std::string& path, const GlobalOptions& global,
              std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const LoadedScenario loaded = Load(path, global);
    const Scenario& scenario = loaded.scenario;
    if (scenario.HasQuantumPhases()) {
      throw Error(ErrorCode::kValidation,
                  "the classical oracle needs every phase to be zero");
    }
    const std::vector<int> classical = ClassicalPayoffs(
        scenario.allocations, PlayerRoster(scenario.totals), scenario.eps);
    const std::vector<int> quantum = Evaluate(scenario).payoffs;
    const bool agree = classical == quantum;

    std::ostringstream report;
    report << "classical: " << FormatPayoffs(classical) << '\n'
           << "quantum:   " << FormatPayoffs(quantum) << '\n'
           << (agree ? "PASS" : "FAIL") << '\n';
    if (!agree) {
      err << report.str();
      return kExitCheckFailed;
    }
    out << report.str();
    return kExitOk;
  });
}

}  // namespace qblotto::tools
