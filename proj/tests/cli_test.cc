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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "csv.h"
#include "scenario_file.h"

namespace qblotto::tools {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qblotto_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
  }

  static std::string Read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  std::string Reference() {
    return Write("reference.json", SerializeScenario(ReferenceScenario()));
  }

  std::string ReferenceWithPhase(std::size_t player, std::size_t field,
                                 double phi) {
    Scenario s = ReferenceScenario();
    s.phases[player - 1][field - 1] = phi;
    return Write("phase.json", SerializeScenario(s));
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

std::vector<std::vector<std::string>> ParseCsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(FormatRealTest, TwelveSignificantDigits) {
  EXPECT_EQ(FormatReal(0.25), "0.25");
  EXPECT_EQ(FormatReal(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(FormatReal(-0.0), "0");
  EXPECT_EQ(FormatReal(0.0334936490538903), "0.0334936490539");
  EXPECT_EQ(FormatReal(1234567.0), "1234567");
  EXPECT_EQ(FormatReal(1e-9), "1e-09");
}

TEST(SweepCsvTest, Header) {
  EXPECT_EQ(SweepCsvHeader(2, 2),
            "param_value,payoff_p1,payoff_p2,m_p1_b1,m_p1_b2,m_p2_b1,m_p2_b2");
}

TEST_F(CliTest, PlayReference) {
  const std::string csv = (dir_ / "table.csv").string();
  GlobalOptions global;
  global.out = csv;
  EXPECT_EQ(RunPlay(Reference(), global, out_, err_), kExitOk) << err_.str();
  const std::string report = out_.str();
  EXPECT_NE(report.find("0.033493649054"), std::string::npos) << report;
  EXPECT_NE(report.find("state dimension: 16"), std::string::npos);
  const auto rows = ParseCsv(Read(csv));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0][0], "player");
  EXPECT_EQ(rows[1][1], "0");
  EXPECT_EQ(rows[2][1], "-1");
  EXPECT_EQ(rows[3][1], "-1");
  EXPECT_EQ(rows[2][3], "0.0334936490539");
}

TEST_F(CliTest, PlayAllocationMismatchExitsTwo) {
  std::string text = SerializeScenario(ReferenceScenario());
  text.replace(text.find("1.0\n"), 3, "2.0");  // enemy 1 now sums to 5
  const std::string path = Write("bad.json", text);
  EXPECT_EQ(RunPlay(path, {}, out_, err_), kExitInput);
  EXPECT_TRUE(out_.str().empty());
  EXPECT_NE(err_.str().find("enemy 1"), std::string::npos) << err_.str();
  EXPECT_NE(err_.str().find("bad.json:"), std::string::npos) << err_.str();
}

TEST_F(CliTest, PlayEvenPlayersExitsThree) {
  const std::string path = Write("even.json", R"({
    "players": [{"total": 4}, {"total": 4}, {"total": 2}, {"total": 1}],
    "battlefields": 2,
    "allocations": [[2, 2], [1, 3], [2, 0], [0, 1]],
    "gamma": 0.5
  })");
  EXPECT_EQ(RunPlay(path, {}, out_, err_), kExitNumerical);
  EXPECT_TRUE(out_.str().empty());
  EXPECT_NE(err_.str().find("entangler-parity"), std::string::npos)
      << err_.str();
  EXPECT_NE(err_.str().find("even"), std::string::npos) << err_.str();
}

TEST_F(CliTest, PlayEpsOverride) {
  GlobalOptions global;
  global.eps = 1e-3;
  EXPECT_EQ(RunPlay(Reference(), global, out_, err_), kExitOk);
  EXPECT_NE(out_.str().find("tie eps: 0.001"), std::string::npos)
      << out_.str();
}

TEST_F(CliTest, SweepFigureOne) {
  const std::string csv = (dir_ / "fig1.csv").string();
  GlobalOptions global;
  global.out = csv;
  SweepOptions sweep;
  sweep.player = 3;
  sweep.battlefield = 1;
  EXPECT_EQ(RunSweepCommand(Reference(), sweep, global, out_, err_), kExitOk)
      << err_.str();
  const auto rows = ParseCsv(Read(csv));
  ASSERT_EQ(rows.size(), 102u);
  ASSERT_EQ(rows[0].size(), 1u + 3u + 6u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double phi = std::stod(rows[i][0]);
    const int enemy2 = std::stoi(rows[i][3]);
    if (i - 1 > 50) {
      EXPECT_GT(enemy2, 0) << "row " << i;
    } else {
      EXPECT_LE(enemy2, 0) << "row " << i << " phi " << phi;
    }
  }
  EXPECT_EQ(rows[1][1] + rows[1][2] + rows[1][3], "0-1-1");
  EXPECT_NE(out_.str().find("transition"), std::string::npos);
  EXPECT_NE(out_.str().find("0.785398"), std::string::npos) << out_.str();
}

TEST_F(CliTest, SweepFigureTwoIsFlatInside) {
  SweepOptions sweep;
  sweep.player = 3;
  sweep.battlefield = 2;
  sweep.from = 0.1;
  sweep.to = 1.5;
  sweep.steps = 15;
  EXPECT_EQ(RunSweepCommand(ReferenceWithPhase(3, 1, 1.0), sweep, {}, out_,
                            err_),
            kExitOk);
  const auto rows = ParseCsv(out_.str());
  ASSERT_EQ(rows.size(), 16u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i][1] + "," + rows[i][2] + "," + rows[i][3], "-2,-2,2");
  }
  EXPECT_NE(err_.str().find("0 payoff transitions"), std::string::npos);
}

TEST_F(CliTest, SweepMinimalSteps) {
  SweepOptions sweep;
  sweep.player = 3;
  sweep.battlefield = 1;
  sweep.steps = 2;
  EXPECT_EQ(RunSweepCommand(Reference(), sweep, {}, out_, err_), kExitOk);
  EXPECT_EQ(ParseCsv(out_.str()).size(), 3u);
}

TEST_F(CliTest, SweepCsvIsDeterministic) {
  const std::string path = Reference();
  SweepOptions sweep;
  sweep.player = 3;
  sweep.battlefield = 1;
  sweep.steps = 37;
  GlobalOptions global;
  std::ostringstream a, b, c, sink;
  EXPECT_EQ(RunSweepCommand(path, sweep, global, a, sink), kExitOk);
  EXPECT_EQ(RunSweepCommand(path, sweep, global, b, sink), kExitOk);
  global.jobs = 3;
  EXPECT_EQ(RunSweepCommand(path, sweep, global, c, sink), kExitOk);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str(), c.str());
  EXPECT_EQ(a.str().find('\r'), std::string::npos);
}

TEST_F(CliTest, SweepDegrees) {
  SweepOptions sweep;
  sweep.player = 3;
  sweep.battlefield = 1;
  sweep.from = 0;
  sweep.to = 90;
  sweep.steps = 3;
  GlobalOptions global;
  global.degrees = true;
  EXPECT_EQ(RunSweepCommand(Reference(), sweep, global, out_, err_), kExitOk);
  const auto rows = ParseCsv(out_.str());
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[2][0], FormatReal(3.14159265358979323846 / 4));
}

TEST_F(CliTest, SweepBadArgumentsExitTwo) {
  const std::string path = Reference();
  SweepOptions sweep;
  sweep.player = 3;
  sweep.battlefield = 1;
  sweep.param = "theta";
  EXPECT_EQ(RunSweepCommand(path, sweep, {}, out_, err_), kExitInput);
  sweep.param = "phi";
  sweep.player = 9;
  EXPECT_EQ(RunSweepCommand(path, sweep, {}, out_, err_), kExitInput);
  sweep.player = 3;
  sweep.steps = 1;
  EXPECT_EQ(RunSweepCommand(path, sweep, {}, out_, err_), kExitInput);
  sweep.steps = 5;
  sweep.param = "gamma";
  sweep.to = 3.0;
  EXPECT_EQ(RunSweepCommand(path, sweep, {}, out_, err_), kExitInput);
  EXPECT_TRUE(out_.str().empty());
}

TEST_F(CliTest, VerifyPasses) {
  EXPECT_EQ(RunVerify({}, {}, out_, err_), kExitOk) << err_.str();
  EXPECT_EQ(out_.str().find("FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifyWithoutTieToleranceFails) {
  GlobalOptions global;
  global.eps = 0.0;
  EXPECT_EQ(RunVerify({}, global, out_, err_), kExitCheckFailed);
  EXPECT_TRUE(out_.str().empty());
  EXPECT_NE(err_.str().find("FAIL classical correspondence"),
            std::string::npos)
      << err_.str();
  EXPECT_NE(err_.str().find("failure manifest"), std::string::npos);
}

TEST_F(CliTest, VerifyWithLiteralSumFailsReferencePayoffs) {
  VerifyOptions verify;
  verify.summation = PayoffSummation::kSkipMatchingIndex;
  EXPECT_EQ(RunVerify(verify, {}, out_, err_), kExitCheckFailed);
  EXPECT_NE(err_.str().find("FAIL reference payoffs"), std::string::npos);
  EXPECT_NE(err_.str().find("(0, 0, -1)"), std::string::npos) << err_.str();
}

TEST_F(CliTest, OracleReference) {
  EXPECT_EQ(RunOracle(Reference(), {}, out_, err_), kExitOk);
  EXPECT_EQ(out_.str(),
            "classical: (0, -1, -1)\nquantum:   (0, -1, -1)\nPASS\n");
}

TEST_F(CliTest, OracleRandomClassicalScenarios) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    const std::string path = Write(
        "random.json", SerializeScenario(RandomClassicalScenario(rng, 3, 3)));
    std::ostringstream out, err;
    EXPECT_EQ(RunOracle(path, {}, out, err), kExitOk) << err.str();
  }
}

TEST_F(CliTest, OracleRejectsPhases) {
  EXPECT_EQ(RunOracle(ReferenceWithPhase(3, 1, 0.3), {}, out_, err_),
            kExitInput);
  EXPECT_TRUE(out_.str().empty());
  EXPECT_NE(err_.str().find("phase"), std::string::npos);
}

// End-to-end exit codes through the real executable.
int RunBinary(const std::string& args) {
  const std::string command =
      std::string(QBLOTTO_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string ref = Reference();
  EXPECT_EQ(RunBinary("play " + ref), 0);
  EXPECT_EQ(RunBinary("--eps 1e-6 play " + ref), 0);
  EXPECT_EQ(RunBinary("play " + ref + " --eps 1e-6 --jobs 2"), 0);
  EXPECT_EQ(RunBinary("oracle " + ref), 0);
  EXPECT_EQ(RunBinary("verify"), 0);
  EXPECT_EQ(RunBinary("verify --eps 0"), 1);
  EXPECT_EQ(RunBinary("verify --debug-skip-matching-index"), 1);
  EXPECT_EQ(RunBinary("play /nonexistent.json"), 2);
  EXPECT_EQ(RunBinary("play " + ref + " --bogus"), 2);
  EXPECT_EQ(RunBinary(""), 2);
  EXPECT_EQ(RunBinary("--help"), 0);
  EXPECT_EQ(RunBinary("sweep " + ref + " --player 3 --battlefield 1 "
                      "--from 0 --to 90 --steps 5 --degrees --out " +
                      (dir_ / "s.csv").string()),
            0);
  EXPECT_EQ(Read((dir_ / "s.csv").string()).substr(0, 12), "param_value,");
}

}  // namespace
}  // namespace qblotto::tools
