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

// Scenario files: UTF-8 JSON with a strict schema.
//
//   {
//     "players": [{"name": "Blotto", "total": 6}, ...],
//     "battlefields": 2,
//     "allocations": [[3, 3], [3, 1], [0, 3]],
//     "phases": [[0, 0], [0, 0], [0, 0]],        optional, default 0
//     "gamma": 1.5707963267948966,
//     "sign_pattern": [1, -1],                    optional, last flipped
//     "eps": 1e-9,                                optional
//     "allow_uniform_sign_pattern": false         optional
//   }
//
// Unknown keys are rejected. Angles are radians unless the loader is told
// they are degrees.

#ifndef QBLOTTO_TOOLS_SCENARIO_FILE_H_
#define QBLOTTO_TOOLS_SCENARIO_FILE_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qblotto/scenario.h"

namespace qblotto::tools {

// Input problem anchored to a position in the source text. Line 0 means the
// text could not be read at all.
class ScenarioFileError : public std::runtime_error {
 public:
  ScenarioFileError(std::string source, std::size_t line, std::size_t column,
                    const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

// Dividing first keeps 90 and 45 degrees exactly at pi/2 and pi/4.
inline double DegreesToRadians(double degrees) {
  return degrees / 180.0 * kPi;
}

struct LoadOptions {
  bool degrees = false;
};

struct LoadedScenario {
  Scenario scenario;  // already normalized
  std::vector<std::string> notices;
};

// `source` names the text in error messages (usually the file path).
LoadedScenario ParseScenario(std::string_view text, const std::string& source,
                             const LoadOptions& options = {});
LoadedScenario LoadScenarioFile(const std::string& path,
                                const LoadOptions& options = {});

// Canonical serialization. ParseScenario(SerializeScenario(s)) reproduces a
// normalized s exactly.
std::string SerializeScenario(const Scenario& scenario);

}  // namespace qblotto::tools

#endif  // QBLOTTO_TOOLS_SCENARIO_FILE_H_
