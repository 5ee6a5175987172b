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

#include "scenario_file.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qblotto/classical.h"
#include "qblotto/error.h"

namespace qblotto::tools {

namespace {

using nlohmann::json;

const std::set<std::string, std::less<>> kTopLevelKeys = {
    "players",      "battlefields", "allocations",
    "phases",       "gamma",        "sign_pattern",
    "eps",          "allow_uniform_sign_pattern"};
const std::set<std::string, std::less<>> kPlayerKeys = {"name", "total"};

std::string EscapePointerToken(std::string_view token) {
  std::string out;
  for (char c : token) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

// Records the byte offset at which every value of a well-formed JSON text
// starts, keyed by JSON pointer.
class JsonLocator {
 public:
  explicit JsonLocator(std::string_view text) : text_(text) {
    std::size_t pos = 0;
    ScanValue(pos, "");
  }

  // Offset of the deepest recorded prefix of `pointer`.
  std::size_t Offset(std::string pointer) const {
    while (true) {
      if (auto it = offsets_.find(pointer); it != offsets_.end()) {
        return it->second;
      }
      if (pointer.empty()) return 0;
      pointer.erase(pointer.rfind('/'));
    }
  }

 private:
  void SkipSpace(std::size_t& pos) const {
    while (pos < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos]))) {
      ++pos;
    }
  }

  std::string ScanString(std::size_t& pos) const {
    std::string out;
    ++pos;  // opening quote
    while (pos < text_.size() && text_[pos] != '"') {
      if (text_[pos] == '\\' && pos + 1 < text_.size()) {
        out += text_[pos + 1];
        pos += 2;
      } else {
        out += text_[pos++];
      }
    }
    ++pos;  // closing quote
    return out;
  }

  void ScanValue(std::size_t& pos, const std::string& pointer) {
    SkipSpace(pos);
    if (pos >= text_.size()) return;
    offsets_.emplace(pointer, pos);
    const char c = text_[pos];
    if (c == '{') {
      ++pos;
      SkipSpace(pos);
      if (pos < text_.size() && text_[pos] == '}') {
        ++pos;
        return;
      }
      while (pos < text_.size()) {
        SkipSpace(pos);
        const std::size_t key_pos = pos;
        const std::string child = pointer + "/" + EscapePointerToken(
                                                      ScanString(pos));
        SkipSpace(pos);
        ++pos;  // ':'
        ScanValue(pos, child);
        // Anchor object members at their key rather than their value.
        offsets_[child] = key_pos;
        SkipSpace(pos);
        if (pos < text_.size() && text_[pos] == ',') {
          ++pos;
          continue;
        }
        ++pos;  // '}'
        return;
      }
    } else if (c == '[') {
      ++pos;
      SkipSpace(pos);
      if (pos < text_.size() && text_[pos] == ']') {
        ++pos;
        return;
      }
      for (std::size_t index = 0; pos < text_.size(); ++index) {
        ScanValue(pos, pointer + "/" + std::to_string(index));
        SkipSpace(pos);
        if (pos < text_.size() && text_[pos] == ',') {
          ++pos;
          continue;
        }
        ++pos;  // ']'
        return;
      }
    } else if (c == '"') {
      ScanString(pos);
    } else {
      while (pos < text_.size() && text_[pos] != ',' && text_[pos] != '}' &&
             text_[pos] != ']' &&
             !std::isspace(static_cast<unsigned char>(text_[pos]))) {
        ++pos;
      }
    }
  }

  std::string_view text_;
  std::map<std::string, std::size_t> offsets_;
};

class Loader {
 public:
  Loader(std::string_view text, std::string source)
      : text_(text), source_(std::move(source)) {}

  LoadedScenario Load(const LoadOptions& options) {
    json root;
    try {
      root = json::parse(text_);
    } catch (const json::parse_error& e) {
      throw ErrorAtOffset(e.byte > 0 ? e.byte - 1 : 0,
                          std::string("invalid JSON: ") + e.what());
    }
    locator_.emplace(text_);

    if (!root.is_object()) Fail("", "scenario must be a JSON object");
    for (const auto& [key, value] : root.items()) {
      if (!kTopLevelKeys.contains(key)) {
        Fail("/" + EscapePointerToken(key), "unknown key \"" + key + "\"");
      }
    }
    for (const char* key : {"players", "battlefields", "allocations", "gamma"}) {
      if (!root.contains(key)) {
        Fail("", std::string("missing required key \"") + key + "\"");
      }
    }

    Scenario scenario;
    ReadPlayers(root["players"], scenario);
    const std::size_t n = ReadBattlefields(root["battlefields"]);
    scenario.allocations =
        ReadGrid(root["allocations"], "/allocations", scenario, n);
    if (root.contains("phases")) {
      scenario.phases = ReadGrid(root["phases"], "/phases", scenario, n);
    }
    scenario.gamma = ReadNumber(root["gamma"], "/gamma");
    if (root.contains("sign_pattern")) {
      ReadSignPattern(root["sign_pattern"], scenario, n);
    }
    if (root.contains("eps")) {
      scenario.eps = ReadNumber(root["eps"], "/eps");
      if (scenario.eps < 0.0) Fail("/eps", "eps must be non-negative");
    }
    if (root.contains("allow_uniform_sign_pattern")) {
      const json& flag = root["allow_uniform_sign_pattern"];
      if (!flag.is_boolean()) {
        Fail("/allow_uniform_sign_pattern", "expected true or false");
      }
      scenario.allow_uniform_sign_pattern = flag.get<bool>();
    }

    if (options.degrees) {
      scenario.gamma = DegreesToRadians(scenario.gamma);
      for (auto& row : scenario.phases) {
        for (double& phi : row) phi = DegreesToRadians(phi);
      }
    }
    if (!(scenario.gamma >= 0.0 && scenario.gamma <= kPi / 2)) {
      Fail("/gamma", "gamma must lie in [0, pi/2] radians");
    }
    CheckAllocations(scenario);

    LoadedScenario loaded;
    try {
      loaded.notices = NormalizeScenario(scenario);
    } catch (const Error& e) {
      Fail("", e.what());
    }
    loaded.scenario = std::move(scenario);
    return loaded;
  }

 private:
  ScenarioFileError ErrorAtOffset(std::size_t offset,
                                  const std::string& message) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return ScenarioFileError(source_, line, column, message);
  }

  [[noreturn]] void Fail(const std::string& pointer,
                         const std::string& message) const {
    throw ErrorAtOffset(locator_ ? locator_->Offset(pointer) : 0, message);
  }

  double ReadNumber(const json& value, const std::string& pointer) const {
    if (!value.is_number()) Fail(pointer, "expected a number");
    const double x = value.get<double>();
    if (!std::isfinite(x)) Fail(pointer, "expected a finite number");
    return x;
  }

  void ReadPlayers(const json& players, Scenario& scenario) const {
    if (!players.is_array()) Fail("/players", "expected an array of players");
    for (std::size_t j = 0; j < players.size(); ++j) {
      const std::string pointer = "/players/" + std::to_string(j);
      const json& player = players[j];
      if (!player.is_object()) {
        Fail(pointer, "expected an object with \"name\" and \"total\"");
      }
      for (const auto& [key, value] : player.items()) {
        if (!kPlayerKeys.contains(key)) {
          Fail(pointer + "/" + EscapePointerToken(key),
               "unknown key \"" + key + "\" in player " +
                   std::to_string(j + 1));
        }
      }
      if (!player.contains("total")) {
        Fail(pointer, "player " + std::to_string(j + 1) + " has no \"total\"");
      }
      std::string name = j == 0 ? "Blotto" : "enemy " + std::to_string(j);
      if (player.contains("name")) {
        if (!player["name"].is_string()) {
          Fail(pointer + "/name", "expected a string");
        }
        name = player["name"].get<std::string>();
      }
      scenario.player_names.push_back(std::move(name));
      scenario.totals.push_back(ReadNumber(player["total"], pointer + "/total"));
    }
    if (scenario.totals.size() < 2) {
      Fail("/players", "a game needs at least 2 players");
    }
    if (!(scenario.totals.front() > 0.0)) {
      Fail("/players/0/total", "Blotto (player 1) needs a positive total");
    }
    for (std::size_t j = 0; j < scenario.totals.size(); ++j) {
      const std::string pointer = "/players/" + std::to_string(j) + "/total";
      if (scenario.totals[j] < 0.0) {
        Fail(pointer, PlayerLabel(scenario, j) + " has a negative total");
      }
      if (scenario.totals[j] > scenario.totals.front()) {
        Fail(pointer, PlayerLabel(scenario, j) +
                          " has more soldiers than Blotto (player 1)");
      }
    }
  }

  std::size_t ReadBattlefields(const json& value) const {
    if (!value.is_number_integer() || value.get<long long>() < 1) {
      Fail("/battlefields", "expected a positive integer");
    }
    return value.get<std::size_t>();
  }

  std::vector<std::vector<double>> ReadGrid(const json& grid,
                                            const std::string& pointer,
                                            const Scenario& scenario,
                                            std::size_t n) const {
    const std::size_t num_players = scenario.totals.size();
    if (!grid.is_array() || grid.size() != num_players) {
      Fail(pointer, "expected an array of " + std::to_string(num_players) +
                        " rows, one per player");
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t j = 0; j < num_players; ++j) {
      const std::string row_pointer = pointer + "/" + std::to_string(j);
      if (!grid[j].is_array() || grid[j].size() != n) {
        Fail(row_pointer, PlayerLabel(scenario, j) + ": expected " +
                              std::to_string(n) + " values, one per " +
                              "battlefield");
      }
      std::vector<double> row;
      for (std::size_t k = 0; k < n; ++k) {
        row.push_back(
            ReadNumber(grid[j][k], row_pointer + "/" + std::to_string(k)));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  void ReadSignPattern(const json& pattern, Scenario& scenario,
                       std::size_t n) const {
    if (!pattern.is_array() || pattern.size() != n) {
      Fail("/sign_pattern",
           "expected " + std::to_string(n) + " entries of +1 or -1");
    }
    for (std::size_t k = 0; k < n; ++k) {
      const json& s = pattern[k];
      if (!s.is_number_integer() ||
          (s.get<long long>() != 1 && s.get<long long>() != -1)) {
        Fail("/sign_pattern/" + std::to_string(k), "expected +1 or -1");
      }
      scenario.sign_pattern.push_back(static_cast<int>(s.get<long long>()));
    }
  }

  void CheckAllocations(const Scenario& scenario) const {
    for (std::size_t j = 0; j < scenario.num_players(); ++j) {
      if (auto violation = ValidateAllocation(
              scenario.allocations[j], scenario.totals[j], scenario.eps)) {
        std::string pointer = "/allocations/" + std::to_string(j);
        if (violation->battlefield > 0) {
          pointer += "/" + std::to_string(violation->battlefield - 1);
        }
        Fail(pointer, PlayerLabel(scenario, j) + ": " + violation->Describe());
      }
    }
  }

  static std::string PlayerLabel(const Scenario& scenario, std::size_t j) {
    return "player " + std::to_string(j + 1) + " (" +
           scenario.player_names[j] + ")";
  }

  std::string_view text_;
  std::string source_;
  std::optional<JsonLocator> locator_;
};

}  // namespace

ScenarioFileError::ScenarioFileError(std::string source, std::size_t line,
                                     std::size_t column,
                                     const std::string& message)
    : std::runtime_error(
          line == 0 ? source + ": " + message
                    : source + ":" + std::to_string(line) + ":" +
                          std::to_string(column) + ": " + message),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

LoadedScenario ParseScenario(std::string_view text, const std::string& source,
                             const LoadOptions& options) {
  return Loader(text, source).Load(options);
}

LoadedScenario LoadScenarioFile(const std::string& path,
                                const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioFileError(path, 0, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseScenario(buffer.str(), path, options);
}

std::string SerializeScenario(const Scenario& scenario) {
  nlohmann::ordered_json root;
  root["players"] = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < scenario.num_players(); ++j) {
    nlohmann::ordered_json player;
    player["name"] = j < scenario.player_names.size()
                         ? scenario.player_names[j]
                         : std::string();
    player["total"] = scenario.totals[j];
    root["players"].push_back(std::move(player));
  }
  root["battlefields"] = scenario.num_battlefields();
  root["allocations"] = scenario.allocations;
  if (!scenario.phases.empty()) root["phases"] = scenario.phases;
  root["gamma"] = scenario.gamma;
  if (!scenario.sign_pattern.empty()) {
    root["sign_pattern"] = scenario.sign_pattern;
  }
  root["eps"] = scenario.eps;
  root["allow_uniform_sign_pattern"] = scenario.allow_uniform_sign_pattern;
  return root.dump(2) + "\n";
}

}  // namespace qblotto::tools
