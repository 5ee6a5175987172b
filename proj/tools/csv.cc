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

#include "csv.h"

#include <charconv>
#include <string>

namespace qblotto::tools {

std::string FormatReal(double value) {
  // std::to_chars ignores the global locale.
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, 12);
  std::string text(buffer, result.ptr);
  if (text == "-0") text = "0";
  return text;
}

std::string SweepCsvHeader(std::size_t num_players,
                           std::size_t num_battlefields) {
  std::string header = "param_value";
  for (std::size_t j = 1; j <= num_players; ++j) {
    header += ",payoff_p" + std::to_string(j);
  }
  for (std::size_t j = 1; j <= num_players; ++j) {
    for (std::size_t k = 1; k <= num_battlefields; ++k) {
      header += ",m_p" + std::to_string(j) + "_b" + std::to_string(k);
    }
  }
  return header;
}

void WriteSweepCsv(std::ostream& out, const SweepResult& result,
                   std::size_t num_players, std::size_t num_battlefields) {
  out << SweepCsvHeader(num_players, num_battlefields) << '\n';
  for (const auto& point : result.points) {
    out << FormatReal(point.value);
    for (int payoff : point.payoffs) out << ',' << payoff;
    for (const auto& row : point.m) {
      for (double m : row) out << ',' << FormatReal(m);
    }
    out << '\n';
  }
}

void WriteTableCsv(std::ostream& out, const MeasurementTable& table) {
  const std::size_t n = table.num_battlefields();
  out << "player,payoff";
  for (std::size_t k = 1; k <= n; ++k) out << ",m_b" << k;
  for (std::size_t k = 1; k <= n; ++k) out << ",m_max_b" << k;
  out << '\n';
  for (std::size_t j = 0; j < table.num_players(); ++j) {
    out << j + 1 << ',' << table.payoffs.at(j);
    for (double m : table.m[j]) out << ',' << FormatReal(m);
    for (double m : table.m_max[j]) out << ',' << FormatReal(m);
    out << '\n';
  }
}

}  // namespace qblotto::tools
