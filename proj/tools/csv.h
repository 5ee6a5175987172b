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

#ifndef QBLOTTO_TOOLS_CSV_H_
#define QBLOTTO_TOOLS_CSV_H_

#include <cstddef>
#include <ostream>
#include <string>

#include "qblotto/engine.h"
#include "qblotto/sweep.h"

namespace qblotto::tools {

// 12 significant digits, '.' decimal point, locale independent.
std::string FormatReal(double value);

// param_value,payoff_p1..payoff_pN,m_p1_b1..m_pN_bn
std::string SweepCsvHeader(std::size_t num_players,
                           std::size_t num_battlefields);
// Header plus one row per sweep point; LF line endings.
void WriteSweepCsv(std::ostream& out, const SweepResult& result,
                   std::size_t num_players, std::size_t num_battlefields);

// player,payoff,m_b1..m_bn,m_max_b1..m_max_bn
void WriteTableCsv(std::ostream& out, const MeasurementTable& table);

}  // namespace qblotto::tools

#endif  // QBLOTTO_TOOLS_CSV_H_
