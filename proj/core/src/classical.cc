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

#include "qblotto/classical.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "qblotto/error.h"

namespace qblotto {

std::string AllocationViolation::Describe() const {
  std::ostringstream out;
  out.precision(12);
  switch (kind) {
    case Kind::kNegativeEntry:
      out << "battlefield " << battlefield << " has negative troops "
          << amount;
      break;
    case Kind::kBudgetMismatch:
      out << "allocation sums to " << sum << " but the player's total is "
          << total;
      break;
  }
  return out.str();
}

std::optional<AllocationViolation> ValidateAllocation(
    std::span<const double> troops, double total, double eps) {
  for (std::size_t k = 0; k < troops.size(); ++k) {
    if (!(troops[k] >= 0.0)) {
      return AllocationViolation{AllocationViolation::Kind::kNegativeEntry,
                                 k + 1, troops[k]};
    }
  }
  const double sum = std::accumulate(troops.begin(), troops.end(), 0.0);
  if (!(std::abs(sum - total) <= eps)) {
    return AllocationViolation{AllocationViolation::Kind::kBudgetMismatch, 0,
                               sum - total, sum, total};
  }
  return std::nullopt;
}

int SignWithTolerance(double x, double eps) {
  if (std::abs(x) <= eps) return 0;
  return x > 0.0 ? 1 : -1;
}

PlayerRoster::PlayerRoster(std::vector<double> totals)
    : totals_(std::move(totals)) {
  if (totals_.size() < 2) {
    throw Error(ErrorCode::kValidation,
                "a game needs at least 2 players, got " +
                    std::to_string(totals_.size()));
  }
  if (!(totals_.front() > 0.0)) {
    throw Error(ErrorCode::kValidation,
                "Blotto (player 1) must have a positive number of soldiers");
  }
  for (std::size_t j = 0; j < totals_.size(); ++j) {
    if (!(totals_[j] >= 0.0)) {
      throw Error(ErrorCode::kValidation,
                  "player " + std::to_string(j + 1) +
                      " has a negative soldier total");
    }
    if (totals_[j] > totals_.front()) {
      throw Error(ErrorCode::kValidation,
                  "player " + std::to_string(j + 1) +
                      " has more soldiers than Blotto (player 1)");
    }
  }
}

std::vector<int> ClassicalPayoffs(std::span<const Allocation> allocations,
                                  const PlayerRoster& roster, double eps) {
  const std::size_t num_players = roster.num_players();
  if (allocations.size() != num_players) {
    throw Error(ErrorCode::kValidation,
                "expected " + std::to_string(num_players) +
                    " allocations, got " + std::to_string(allocations.size()));
  }
  const std::size_t num_battlefields = allocations.front().size();
  for (std::size_t j = 0; j < num_players; ++j) {
    if (allocations[j].size() != num_battlefields) {
      throw Error(ErrorCode::kValidation,
                  "player " + std::to_string(j + 1) + " allocates over " +
                      std::to_string(allocations[j].size()) +
                      " battlefields, expected " +
                      std::to_string(num_battlefields));
    }
  }

  std::vector<int> payoffs(num_players, 0);
  for (std::size_t j = 0; j < num_players; ++j) {
    for (std::size_t k = 0; k < num_battlefields; ++k) {
      double strongest_rival = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < num_players; ++i) {
        if (i != j) {
          strongest_rival = std::max(strongest_rival, allocations[i][k]);
        }
      }
      payoffs[j] += SignWithTolerance(allocations[j][k] - strongest_rival, eps);
    }
  }
  return payoffs;
}

}  // namespace qblotto
