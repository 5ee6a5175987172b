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

// Continuous multiplayer Colonel Blotto. Player 1 is Blotto; every other
// player is an enemy. A player scores +1 on a battlefield where its troops
// exceed every rival's, 0 on a tie with the strongest rival, -1 otherwise.

#ifndef QBLOTTO_CLASSICAL_H_
#define QBLOTTO_CLASSICAL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qblotto {

// Absolute tie tolerance for payoff comparisons.
inline constexpr double kDefaultTieEps = 1e-9;

// Soldiers per battlefield, one entry per battlefield.
using Allocation = std::vector<double>;

struct AllocationViolation {
  enum class Kind { kNegativeEntry, kBudgetMismatch };
  Kind kind;
  // Offending battlefield (1-based) for kNegativeEntry; 0 otherwise.
  std::size_t battlefield = 0;
  // The negative entry, or (sum - total) for a budget mismatch.
  double amount = 0.0;
  // Set for kBudgetMismatch.
  double sum = 0.0;
  double total = 0.0;

  std::string Describe() const;
};

// Checks non-negativity first, then |sum - total| <= eps.
std::optional<AllocationViolation> ValidateAllocation(
    std::span<const double> troops, double total, double eps = kDefaultTieEps);

// 0 inside [-eps, eps], otherwise the sign of x.
int SignWithTolerance(double x, double eps);

class PlayerRoster {
 public:
  // Throws kValidation unless there are at least two players, Blotto's total
  // is positive, and no enemy has more soldiers than Blotto.
  explicit PlayerRoster(std::vector<double> totals);

  std::size_t num_players() const { return totals_.size(); }
  std::span<const double> totals() const { return totals_; }
  double blotto_total() const { return totals_.front(); }
  // 1-based.
  double total(std::size_t player) const { return totals_.at(player - 1); }

 private:
  std::vector<double> totals_;
};

// Per-player payoff: sum over battlefields of
// SignWithTolerance(own - strongest rival, eps). Allocations are expected to
// have passed ValidateAllocation already. Throws kValidation when the
// allocation count or any allocation length is inconsistent.
std::vector<int> ClassicalPayoffs(std::span<const Allocation> allocations,
                                  const PlayerRoster& roster,
                                  double eps = kDefaultTieEps);

}  // namespace qblotto

#endif  // QBLOTTO_CLASSICAL_H_
