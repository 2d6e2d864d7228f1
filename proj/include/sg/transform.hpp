// Copyright 2026 The sgames Authors
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

#ifndef SG_TRANSFORM_HPP
#define SG_TRANSFORM_HPP

#include <cstddef>
#include <vector>

#include "sg/game.hpp"

namespace sg {

// Result budget for enumerating minimal winning coalitions of a weighted
// game directly (no 2^n table involved).
inline constexpr std::size_t kDefaultMwcBudget = 4'000'000;

/// Minimal winning coalitions of an explicitly listed winning set: the
/// members that lose any single player's removal.
MinimalWinningForm minimize(const ExtensiveWinningForm& form);

/// Upward closure of an antichain: every superset of a minimal winning
/// coalition. Exponential output; requires players <= n_cap.
ExtensiveWinningForm expand(const MinimalWinningForm& form,
                            int n_cap = kDefaultEnumCap);

/// The dual game: S wins in the dual exactly when N \ S loses in the
/// original (the blocking coalitions). Requires players <= n_cap.
ExtensiveWinningForm dual_game(const SimpleGame& game,
                               int n_cap = kDefaultEnumCap);

/// The symmetric game [k; 1, ..., 1] on n players. Requires 1 <= k <= n.
WeightedForm k_out_of_n(int k, int n);

/// True when every minimal winning coalition's weight equals the quota
/// exactly. Requires players <= n_cap.
bool is_homogeneous(const WeightedForm& game, int n_cap = kDefaultEnumCap);

/// Minimal winning coalitions of a weighted game by branch-and-bound over
/// players in descending weight order; never materializes the winning
/// set. Sorted by mask. Throws BudgetError past max_coalitions results.
std::vector<Coalition> minimal_winning_coalitions(
    const WeightedForm& game, std::size_t max_coalitions = kDefaultMwcBudget);

/// The game's minimal winning form, routed per representation: identity,
/// minimize, weighted branch-and-bound, or a full table for conjunctions.
MinimalWinningForm minimal_form_of(const SimpleGame& game,
                                   int n_cap = kDefaultEnumCap,
                                   std::size_t max_coalitions = kDefaultMwcBudget);

}  // namespace sg

#endif  // SG_TRANSFORM_HPP
