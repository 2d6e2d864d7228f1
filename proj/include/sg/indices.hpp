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

#ifndef SG_INDICES_HPP
#define SG_INDICES_HPP

#include <cstdint>
#include <vector>

#include "sg/game.hpp"

namespace sg {

// Weighted-game dynamic programming over subset sums is used when the
// total weight stays within this budget (and fits 64 bits).
inline constexpr std::uint64_t kDefaultDpWeightBudget = std::uint64_t{1} << 20;

/// Counting vector of a game: per player the number of winning coalitions
/// containing that player, plus the total number of winning coalitions.
struct ChowParameters {
  std::vector<BigInt> per_player;
  BigInt total;
};

/// Raw Banzhaf values: for each player the number of coalitions in which
/// the player is critical. Explicit winning lists are scanned directly;
/// weighted games use subset-sum counting when the weights allow it;
/// everything else enumerates under n_cap.
std::vector<BigInt> banzhaf_values(const SimpleGame& game,
                                   int n_cap = kDefaultEnumCap);

/// Banzhaf values normalized to sum to 1.
std::vector<BigRat> banzhaf_indices(const SimpleGame& game,
                                    int n_cap = kDefaultEnumCap);

/// Raw Shapley-Shubik values: sum over coalitions where the player is
/// critical of (|S| - 1)! (n - |S|)!. Exact big integers.
std::vector<BigInt> shapley_values(const SimpleGame& game,
                                   int n_cap = kDefaultEnumCap);

/// Shapley-Shubik values divided by n!.
std::vector<BigRat> shapley_indices(const SimpleGame& game,
                                    int n_cap = kDefaultEnumCap);

/// Public good index: per player the share of minimal winning coalitions
/// containing that player. One pass over the minimal form.
std::vector<BigRat> holler_indices(const MinimalWinningForm& form);

/// Deegan-Packel index: average of 1/|S| over the minimal winning
/// coalitions containing the player, divided by their total number.
std::vector<BigRat> deegan_packel_indices(const MinimalWinningForm& form);

/// Exact |W|. Explicit lists are counted directly; other representations
/// enumerate when players <= n_cap; a minimal form with at most ie_cap
/// coalitions falls back to inclusion-exclusion over up-sets. Throws
/// BudgetError when both paths are out of reach.
BigInt count_winning(const SimpleGame& game, int n_cap = kDefaultEnumCap,
                     int ie_cap = kDefaultIeCap);

/// (|W_1|, ..., |W_n|; |W|), same routing as count_winning.
ChowParameters chow_parameters(const SimpleGame& game,
                               int n_cap = kDefaultEnumCap,
                               int ie_cap = kDefaultIeCap);

/// Power of the collectivity to act: |W| / 2^n.
BigRat collectivity_power(const SimpleGame& game, int n_cap = kDefaultEnumCap,
                          int ie_cap = kDefaultIeCap);

namespace detail {

// Both routes are kept callable so they can be checked against each other.
bool weight_dp_eligible(const WeightedForm& game,
                        std::uint64_t budget = kDefaultDpWeightBudget);
std::vector<BigInt> banzhaf_values_weight_dp(const WeightedForm& game);
std::vector<BigInt> shapley_values_weight_dp(const WeightedForm& game);
std::vector<BigInt> banzhaf_values_enumerated(const SimpleGame& game,
                                              int n_cap);
std::vector<BigInt> shapley_values_enumerated(const SimpleGame& game,
                                              int n_cap);
BigInt count_winning_inclusion_exclusion(const MinimalWinningForm& form,
                                         int ie_cap);
ChowParameters chow_inclusion_exclusion(const MinimalWinningForm& form,
                                        int ie_cap);

}  // namespace detail

}  // namespace sg

#endif  // SG_INDICES_HPP
