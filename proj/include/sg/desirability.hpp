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

#ifndef SG_DESIRABILITY_HPP
#define SG_DESIRABILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sg/game.hpp"

namespace sg {

/// How player i relates to player j under the desirability relation:
/// i is at least as desirable as j when every winning coalition stays
/// winning after swapping j out for i.
enum class Desirability {
  kStrictlyMore,
  kEquivalent,
  kStrictlyLess,
  kIncomparable,
};

const char* desirability_name(Desirability relation);

/// Per-player counts of minimal winning coalitions bucketed by coalition
/// size: count(k, i) minimal winning coalitions of size k contain i.
class MwcProfile {
 public:
  explicit MwcProfile(int players);

  int players() const { return players_; }

  std::uint64_t count(int size, PlayerId i) const {
    return counts_[column_offset(i) + static_cast<std::size_t>(size) - 1];
  }
  void increment(int size, PlayerId i) {
    ++counts_[column_offset(i) + static_cast<std::size_t>(size) - 1];
  }

  /// Total minimal winning coalitions containing i (the Holler value).
  std::uint64_t total(PlayerId i) const;

  /// Lexicographic comparison of two players' count columns over sizes
  /// 1..n; the column with the larger count at the first difference is
  /// greater. Returns <0, 0, >0.
  int compare_columns(PlayerId i, PlayerId j) const;

 private:
  std::size_t column_offset(PlayerId i) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(players_);
  }

  int players_;
  std::vector<std::uint64_t> counts_;  // column-major per player
};

MwcProfile mwc_profile(const MinimalWinningForm& form);

/// Players partitioned into equivalence classes, most desirable first,
/// ascending player ids inside a class. `strict` marks whether adjacent
/// classes are known strictly ordered (false for the weight-derived
/// ordering, where only at-least-as-desirable is guaranteed).
struct DesirabilityOrdering {
  std::vector<std::vector<PlayerId>> classes;
  bool strict = true;
};

/// "1 > 2 ~ 3" (strict) or "1 >= 2 ~ 3" (boundaries not asserted strict).
std::string format_ordering(const DesirabilityOrdering& ordering);

/// Exact relation between two distinct players. Minimal winning form is
/// handled by coalition shifts; other representations enumerate all
/// coalitions and require players <= n_cap.
Desirability compare_players(const SimpleGame& game, PlayerId i, PlayerId j,
                             int n_cap = kDefaultEnumCap);

/// Strict desirability ordering of a minimal winning form, or nullopt
/// when the game is non-linear (some pair is incomparable).
///
/// Players are sorted by descending lexicographic profile column; on a
/// linear game that order is forced, so it suffices to verify that each
/// adjacent pair satisfies the at-least-as-desirable shift test (failure
/// of any pair proves non-linearity, transitivity covers the rest).
std::optional<DesirabilityOrdering> strict_desirability_ordering(
    const MinimalWinningForm& form);

/// Weight ordering of a weighted game: descending weights, equal weights
/// grouped as equivalent. Boundaries are only at-least-as-desirable;
/// deciding strictness is intractable in general, so `strict` is false.
DesirabilityOrdering weight_desirability_ordering(const WeightedForm& game);

/// Whether every pair of players is comparable. Weighted games are always
/// linear; conjunction forms need a guarded full enumeration.
bool is_linear(const SimpleGame& game, int n_cap = kDefaultEnumCap);

/// Whether no single cross-swap between two winning coalitions can turn
/// both losing. Decided from the definition over all pairs of winning
/// coalitions; requires players <= n_cap.
bool is_swap_robust(const SimpleGame& game, int n_cap = kDefaultEnumCap);

}  // namespace sg

#endif  // SG_DESIRABILITY_HPP
