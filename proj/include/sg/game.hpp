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

#ifndef SG_GAME_HPP
#define SG_GAME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sg/coalition.hpp"
#include "sg/numbers.hpp"

namespace sg {

// Exhaustive operations (anything touching all 2^n coalitions) refuse to
// run beyond this many players unless the caller raises the cap.
inline constexpr int kDefaultEnumCap = 24;
// Inclusion-exclusion counting runs over 2^|Wm| terms; capped separately.
inline constexpr int kDefaultIeCap = 20;

/// A game given by the complete list of winning coalitions.
struct ExtensiveWinningForm {
  int players = 0;
  std::vector<Coalition> winning;  // sorted by mask, duplicate-free

  ExtensiveWinningForm(int players, std::vector<Coalition> winning);
};

/// A game given by its minimal winning coalitions (an antichain).
struct MinimalWinningForm {
  int players = 0;
  std::vector<Coalition> minimal;  // sorted by mask, duplicate-free

  MinimalWinningForm(int players, std::vector<Coalition> minimal);
};

/// [quota; w_1, ..., w_n]: a coalition wins when its weight sum reaches
/// the quota. Weights and quota are exact big integers.
struct WeightedForm {
  BigInt quota;
  std::vector<BigInt> weights;

  WeightedForm(BigInt quota, std::vector<BigInt> weights);

  int players() const { return static_cast<int>(weights.size()); }
  BigInt total_weight() const;
  BigInt weight_of(Coalition s) const;
};

/// Conjunction of weighted games over the same player set: a coalition
/// wins when it wins in every component.
struct MultiWeightedForm {
  std::vector<WeightedForm> components;

  explicit MultiWeightedForm(std::vector<WeightedForm> components);

  int players() const { return components.front().players(); }
};

/// A simple voting game in one of the four supported representations.
/// Values are immutable once built; analysis operations assume the
/// invariants checked by validate().
class SimpleGame {
 public:
  enum class Form { kWinning, kMinimalWinning, kWeighted, kMultiWeighted };

  SimpleGame(ExtensiveWinningForm form);       // NOLINT(runtime/explicit)
  SimpleGame(MinimalWinningForm form);         // NOLINT(runtime/explicit)
  SimpleGame(WeightedForm form);               // NOLINT(runtime/explicit)
  SimpleGame(MultiWeightedForm form);          // NOLINT(runtime/explicit)

  Form form() const;
  int players() const { return players_; }

  // Accessors require the matching representation.
  const ExtensiveWinningForm& as_winning() const;
  const MinimalWinningForm& as_minimal() const;
  const WeightedForm& as_weighted() const;
  const MultiWeightedForm& as_multi() const;

 private:
  std::variant<ExtensiveWinningForm, MinimalWinningForm, WeightedForm,
               MultiWeightedForm>
      repr_;
  int players_ = 0;
};

const char* form_name(SimpleGame::Form form);

/// Violated invariants, empty when the game is a valid simple game.
struct ValidationReport {
  std::vector<std::string> violations;

  bool valid() const { return violations.empty(); }
};

/// Evaluates v(s). Throws InvalidInputError when s references a player
/// beyond the game's player count.
bool is_winning(const SimpleGame& game, Coalition s);

/// Checks the simple-game axioms of the given representation:
/// v(empty) = 0, v(N) = 1, monotonicity / antichain / quota reachability.
ValidationReport validate(const SimpleGame& game);

/// All winning coalitions, sorted by mask. Requires players <= n_cap.
std::vector<Coalition> enumerate_winning(const SimpleGame& game,
                                         int n_cap = kDefaultEnumCap);

/// Dense v() table over all 2^n coalitions, indexed by mask.
class WinTable {
 public:
  explicit WinTable(int players);

  int players() const { return players_; }

  bool test(std::uint64_t mask) const {
    return (bits_[mask >> 6] >> (mask & 63)) & 1u;
  }
  void set(std::uint64_t mask) { bits_[mask >> 6] |= std::uint64_t{1} << (mask & 63); }

  /// Number of winning coalitions in the table.
  std::uint64_t count() const;

 private:
  int players_;
  std::vector<std::uint64_t> bits_;
};

/// Builds the full evaluation table. Requires players <= n_cap.
WinTable build_win_table(const SimpleGame& game, int n_cap = kDefaultEnumCap);

namespace detail {

/// 64-bit mirror of a weighted form for hot loops; absent when any weight
/// or the total weight does not fit.
struct SmallWeights {
  std::uint64_t quota = 0;
  std::vector<std::uint64_t> weights;
};
std::optional<SmallWeights> small_weights(const WeightedForm& game);

void require_players_in_range(const SimpleGame& game, Coalition s);
void require_enum_cap(int players, int n_cap, const char* operation);

}  // namespace detail

}  // namespace sg

#endif  // SG_GAME_HPP
