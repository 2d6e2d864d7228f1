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

#ifndef SG_PLAYERS_HPP
#define SG_PLAYERS_HPP

#include <optional>
#include <vector>

#include "sg/game.hpp"

namespace sg {

/// Player types of a game, each list ascending. A dictator, when present,
/// is both a passer and a vetoer, and every other player is a dummy.
struct PlayerClassification {
  std::vector<PlayerId> dummies;
  std::vector<PlayerId> passers;
  std::vector<PlayerId> vetoers;
  std::optional<PlayerId> dictator;
};

/// Players whose removal never turns a winning coalition losing.
/// Linear-time from minimal winning coalitions; weighted and conjunction
/// forms fall back to subset-sum counting or a guarded full table.
std::vector<PlayerId> dummies(const SimpleGame& game,
                              int n_cap = kDefaultEnumCap);

/// Players that win alone: v({i}) = 1.
std::vector<PlayerId> passers(const SimpleGame& game);

/// Players present in every winning coalition.
std::vector<PlayerId> vetoers(const SimpleGame& game);

/// The unique player (if any) with v({i}) = 1 and v(N \ {i}) = 0.
std::optional<PlayerId> dictator(const SimpleGame& game);

PlayerClassification classify_players(const SimpleGame& game,
                                      int n_cap = kDefaultEnumCap);

}  // namespace sg

#endif  // SG_PLAYERS_HPP
