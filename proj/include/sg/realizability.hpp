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

#ifndef SG_REALIZABILITY_HPP
#define SG_REALIZABILITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sg/game.hpp"

namespace sg {

/// Outcome of the weighted-representability test. A witness, when
/// present, generates exactly the same winning set as the input. A
/// certificate (an incomparable player pair) is attached when the game is
/// not even linear, which already rules out a weighted representation.
struct RealizabilityResult {
  bool realizable = false;
  std::optional<WeightedForm> witness;
  std::optional<std::pair<PlayerId, PlayerId>> certificate;
};

/// Losing coalitions that become winning under any single-player
/// extension. Together with the minimal winning coalitions these are the
/// binding rows of the separating inequality system.
std::vector<Coalition> maximal_losing(const SimpleGame& game,
                                      int n_cap = kDefaultEnumCap);

/// Decides whether some weighted game has the same winning set, by exact
/// rational Fourier-Motzkin elimination over weights and quota: minimal
/// winning coalitions must reach the quota, maximal losing ones must stay
/// a full unit below (scale-invariant normalization of strictness).
/// Requires players <= n_cap.
RealizabilityResult is_wvg_realizable(const SimpleGame& game,
                                      int n_cap = kDefaultEnumCap);

/// Smallest-max-weight integer representation with weights bounded by
/// weight_bound, or nullopt. Exhaustive over weight vectors, pruned by
/// the strict desirability relations; any hit reproduces the winning set
/// exactly by construction.
std::optional<WeightedForm> integer_wvg_search(const SimpleGame& game,
                                               int weight_bound = 8,
                                               int n_cap = kDefaultEnumCap);

}  // namespace sg

#endif  // SG_REALIZABILITY_HPP
