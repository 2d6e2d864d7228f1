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

#include "sg/players.hpp"

#include <bit>
#include <cstdint>

#include "sg/indices.hpp"
#include "sg/transform.hpp"

namespace sg {

namespace {

std::vector<PlayerId> players_not_in(std::uint64_t occupied, int n) {
  std::vector<PlayerId> out;
  for (PlayerId p = 1; p <= n; ++p)
    if (!((occupied >> (p - 1)) & 1u)) out.push_back(p);
  return out;
}

std::vector<PlayerId> players_in(std::uint64_t mask, int n) {
  std::vector<PlayerId> out;
  for (PlayerId p = 1; p <= n; ++p)
    if ((mask >> (p - 1)) & 1u) out.push_back(p);
  return out;
}

// A player is a dummy exactly when it is never critical.
std::vector<PlayerId> dummies_from_table(const WinTable& table) {
  const int n = table.players();
  std::vector<char> critical(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    if (!table.test(mask)) continue;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const int bit = std::countr_zero(m);
      if (!table.test(mask ^ (std::uint64_t{1} << bit)))
        critical[static_cast<std::size_t>(bit) + 1] = 1;
    }
  }
  std::vector<PlayerId> out;
  for (PlayerId p = 1; p <= n; ++p)
    if (!critical[static_cast<std::size_t>(p)]) out.push_back(p);
  return out;
}

}  // namespace

std::vector<PlayerId> dummies(const SimpleGame& game, int n_cap) {
  const int n = game.players();
  switch (game.form()) {
    case SimpleGame::Form::kMinimalWinning: {
      // Dummy = absent from every minimal winning coalition.
      std::uint64_t occupied = 0;
      for (Coalition s : game.as_minimal().minimal) occupied |= s.mask();
      return players_not_in(occupied, n);
    }
    case SimpleGame::Form::kWinning: {
      std::uint64_t occupied = 0;
      for (Coalition s : minimize(game.as_winning()).minimal)
        occupied |= s.mask();
      return players_not_in(occupied, n);
    }
    case SimpleGame::Form::kWeighted: {
      const WeightedForm& w = game.as_weighted();
      if (detail::weight_dp_eligible(w)) {
        std::vector<BigInt> eta = detail::banzhaf_values_weight_dp(w);
        std::vector<PlayerId> out;
        for (PlayerId p = 1; p <= n; ++p)
          if (eta[static_cast<std::size_t>(p - 1)] == 0) out.push_back(p);
        return out;
      }
      return dummies_from_table(build_win_table(game, n_cap));
    }
    case SimpleGame::Form::kMultiWeighted:
      return dummies_from_table(build_win_table(game, n_cap));
  }
  return {};
}

std::vector<PlayerId> passers(const SimpleGame& game) {
  const int n = game.players();
  std::vector<PlayerId> out;
  for (PlayerId p = 1; p <= n; ++p)
    if (is_winning(game, Coalition::single(p))) out.push_back(p);
  return out;
}

std::vector<PlayerId> vetoers(const SimpleGame& game) {
  const int n = game.players();
  switch (game.form()) {
    case SimpleGame::Form::kWinning: {
      std::uint64_t common = Coalition::grand(n).mask();
      for (Coalition s : game.as_winning().winning) common &= s.mask();
      return players_in(common, n);
    }
    case SimpleGame::Form::kMinimalWinning: {
      // i sits in every winning coalition iff it sits in every minimal one.
      std::uint64_t common = Coalition::grand(n).mask();
      for (Coalition s : game.as_minimal().minimal) common &= s.mask();
      return players_in(common, n);
    }
    case SimpleGame::Form::kWeighted: {
      const WeightedForm& w = game.as_weighted();
      const BigInt total = w.total_weight();
      std::vector<PlayerId> out;
      for (PlayerId p = 1; p <= n; ++p)
        if (total - w.weights[static_cast<std::size_t>(p - 1)] < w.quota)
          out.push_back(p);
      return out;
    }
    case SimpleGame::Form::kMultiWeighted: {
      std::vector<PlayerId> out;
      const Coalition grand = Coalition::grand(n);
      for (PlayerId p = 1; p <= n; ++p)
        if (!is_winning(game, grand.without(p))) out.push_back(p);
      return out;
    }
  }
  return {};
}

std::optional<PlayerId> dictator(const SimpleGame& game) {
  const int n = game.players();
  const Coalition grand = Coalition::grand(n);
  for (PlayerId p = 1; p <= n; ++p) {
    if (is_winning(game, Coalition::single(p)) &&
        !is_winning(game, grand.without(p)))
      return p;
  }
  return std::nullopt;
}

PlayerClassification classify_players(const SimpleGame& game, int n_cap) {
  PlayerClassification out;
  out.dummies = dummies(game, n_cap);
  out.passers = passers(game);
  out.vetoers = vetoers(game);
  out.dictator = dictator(game);
  return out;
}

}  // namespace sg
