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

#include "sg/transform.hpp"

#include <algorithm>
#include <numeric>

#include "sg/errors.hpp"

namespace sg {

namespace {

// Minimal = winning and every single removal loses; with an upward-closed
// winning set "loses" is just absence from the list.
std::vector<Coalition> minimal_of_sorted(const std::vector<Coalition>& winning,
                                         int players) {
  std::vector<Coalition> out;
  for (Coalition s : winning) {
    bool minimal = !s.empty();
    for (PlayerId p : s.members()) {
      if (std::binary_search(winning.begin(), winning.end(), s.without(p))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  (void)players;
  return out;
}

std::vector<Coalition> minimal_from_table(const WinTable& table) {
  std::vector<Coalition> out;
  const int n = table.players();
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    if (!table.test(mask)) continue;
    bool minimal = true;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      if (table.test(mask ^ (m & (~m + 1)))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(Coalition::from_mask(mask));
  }
  return out;
}

// Players in descending weight order; zero weights never appear in a
// minimal winning coalition and are dropped up front. A set recorded the
// moment its sum first reaches the quota is automatically minimal: the
// lightest member is the one just added, and the sum without it was still
// below the quota.
template <typename Weight>
struct MwcSearch {
  const Weight& quota;
  const std::vector<Weight>& weights;     // descending
  const std::vector<int>& player_bits;    // original bit per position
  std::vector<Weight> suffix;             // suffix[i] = sum of weights[i..]
  std::size_t max_results;
  std::vector<std::uint64_t>* out;

  void run() {
    const std::size_t m = weights.size();
    suffix.assign(m + 1, Weight{});
    for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] + weights[i];
    Weight sum{};
    dfs(0, 0, sum);
  }

  void dfs(std::size_t idx, std::uint64_t mask, Weight& sum) {
    if (sum + suffix[idx] < quota) return;  // cannot reach the quota
    if (idx == weights.size()) return;
    // Take player idx.
    sum += weights[idx];
    const std::uint64_t taken = mask | (std::uint64_t{1} << player_bits[idx]);
    if (sum >= quota) {
      if (out->size() >= max_results)
        throw BudgetError(
            "minimal_winning_coalitions: result budget exhausted");
      out->push_back(taken);
    } else {
      dfs(idx + 1, taken, sum);
    }
    sum -= weights[idx];
    // Skip player idx.
    dfs(idx + 1, mask, sum);
  }
};

template <typename Weight>
std::vector<Coalition> run_mwc_search(const Weight& quota,
                                      std::vector<Weight> weights,
                                      std::size_t max_results) {
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });
  std::vector<Weight> sorted;
  std::vector<int> bits;
  for (int pos : order) {
    if (weights[pos] <= Weight{}) continue;
    sorted.push_back(weights[pos]);
    bits.push_back(pos);
  }
  std::vector<std::uint64_t> masks;
  MwcSearch<Weight> search{quota, sorted, bits, {}, max_results, &masks};
  search.run();
  std::sort(masks.begin(), masks.end());
  std::vector<Coalition> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(Coalition::from_mask(m));
  return out;
}

}  // namespace

MinimalWinningForm minimize(const ExtensiveWinningForm& form) {
  return MinimalWinningForm(form.players,
                            minimal_of_sorted(form.winning, form.players));
}

ExtensiveWinningForm expand(const MinimalWinningForm& form, int n_cap) {
  detail::require_enum_cap(form.players, n_cap, "expand");
  return ExtensiveWinningForm(form.players,
                              enumerate_winning(SimpleGame(form), n_cap));
}

ExtensiveWinningForm dual_game(const SimpleGame& game, int n_cap) {
  const int n = game.players();
  detail::require_enum_cap(n, n_cap, "dual_game");
  WinTable table = build_win_table(game, n_cap);
  const std::uint64_t full = Coalition::grand(n).mask();
  std::vector<Coalition> blocking;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < end; ++mask)
    if (!table.test(full & ~mask)) blocking.push_back(Coalition::from_mask(mask));
  return ExtensiveWinningForm(n, std::move(blocking));
}

WeightedForm k_out_of_n(int k, int n) {
  if (n < 1 || n > kMaxPlayers)
    throw InvalidInputError("k_out_of_n: n must be in [1, 64]");
  if (k < 1 || k > n)
    throw InvalidInputError("k_out_of_n: k must be in [1, n]");
  return WeightedForm(BigInt(k),
                      std::vector<BigInt>(static_cast<std::size_t>(n), 1));
}

bool is_homogeneous(const WeightedForm& game, int n_cap) {
  detail::require_enum_cap(game.players(), n_cap, "is_homogeneous");
  for (Coalition s : minimal_winning_coalitions(game))
    if (game.weight_of(s) != game.quota) return false;
  return true;
}

std::vector<Coalition> minimal_winning_coalitions(const WeightedForm& game,
                                                  std::size_t max_coalitions) {
  if (auto small = detail::small_weights(game))
    return run_mwc_search<std::uint64_t>(small->quota, small->weights,
                                         max_coalitions);
  return run_mwc_search<BigInt>(game.quota, game.weights, max_coalitions);
}

MinimalWinningForm minimal_form_of(const SimpleGame& game, int n_cap,
                                   std::size_t max_coalitions) {
  switch (game.form()) {
    case SimpleGame::Form::kMinimalWinning:
      return game.as_minimal();
    case SimpleGame::Form::kWinning:
      return minimize(game.as_winning());
    case SimpleGame::Form::kWeighted:
      return MinimalWinningForm(
          game.players(),
          minimal_winning_coalitions(game.as_weighted(), max_coalitions));
    case SimpleGame::Form::kMultiWeighted: {
      detail::require_enum_cap(game.players(), n_cap, "minimal_form_of");
      WinTable table = build_win_table(game, n_cap);
      return MinimalWinningForm(game.players(), minimal_from_table(table));
    }
  }
  throw InvalidInputError("minimal_form_of: unknown representation");
}

}  // namespace sg
