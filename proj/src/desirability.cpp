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

#include "sg/desirability.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "sg/errors.hpp"
#include "sg/transform.hpp"

namespace sg {

namespace {

void check_pair(const SimpleGame& game, PlayerId i, PlayerId j) {
  const int n = game.players();
  if (i < 1 || i > n || j < 1 || j > n)
    throw InvalidInputError("player index out of range");
  if (i == j) throw InvalidInputError("compare_players needs distinct players");
}

// Subset queries against a minimal winning family. Lists are kept per
// player and ordered by (size, mask) so that small coalitions, the likely
// subsets, are probed first.
class MinimalIndex {
 public:
  explicit MinimalIndex(const MinimalWinningForm& form)
      : players_(form.players), by_player_(static_cast<std::size_t>(players_)) {
    masks_.reserve(form.minimal.size());
    for (Coalition s : form.minimal) masks_.push_back(s.mask());
    mask_set_.insert(masks_.begin(), masks_.end());
    for (std::uint64_t m : masks_) {
      for (std::uint64_t rest = m; rest != 0; rest &= rest - 1)
        by_player_[static_cast<std::size_t>(std::countr_zero(rest))].push_back(m);
    }
    for (auto& list : by_player_) {
      std::sort(list.begin(), list.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
      });
    }
  }

  const std::vector<std::uint64_t>& containing(PlayerId p) const {
    return by_player_[static_cast<std::size_t>(p - 1)];
  }

  /// Whether replacing j by i keeps every minimal winning coalition
  /// through j winning; this is exactly "i at least as desirable as j".
  bool at_least_as_desirable(PlayerId i, PlayerId j) const {
    const std::uint64_t bit_i = std::uint64_t{1} << (i - 1);
    const std::uint64_t bit_j = std::uint64_t{1} << (j - 1);
    for (std::uint64_t s : containing(j)) {
      if (s & bit_i) continue;
      const std::uint64_t shifted = (s ^ bit_j) | bit_i;
      if (mask_set_.count(shifted)) continue;
      // Any other witness must contain i: a witness without i would be a
      // proper subset of s, impossible in an antichain.
      if (!contains_subset_through(i, shifted)) return false;
    }
    return true;
  }

 private:
  bool contains_subset_through(PlayerId i, std::uint64_t mask) const {
    const int size = std::popcount(mask);
    for (std::uint64_t t : containing(i)) {
      if (std::popcount(t) > size) break;  // lists sorted by size
      if ((t & ~mask) == 0) return true;
    }
    return false;
  }

  int players_;
  std::vector<std::uint64_t> masks_;
  std::unordered_set<std::uint64_t> mask_set_;
  std::vector<std::vector<std::uint64_t>> by_player_;
};

Desirability relation_from(bool i_over_j, bool j_over_i) {
  if (i_over_j && j_over_i) return Desirability::kEquivalent;
  if (i_over_j) return Desirability::kStrictlyMore;
  if (j_over_i) return Desirability::kStrictlyLess;
  return Desirability::kIncomparable;
}

// Definition-level comparison over all coalitions avoiding both players.
Desirability compare_by_table(const WinTable& table, PlayerId i, PlayerId j) {
  const std::uint64_t bit_i = std::uint64_t{1} << (i - 1);
  const std::uint64_t bit_j = std::uint64_t{1} << (j - 1);
  bool i_over_j = true, j_over_i = true;
  const std::uint64_t end = std::uint64_t{1} << table.players();
  for (std::uint64_t m = 0; m < end; ++m) {
    if (m & (bit_i | bit_j)) continue;
    const bool with_i = table.test(m | bit_i);
    const bool with_j = table.test(m | bit_j);
    if (with_j && !with_i) i_over_j = false;
    if (with_i && !with_j) j_over_i = false;
    if (!i_over_j && !j_over_i) break;
  }
  return relation_from(i_over_j, j_over_i);
}

std::optional<std::pair<PlayerId, PlayerId>> incomparable_pair_by_table(
    const WinTable& table) {
  const int n = table.players();
  for (PlayerId i = 1; i <= n; ++i)
    for (PlayerId j = i + 1; j <= n; ++j)
      if (compare_by_table(table, i, j) == Desirability::kIncomparable)
        return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace

const char* desirability_name(Desirability relation) {
  switch (relation) {
    case Desirability::kStrictlyMore:
      return "strictly_more";
    case Desirability::kEquivalent:
      return "equivalent";
    case Desirability::kStrictlyLess:
      return "strictly_less";
    case Desirability::kIncomparable:
      return "incomparable";
  }
  return "?";
}

MwcProfile::MwcProfile(int players)
    : players_(players),
      counts_(static_cast<std::size_t>(players) *
                  static_cast<std::size_t>(players),
              0) {}

std::uint64_t MwcProfile::total(PlayerId i) const {
  std::uint64_t sum = 0;
  for (int k = 1; k <= players_; ++k) sum += count(k, i);
  return sum;
}

int MwcProfile::compare_columns(PlayerId i, PlayerId j) const {
  const std::size_t a = column_offset(i), b = column_offset(j);
  for (std::size_t k = 0; k < static_cast<std::size_t>(players_); ++k) {
    if (counts_[a + k] != counts_[b + k])
      return counts_[a + k] > counts_[b + k] ? 1 : -1;
  }
  return 0;
}

MwcProfile mwc_profile(const MinimalWinningForm& form) {
  MwcProfile profile(form.players);
  for (Coalition s : form.minimal) {
    const int size = s.size();
    for (PlayerId p : s.members()) profile.increment(size, p);
  }
  return profile;
}

std::string format_ordering(const DesirabilityOrdering& ordering) {
  const char* between = ordering.strict ? " > " : " >= ";
  std::string out;
  for (std::size_t c = 0; c < ordering.classes.size(); ++c) {
    if (c > 0) out += between;
    const auto& cls = ordering.classes[c];
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (k > 0) out += " ~ ";
      out += std::to_string(cls[k]);
    }
  }
  return out;
}

Desirability compare_players(const SimpleGame& game, PlayerId i, PlayerId j,
                             int n_cap) {
  check_pair(game, i, j);
  if (game.form() == SimpleGame::Form::kMinimalWinning) {
    MinimalIndex index(game.as_minimal());
    return relation_from(index.at_least_as_desirable(i, j),
                         index.at_least_as_desirable(j, i));
  }
  detail::require_enum_cap(game.players(), n_cap, "compare_players");
  return compare_by_table(build_win_table(game, n_cap), i, j);
}

std::optional<DesirabilityOrdering> strict_desirability_ordering(
    const MinimalWinningForm& form) {
  const int n = form.players;
  const MwcProfile profile = mwc_profile(form);

  // On a linear game the descending profile order is the desirability
  // order, ties exactly the equivalence classes. Verifying the shift test
  // along adjacent pairs therefore decides linearity: failures disprove
  // it, and a full chain of successes makes every pair comparable by
  // transitivity.
  std::vector<PlayerId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](PlayerId a, PlayerId b) {
    return profile.compare_columns(a, b) > 0;
  });

  const MinimalIndex index(form);
  for (std::size_t t = 0; t + 1 < order.size(); ++t) {
    if (!index.at_least_as_desirable(order[t], order[t + 1]))
      return std::nullopt;
  }

  // The stable sort keeps equal-profile players in index order, so each
  // class comes out ascending.
  DesirabilityOrdering out;
  out.strict = true;
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (t == 0 || profile.compare_columns(order[t - 1], order[t]) != 0)
      out.classes.emplace_back();
    out.classes.back().push_back(order[t]);
  }
  return out;
}

DesirabilityOrdering weight_desirability_ordering(const WeightedForm& game) {
  const int n = game.players();
  std::vector<PlayerId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](PlayerId a, PlayerId b) {
    return game.weights[static_cast<std::size_t>(a - 1)] >
           game.weights[static_cast<std::size_t>(b - 1)];
  });
  DesirabilityOrdering out;
  out.strict = false;  // heavier is only known to be at least as desirable
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (t == 0 || game.weights[static_cast<std::size_t>(order[t] - 1)] !=
                      game.weights[static_cast<std::size_t>(order[t - 1] - 1)])
      out.classes.emplace_back();
    out.classes.back().push_back(order[t]);
  }
  return out;
}

bool is_linear(const SimpleGame& game, int n_cap) {
  switch (game.form()) {
    case SimpleGame::Form::kWeighted:
      return true;  // weighted games are linear
    case SimpleGame::Form::kMinimalWinning:
      return strict_desirability_ordering(game.as_minimal()).has_value();
    case SimpleGame::Form::kWinning:
      return strict_desirability_ordering(minimize(game.as_winning()))
          .has_value();
    case SimpleGame::Form::kMultiWeighted: {
      detail::require_enum_cap(game.players(), n_cap, "is_linear");
      return !incomparable_pair_by_table(build_win_table(game, n_cap))
                  .has_value();
    }
  }
  return false;
}

bool is_swap_robust(const SimpleGame& game, int n_cap) {
  const int n = game.players();
  detail::require_enum_cap(n, n_cap, "is_swap_robust");
  WinTable table = build_win_table(game, n_cap);
  std::vector<std::uint64_t> winning;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < end; ++m)
    if (table.test(m)) winning.push_back(m);
  for (std::size_t a = 0; a < winning.size(); ++a) {
    for (std::size_t b = a + 1; b < winning.size(); ++b) {
      const std::uint64_t s = winning[a], t = winning[b];
      for (std::uint64_t mi = s & ~t; mi != 0; mi &= mi - 1) {
        const std::uint64_t bit_i = mi & (~mi + 1);
        for (std::uint64_t mj = t & ~s; mj != 0; mj &= mj - 1) {
          const std::uint64_t bit_j = mj & (~mj + 1);
          if (!table.test((s ^ bit_i) | bit_j) &&
              !table.test((t ^ bit_j) | bit_i))
            return false;
        }
      }
    }
  }
  return true;
}

}  // namespace sg
