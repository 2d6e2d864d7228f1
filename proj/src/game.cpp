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

#include "sg/game.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "sg/errors.hpp"

namespace sg {

namespace {

void check_player_count(int players) {
  if (players < 1 || players > kMaxPlayers) {
    std::ostringstream msg;
    msg << "player count must be in [1, " << kMaxPlayers << "], got "
        << players;
    throw InvalidInputError(msg.str());
  }
}

std::vector<Coalition> canonicalize(std::vector<Coalition> coalitions) {
  std::sort(coalitions.begin(), coalitions.end());
  coalitions.erase(std::unique(coalitions.begin(), coalitions.end()),
                   coalitions.end());
  return coalitions;
}

bool binary_contains(const std::vector<Coalition>& sorted, Coalition s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

}  // namespace

std::string to_string(Coalition s) {
  std::string out = "{";
  bool first = true;
  for (PlayerId p : s.members()) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

ExtensiveWinningForm::ExtensiveWinningForm(int players_in,
                                           std::vector<Coalition> winning_in)
    : players(players_in), winning(canonicalize(std::move(winning_in))) {
  check_player_count(players);
}

MinimalWinningForm::MinimalWinningForm(int players_in,
                                       std::vector<Coalition> minimal_in)
    : players(players_in), minimal(canonicalize(std::move(minimal_in))) {
  check_player_count(players);
}

WeightedForm::WeightedForm(BigInt quota_in, std::vector<BigInt> weights_in)
    : quota(std::move(quota_in)), weights(std::move(weights_in)) {
  check_player_count(static_cast<int>(weights.size()));
}

BigInt WeightedForm::total_weight() const {
  BigInt total = 0;
  for (const BigInt& w : weights) total += w;
  return total;
}

BigInt WeightedForm::weight_of(Coalition s) const {
  BigInt total = 0;
  for (std::uint64_t m = s.mask(); m != 0; m &= m - 1)
    total += weights[static_cast<std::size_t>(std::countr_zero(m))];
  return total;
}

MultiWeightedForm::MultiWeightedForm(std::vector<WeightedForm> components_in)
    : components(std::move(components_in)) {
  if (components.empty())
    throw InvalidInputError("conjunction needs at least one component");
  const int n = components.front().players();
  for (const WeightedForm& c : components) {
    if (c.players() != n)
      throw InvalidInputError(
          "all components of a conjunction must share the player count");
  }
}

SimpleGame::SimpleGame(ExtensiveWinningForm form)
    : repr_(std::move(form)), players_(as_winning().players) {}
SimpleGame::SimpleGame(MinimalWinningForm form)
    : repr_(std::move(form)), players_(as_minimal().players) {}
SimpleGame::SimpleGame(WeightedForm form)
    : repr_(std::move(form)), players_(as_weighted().players()) {}
SimpleGame::SimpleGame(MultiWeightedForm form)
    : repr_(std::move(form)), players_(as_multi().players()) {}

SimpleGame::Form SimpleGame::form() const {
  return static_cast<Form>(repr_.index());
}

const ExtensiveWinningForm& SimpleGame::as_winning() const {
  return std::get<ExtensiveWinningForm>(repr_);
}
const MinimalWinningForm& SimpleGame::as_minimal() const {
  return std::get<MinimalWinningForm>(repr_);
}
const WeightedForm& SimpleGame::as_weighted() const {
  return std::get<WeightedForm>(repr_);
}
const MultiWeightedForm& SimpleGame::as_multi() const {
  return std::get<MultiWeightedForm>(repr_);
}

const char* form_name(SimpleGame::Form form) {
  switch (form) {
    case SimpleGame::Form::kWinning:
      return "winning";
    case SimpleGame::Form::kMinimalWinning:
      return "minimal_winning";
    case SimpleGame::Form::kWeighted:
      return "weighted";
    case SimpleGame::Form::kMultiWeighted:
      return "multi_weighted";
  }
  return "?";
}

namespace detail {

void require_players_in_range(const SimpleGame& game, Coalition s) {
  if (game.players() < kMaxPlayers &&
      (s.mask() >> game.players()) != 0) {
    throw InvalidInputError("coalition references a player beyond the game's " +
                            std::to_string(game.players()) + " players");
  }
}

void require_enum_cap(int players, int n_cap, const char* operation) {
  if (players > n_cap) {
    std::ostringstream msg;
    msg << operation << ": enumeration over " << players
        << " players exceeds the cap of " << n_cap;
    throw BudgetError(msg.str());
  }
}

std::optional<SmallWeights> small_weights(const WeightedForm& game) {
  static const BigInt u64_max = std::numeric_limits<std::uint64_t>::max();
  if (game.quota < 0 || game.quota > u64_max) return std::nullopt;
  BigInt total = 0;
  for (const BigInt& w : game.weights) {
    if (w < 0) return std::nullopt;
    total += w;
  }
  if (total > u64_max) return std::nullopt;
  SmallWeights out;
  out.quota = game.quota.convert_to<std::uint64_t>();
  out.weights.reserve(game.weights.size());
  for (const BigInt& w : game.weights)
    out.weights.push_back(w.convert_to<std::uint64_t>());
  return out;
}

}  // namespace detail

bool is_winning(const SimpleGame& game, Coalition s) {
  detail::require_players_in_range(game, s);
  switch (game.form()) {
    case SimpleGame::Form::kWinning:
      return binary_contains(game.as_winning().winning, s);
    case SimpleGame::Form::kMinimalWinning: {
      for (Coalition t : game.as_minimal().minimal)
        if (t.subset_of(s)) return true;
      return false;
    }
    case SimpleGame::Form::kWeighted: {
      const WeightedForm& w = game.as_weighted();
      return w.weight_of(s) >= w.quota;
    }
    case SimpleGame::Form::kMultiWeighted: {
      for (const WeightedForm& c : game.as_multi().components)
        if (c.weight_of(s) < c.quota) return false;
      return true;
    }
  }
  return false;
}

namespace {

void validate_weighted(const WeightedForm& w, const std::string& prefix,
                       std::vector<std::string>* out) {
  if (w.quota < 1)
    out->push_back(prefix + "quota must be at least 1");
  for (std::size_t i = 0; i < w.weights.size(); ++i) {
    if (w.weights[i] < 0)
      out->push_back(prefix + "weight of player " + std::to_string(i + 1) +
                     " is negative");
  }
  BigInt total = 0;
  for (const BigInt& x : w.weights)
    if (x > 0) total += x;
  if (total < w.quota)
    out->push_back(prefix +
                   "total weight is below the quota, so the grand coalition "
                   "cannot win");
}

bool within_range(Coalition s, int players) {
  return players >= kMaxPlayers || (s.mask() >> players) == 0;
}

}  // namespace

ValidationReport validate(const SimpleGame& game) {
  ValidationReport report;
  std::vector<std::string>& v = report.violations;
  const int n = game.players();
  switch (game.form()) {
    case SimpleGame::Form::kWinning: {
      const auto& form = game.as_winning();
      for (Coalition s : form.winning) {
        if (!within_range(s, n)) {
          v.push_back("winning coalition " + to_string(s) +
                      " references a player beyond " + std::to_string(n));
          return report;
        }
      }
      if (form.winning.empty() ||
          !binary_contains(form.winning, Coalition::grand(n)))
        v.push_back("the grand coalition must win");
      if (binary_contains(form.winning, Coalition()))
        v.push_back("the empty coalition must lose");
      for (Coalition s : form.winning) {
        for (PlayerId p = 1; p <= n; ++p) {
          if (!s.contains(p) && !binary_contains(form.winning, s.with(p))) {
            v.push_back("winning set is not upward closed: " + to_string(s) +
                        " wins but " + to_string(s.with(p)) + " does not");
            return report;
          }
        }
      }
      break;
    }
    case SimpleGame::Form::kMinimalWinning: {
      const auto& form = game.as_minimal();
      for (Coalition s : form.minimal) {
        if (!within_range(s, n)) {
          v.push_back("coalition " + to_string(s) +
                      " references a player beyond " + std::to_string(n));
          return report;
        }
      }
      if (form.minimal.empty())
        v.push_back("at least one minimal winning coalition is required");
      for (Coalition s : form.minimal)
        if (s.empty()) v.push_back("the empty coalition must lose");
      // Pairwise antichain check; fine at document scale.
      const auto& ms = form.minimal;
      for (std::size_t a = 0; a < ms.size(); ++a) {
        for (std::size_t b = a + 1; b < ms.size(); ++b) {
          if (ms[a].subset_of(ms[b]) || ms[b].subset_of(ms[a])) {
            v.push_back("not an antichain: " + to_string(ms[a]) + " and " +
                        to_string(ms[b]) + " are nested");
            return report;
          }
        }
      }
      break;
    }
    case SimpleGame::Form::kWeighted:
      validate_weighted(game.as_weighted(), "", &v);
      break;
    case SimpleGame::Form::kMultiWeighted: {
      const auto& form = game.as_multi();
      for (std::size_t t = 0; t < form.components.size(); ++t) {
        validate_weighted(form.components[t],
                          "component " + std::to_string(t + 1) + ": ", &v);
      }
      break;
    }
  }
  return report;
}

WinTable::WinTable(int players) : players_(players) {
  check_player_count(players);
  // 2^n bits; refuse sizes that could not fit in memory anyway.
  if (players > 30)
    throw BudgetError("WinTable: dense tables stop at 30 players");
  const std::uint64_t masks = std::uint64_t{1} << players;
  bits_.assign(static_cast<std::size_t>((masks + 63) >> 6), 0);
}

std::uint64_t WinTable::count() const {
  std::uint64_t total = 0;
  for (std::uint64_t word : bits_) total += std::popcount(word);
  return total;
}

namespace {

// One pass over all coalitions in Gray-code order keeps a running weight
// sum with a single add or subtract per step.
template <typename Weight, typename Emit>
void for_each_subset_sum(const std::vector<Weight>& weights, Emit&& emit) {
  const int n = static_cast<int>(weights.size());
  Weight sum{};
  std::uint64_t mask = 0;
  emit(mask, sum);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < end; ++k) {
    const int bit = std::countr_zero(k);
    const std::uint64_t flip = std::uint64_t{1} << bit;
    mask ^= flip;
    if (mask & flip)
      sum += weights[static_cast<std::size_t>(bit)];
    else
      sum -= weights[static_cast<std::size_t>(bit)];
    emit(mask, sum);
  }
}

void fill_weighted(const WeightedForm& w, WinTable* table) {
  if (auto small = detail::small_weights(w)) {
    // Unsigned running sums stay exact: Gray steps only remove weights
    // that were previously added.
    for_each_subset_sum<std::uint64_t>(
        small->weights, [&](std::uint64_t mask, std::uint64_t sum) {
          if (sum >= small->quota) table->set(mask);
        });
  } else {
    for_each_subset_sum<BigInt>(w.weights,
                                [&](std::uint64_t mask, const BigInt& sum) {
                                  if (sum >= w.quota) table->set(mask);
                                });
  }
}

}  // namespace

WinTable build_win_table(const SimpleGame& game, int n_cap) {
  const int n = game.players();
  detail::require_enum_cap(n, n_cap, "build_win_table");
  WinTable table(n);
  switch (game.form()) {
    case SimpleGame::Form::kWinning:
      for (Coalition s : game.as_winning().winning) table.set(s.mask());
      break;
    case SimpleGame::Form::kMinimalWinning: {
      WinTable marked(n);
      for (Coalition s : game.as_minimal().minimal) marked.set(s.mask());
      const std::uint64_t end = std::uint64_t{1} << n;
      for (std::uint64_t mask = 1; mask < end; ++mask) {
        if (marked.test(mask)) {
          table.set(mask);
          continue;
        }
        for (std::uint64_t m = mask; m != 0; m &= m - 1) {
          if (table.test(mask ^ (m & (~m + 1)))) {
            table.set(mask);
            break;
          }
        }
      }
      break;
    }
    case SimpleGame::Form::kWeighted:
      fill_weighted(game.as_weighted(), &table);
      break;
    case SimpleGame::Form::kMultiWeighted: {
      const auto& components = game.as_multi().components;
      WinTable all(n);
      bool first = true;
      for (const WeightedForm& c : components) {
        WinTable part(n);
        fill_weighted(c, &part);
        if (first) {
          all = part;
          first = false;
        } else {
          // Intersect: a coalition must win in every component.
          WinTable merged(n);
          const std::uint64_t end = std::uint64_t{1} << n;
          for (std::uint64_t mask = 0; mask < end; ++mask)
            if (all.test(mask) && part.test(mask)) merged.set(mask);
          all = merged;
        }
      }
      table = all;
      break;
    }
  }
  return table;
}

std::vector<Coalition> enumerate_winning(const SimpleGame& game, int n_cap) {
  const int n = game.players();
  detail::require_enum_cap(n, n_cap, "enumerate_winning");
  if (game.form() == SimpleGame::Form::kWinning)
    return game.as_winning().winning;
  WinTable table = build_win_table(game, n_cap);
  std::vector<Coalition> out;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < end; ++mask)
    if (table.test(mask)) out.push_back(Coalition::from_mask(mask));
  return out;
}

}  // namespace sg
