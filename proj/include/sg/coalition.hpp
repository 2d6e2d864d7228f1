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

#ifndef SG_COALITION_HPP
#define SG_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sg {

/// 1-based player index, matching the usual numbering of voters.
using PlayerId = int;

/// Hard capacity of the library: coalitions are 64-bit bit sets.
inline constexpr int kMaxPlayers = 64;

/// A set of players. Player i occupies bit (i - 1).
class Coalition {
 public:
  constexpr Coalition() = default;

  static constexpr Coalition from_mask(std::uint64_t mask) {
    return Coalition(mask);
  }

  static Coalition of(std::initializer_list<PlayerId> players) {
    Coalition s;
    for (PlayerId p : players) s = s.with(p);
    return s;
  }

  /// The grand coalition {1, ..., n}.
  static constexpr Coalition grand(int players) {
    return Coalition(players >= kMaxPlayers ? ~std::uint64_t{0}
                                            : (std::uint64_t{1} << players) - 1);
  }

  static constexpr Coalition single(PlayerId i) {
    return Coalition(std::uint64_t{1} << (i - 1));
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }

  constexpr bool contains(PlayerId i) const {
    return (mask_ >> (i - 1)) & 1u;
  }
  constexpr bool subset_of(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  constexpr Coalition with(PlayerId i) const {
    return Coalition(mask_ | (std::uint64_t{1} << (i - 1)));
  }
  constexpr Coalition without(PlayerId i) const {
    return Coalition(mask_ & ~(std::uint64_t{1} << (i - 1)));
  }
  constexpr Coalition unite(Coalition other) const {
    return Coalition(mask_ | other.mask_);
  }
  constexpr Coalition intersect(Coalition other) const {
    return Coalition(mask_ & other.mask_);
  }
  /// Set difference this \ other.
  constexpr Coalition minus(Coalition other) const {
    return Coalition(mask_ & ~other.mask_);
  }
  /// Complement within {1, ..., n}.
  constexpr Coalition complement(int players) const {
    return Coalition(grand(players).mask_ & ~mask_);
  }

  std::vector<PlayerId> members() const {
    std::vector<PlayerId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
      out.push_back(static_cast<PlayerId>(std::countr_zero(m)) + 1);
    return out;
  }

  friend constexpr auto operator<=>(const Coalition&,
                                    const Coalition&) = default;

 private:
  explicit constexpr Coalition(std::uint64_t mask) : mask_(mask) {}

  std::uint64_t mask_ = 0;
};

/// "{1,3,4}" for diagnostics; "{}" for the empty coalition.
std::string to_string(Coalition s);

}  // namespace sg

#endif  // SG_COALITION_HPP
