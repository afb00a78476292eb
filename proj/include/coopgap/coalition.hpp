// Copyright 2026 The coopgap Authors
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

#ifndef COOPGAP_COALITION_HPP_
#define COOPGAP_COALITION_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coopgap {

using Player = int;
using Mask = std::uint32_t;

// Largest supported player count. Games store 2^n worths densely.
inline constexpr int kMaxPlayers = 20;

// A subset of the players {0, ..., n-1}; bit j of the mask is set iff
// player j belongs to the coalition. The ambient n is carried by the game.
struct Coalition {
  Mask mask = 0;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask m) : mask(m) {}

  static constexpr Coalition empty() { return Coalition(0); }
  static constexpr Coalition grand(int n) { return Coalition((Mask{1} << n) - 1); }
  static constexpr Coalition singleton(Player j) { return Coalition(Mask{1} << j); }
  static Coalition of(std::initializer_list<Player> players) {
    Mask m = 0;
    for (Player p : players) m |= Mask{1} << p;
    return Coalition(m);
  }

  constexpr int size() const { return std::popcount(mask); }
  constexpr bool is_empty() const { return mask == 0; }
  constexpr bool contains(Player j) const { return (mask >> j) & 1U; }
  constexpr bool subset_of(Coalition other) const { return (mask & ~other.mask) == 0; }
  constexpr bool proper_subset_of(Coalition other) const {
    return subset_of(other) && mask != other.mask;
  }
  constexpr bool disjoint(Coalition other) const { return (mask & other.mask) == 0; }

  constexpr Coalition with(Player j) const { return Coalition(mask | (Mask{1} << j)); }
  constexpr Coalition without(Player j) const { return Coalition(mask & ~(Mask{1} << j)); }
  constexpr Coalition operator|(Coalition o) const { return Coalition(mask | o.mask); }
  constexpr Coalition operator&(Coalition o) const { return Coalition(mask & o.mask); }
  // Set difference.
  constexpr Coalition operator-(Coalition o) const { return Coalition(mask & ~o.mask); }

  std::vector<Player> members() const;

  constexpr auto operator<=>(const Coalition&) const = default;
};

// Number of coalitions including the empty one.
constexpr std::size_t coalition_count(int n) { return std::size_t{1} << n; }

// Calls f(Coalition) for every subset of `s`, including the empty set and `s`.
template <typename F>
void for_each_subset(Coalition s, F&& f) {
  Mask sub = s.mask;
  while (true) {
    f(Coalition(sub));
    if (sub == 0) break;
    sub = (sub - 1) & s.mask;
  }
}

// "{0,2}" style, members ascending.
std::string to_string(Coalition s);

}  // namespace coopgap

#endif  // COOPGAP_COALITION_HPP_
