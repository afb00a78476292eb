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

// Incomplete games (N, K, v) and the player-centered structure
// K = {S : i in S} together with the empty coalition.

#ifndef COOPGAP_INCOMPLETE_HPP_
#define COOPGAP_INCOMPLETE_HPP_

#include <map>
#include <set>
#include <vector>

#include "coopgap/coalition.hpp"
#include "coopgap/game.hpp"
#include "coopgap/rational.hpp"

namespace coopgap {

class IncompleteGame {
 public:
  // `values` maps each known coalition to its worth. The empty coalition is
  // always known; if listed, its worth must be zero.
  IncompleteGame(int n, const std::map<Coalition, Rational>& values);

  int players() const { return n_; }
  // K, including the empty coalition, ascending by mask.
  const std::set<Coalition>& known() const { return known_; }
  bool is_known(Coalition s) const { return known_flag_[s.mask]; }
  // Throws ValidationError when s is not in K.
  const Rational& value(Coalition s) const;

  bool operator==(const IncompleteGame& o) const {
    return n_ == o.n_ && known_ == o.known_ && values_ == o.values_;
  }

 private:
  int n_;
  std::set<Coalition> known_;
  std::vector<bool> known_flag_;
  std::vector<Rational> values_;
};

class PlayerCentered {
 public:
  // Throws ValidationError unless K is exactly the center's family.
  PlayerCentered(IncompleteGame base, Player center);

  // Worths of the 2^{n-1} coalitions containing `center`, by mask.
  static PlayerCentered from_values(int n, Player center,
                                    const std::map<Coalition, Rational>& values);

  const IncompleteGame& base() const { return base_; }
  Player center() const { return center_; }
  int players() const { return base_.players(); }
  const Rational& value(Coalition s) const { return base_.value(s); }
  bool is_known(Coalition s) const { return base_.is_known(s); }

  // K^c: nonempty coalitions without the center, ascending by mask.
  const std::vector<Coalition>& unknown() const { return unknown_; }
  // Nonempty members of K, ascending by mask.
  std::vector<Coalition> known_nonempty() const;

  bool operator==(const PlayerCentered& o) const {
    return center_ == o.center_ && base_ == o.base_;
  }

 private:
  IncompleteGame base_;
  Player center_;
  std::vector<Coalition> unknown_;
};

// Keeps the worths of the coalitions containing `center`.
PlayerCentered restrict_game(const TUGame& game, Player center);

// m(S) = sum over T in K, T subset of S of (-1)^{|S \ T|} v(T), for nonempty S in K.
std::map<Coalition, Rational> partial_mobius(const PlayerCentered& g);

bool is_positive_pc(const PlayerCentered& g);
bool is_convex_pc(const PlayerCentered& g);
bool is_monotone_pc(const PlayerCentered& g);
// No two nonempty members of K are disjoint, so this always holds.
bool is_superadditive_pc(const PlayerCentered& g);

// Exact LP over F = LC(K) restricted to coalitions sandwiched between members
// of K: does a supermodular w on F agree with v on K?
bool bk2018_feasible(const IncompleteGame& g);

}  // namespace coopgap

#endif  // COOPGAP_INCOMPLETE_HPP_
