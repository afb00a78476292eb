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

// Weak and strong solutions over the extensions of a player-centered game:
// core bounds, Shapley and tau intervals with witnesses, and a sampling
// cross-check.

#ifndef COOPGAP_APPROXIMATIONS_HPP_
#define COOPGAP_APPROXIMATIONS_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "coopgap/extensions.hpp"
#include "coopgap/game.hpp"
#include "coopgap/incomplete.hpp"
#include "coopgap/polyhedron.hpp"
#include "coopgap/solutions.hpp"

namespace coopgap {

enum class Concept { kShapley, kTau };
std::string_view to_string(Concept c);
Concept parse_concept(std::string_view name);

struct PlayerBound {
  Interval interval;
  TUGame lo_witness;  // extension whose value for this player is interval.lo
  TUGame hi_witness;  // extension whose value for this player is interval.hi
};

struct SolutionBounds {
  Concept concept_kind;
  GameClass cls;
  std::vector<PlayerBound> per_player;
};

struct CoreBounds {
  // Intersection of the cores of all extensions, with the game whose core it
  // is; absent for the monotone class.
  std::optional<HPolyhedron> inner;
  std::optional<TUGame> inner_game;
  // Union of the cores of all extensions and the extension attaining it.
  HPolyhedron outer;
  TUGame outer_game;
};

// Supported classes: monotone, positive, monotone-superadditive,
// monotone-convex.
CoreBounds core_bounds(const PlayerCentered& g, GameClass cls);

// Largest worth of every unknown coalition over the cls-extensions, decided
// by LP; the known worths are copied from g.
TUGame upper_envelope(const PlayerCentered& g, GameClass cls);

// phi_k(v) of the incomplete game: sum over nonempty S in K without k of
// gamma_S (v(S u k) - v(S)).
Rational incomplete_shapley(const PlayerCentered& g, Player k);

// Closed-form weak Shapley value of player k over the monotone or positive
// extensions.
PlayerBound shapley_interval(const PlayerCentered& g, GameClass cls, Player k);
SolutionBounds shapley_bounds(const PlayerCentered& g, GameClass cls);

// Shapley value of beta_extension(g, beta) from the partial Moebius transform.
PayoffVector shapley_of_beta(const PlayerCentered& g, const BetaProfile& beta);

// v(N) / sum |S| m(S) * sum over S containing k of m(S); zero for the zero game.
PayoffVector tau_zero_normalized(const TUGame& game);

// Closed-form weak tau-value of player k over the zero-normalised positive
// extensions.
PlayerBound tau_interval(const PlayerCentered& g, Player k);
SolutionBounds tau_bounds(const PlayerCentered& g);

// Minimum and maximum of the concept over `samples` sampled extensions.
// Sample 0 is v1 whenever v1 belongs to the class.
SolutionBounds empirical_bounds(const PlayerCentered& g, GameClass cls, Concept c,
                                std::size_t samples, std::uint64_t seed);

// Per-sample seed derived from (seed, index).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

// Value of the concept at a complete game.
PayoffVector evaluate(Concept c, const TUGame& game);

}  // namespace coopgap

#endif  // COOPGAP_APPROXIMATIONS_HPP_
