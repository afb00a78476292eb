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

// Extendability verdicts and the explicit extensions of player-centered games:
// the canonical pair, the positive vertices v_x, beta-parameterised positive
// extensions, the superadditive witness, the monotone vertices v_{sigma,x},
// and the known extreme-ray families.

#ifndef COOPGAP_EXTENSIONS_HPP_
#define COOPGAP_EXTENSIONS_HPP_

#include <cstdint>
#include <vector>

#include "coopgap/coalition.hpp"
#include "coopgap/game.hpp"
#include "coopgap/incomplete.hpp"
#include "coopgap/rational.hpp"

namespace coopgap {

// Profiles are indexed like PlayerCentered::unknown().
using BetaProfile = std::vector<Rational>;
using XVector = std::vector<std::uint8_t>;
using SigmaOrder = std::vector<Coalition>;

bool extendable(const PlayerCentered& g, GameClass cls);

struct CanonicalPair {
  TUGame v0;  // v(S u i) on K^c
  TUGame v1;  // 0 on K^c
};
CanonicalPair v0_v1(const PlayerCentered& g);

// Coordinatewise largest positive extension: v(S u i) - v(i) on K^c. It equals
// v0 exactly when v(i) = 0.
TUGame positive_top(const PlayerCentered& g);

// Coordinatewise largest zero-normalised positive extension: beta = 1 on
// coalitions of size at least two and 0 on singletons.
TUGame zero_normalized_top(const PlayerCentered& g);

// Moebius mass m(S u i) placed on S when x_S = 0 and on S u i when x_S = 1.
TUGame vx_vertex(const PlayerCentered& g, const XVector& x);
// Distinct v_x over all x, ascending by worth vector.
std::vector<TUGame> enumerate_positive_vertices(const PlayerCentered& g);

// v(i) u_i + sum m(S u i) [beta_S u_S + (1 - beta_S) u_{S u i}].
TUGame beta_extension(const PlayerCentered& g, const BetaProfile& beta);

// Additive fill of K^c with a common per-player worth small enough to meet
// every constraint that mixes known and unknown coalitions.
TUGame superadditive_witness(const PlayerCentered& g);

TUGame vsigmax_vertex(const PlayerCentered& g, const SigmaOrder& sigma, const XVector& x);
// Distinct v_{sigma,x} over all orders and all x, ascending by worth vector.
std::vector<TUGame> enumerate_monotone_vertices(const PlayerCentered& g);

// Convex game vanishing on K with Moebius (-1)^{|T|} on nonempty T subset of S0.
TUGame ray_eS0(int n, Player center, Coalition s0);
// -u_k on K^c and zero on K.
TUGame ray_neg_unanimity(int n, Player center, Player k);

// Extreme rays of the superadditive and convex recession cones for n players
// centered at player 0, and how many members of each known family occur.
struct RayCensus {
  int n = 0;
  std::size_t superadditive_rays = 0;
  std::size_t convex_rays = 0;
  std::size_t neg_unanimity_rays = 0;  // -u_k among the superadditive rays
  std::size_t es0_rays = 0;            // e_{S0} among the convex rays
};
RayCensus ray_census(int n);

// Draws cls-extensions: convex combinations of extreme games plus, for the
// unbounded classes, nonnegative multiples of the known ray families. The
// extreme games are computed once at construction.
class ExtensionSampler {
 public:
  // Throws NotExtendableError when g has no cls-extension.
  ExtensionSampler(const PlayerCentered& g, GameClass cls);

  // Same seed, same game.
  TUGame sample(std::uint64_t seed) const;

  GameClass game_class() const { return cls_; }

 private:
  PlayerCentered g_;
  GameClass cls_;
  std::vector<TUGame> vertices_;
  std::vector<TUGame> rays_;
};

// ExtensionSampler(g, cls).sample(seed).
TUGame sample_extension(const PlayerCentered& g, GameClass cls, std::uint64_t seed);

}  // namespace coopgap

#endif  // COOPGAP_EXTENSIONS_HPP_
