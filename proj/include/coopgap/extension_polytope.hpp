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

// Extension sets of player-centered games as H-polyhedra in game coordinates.

#ifndef COOPGAP_EXTENSION_POLYTOPE_HPP_
#define COOPGAP_EXTENSION_POLYTOPE_HPP_

#include <span>

#include "coopgap/game.hpp"
#include "coopgap/incomplete.hpp"
#include "coopgap/polyhedron.hpp"

namespace coopgap {

// Game coordinates: one per nonempty coalition, coordinate S.mask - 1.
inline std::size_t game_coordinate(Coalition s) { return s.mask - 1; }
RationalVector to_coordinates(const TUGame& game);
TUGame from_coordinates(int n, std::span<const Rational> x);

// The constraints that cut the class out of the full game space, without
// the agreement rows.
HPolyhedron class_polyhedron(int n, GameClass cls);

// cls-extensions of g: class rows plus w(S) = v(S) for S in K.
HPolyhedron build_extension_polytope(const PlayerCentered& g, GameClass cls);

// Recession cone of the convex or superadditive extension set, projected onto
// the unknown coordinates (position in PlayerCentered::unknown()).
HPolyhedron reduce_recession_cone(int n, Player center, GameClass cls);
HPolyhedron reduce_recession_cone(const PlayerCentered& g, GameClass cls);

// Game that is `r` on K^c (ordered as PlayerCentered::unknown()) and zero on K.
TUGame lift_unknown(int n, Player center, std::span<const Rational> r);
// Inverse of lift_unknown: the worths of `game` on the coalitions without center.
RationalVector project_unknown(const TUGame& game, Player center);

}  // namespace coopgap

#endif  // COOPGAP_EXTENSION_POLYTOPE_HPP_
