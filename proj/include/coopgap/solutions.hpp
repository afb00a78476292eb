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

// Core, imputations, Shapley value and tau-value of complete games.

#ifndef COOPGAP_SOLUTIONS_HPP_
#define COOPGAP_SOLUTIONS_HPP_

#include "coopgap/game.hpp"
#include "coopgap/polyhedron.hpp"
#include "coopgap/rational.hpp"

namespace coopgap {

struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool operator==(const Interval&) const = default;
};

// s! (n - s - 1)! / n!
Rational shapley_weight(int n, int s);

// x(N) = v(N) and x(S) >= v(S) for every nonempty proper S.
HPolyhedron core_hrep(const TUGame& game);
bool core_nonempty(const TUGame& game);
bool core_member(const TUGame& game, std::span<const Rational> x);
// x(N) = v(N) and x_i >= v(i).
HPolyhedron imputations_hrep(const TUGame& game);
bool is_preimputation(const TUGame& game, std::span<const Rational> x);

// Marginal-contribution form, summed over subsets rather than orders.
PayoffVector shapley_marginal_form(const TUGame& game);
// Equal split of every Moebius coefficient.
PayoffVector shapley_mobius_form(const TUGame& game);
// Both forms, checked against each other (InvariantError on mismatch).
PayoffVector shapley(const TUGame& game);

// Gap-function form b_i - g(N) g(i) / sum_j g(j); returns b when the sum of
// singleton gaps is zero.
PayoffVector tau_gap_form(const TUGame& game);
PayoffVector tau_mobius_form(const TUGame& game);
// Both forms, checked against each other. Throws ValidationError unless the
// game is convex.
PayoffVector tau_convex(const TUGame& game);

}  // namespace coopgap

#endif  // COOPGAP_SOLUTIONS_HPP_
