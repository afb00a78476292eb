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

#include "coopgap/solutions.hpp"

#include <vector>

#include "coopgap/errors.hpp"

namespace coopgap {
namespace {

RationalVector indicator(int n, Coalition s) {
  RationalVector row(static_cast<std::size_t>(n), Rational(0));
  for (Player p : s.members()) row[static_cast<std::size_t>(p)] = 1;
  return row;
}

RationalVector negated(RationalVector row) {
  for (Rational& c : row) c = -c;
  return row;
}

}  // namespace

Rational shapley_weight(int n, int s) {
  return factorial(static_cast<unsigned>(s)) * factorial(static_cast<unsigned>(n - s - 1)) /
         factorial(static_cast<unsigned>(n));
}

HPolyhedron core_hrep(const TUGame& game) {
  const int n = game.players();
  HPolyhedron p(static_cast<std::size_t>(n));
  p.add_equality(indicator(n, game.grand()), game(game.grand()));
  for (Mask m = 1; m < game.grand().mask; ++m) {
    p.add_inequality(negated(indicator(n, Coalition(m))), -game(Coalition(m)));
  }
  return p;
}

bool core_nonempty(const TUGame& game) { return lp_feasible(core_hrep(game)).feasible; }

bool core_member(const TUGame& game, std::span<const Rational> x) {
  return core_hrep(game).contains_point(x);
}

HPolyhedron imputations_hrep(const TUGame& game) {
  const int n = game.players();
  HPolyhedron p(static_cast<std::size_t>(n));
  p.add_equality(indicator(n, game.grand()), game(game.grand()));
  for (Player i = 0; i < n; ++i) {
    const Coalition s = Coalition::singleton(i);
    p.add_inequality(negated(indicator(n, s)), -game(s));
  }
  return p;
}

bool is_preimputation(const TUGame& game, std::span<const Rational> x) {
  return x.size() == static_cast<std::size_t>(game.players()) &&
         coalition_sum(x, game.grand()) == game(game.grand());
}

PayoffVector shapley_marginal_form(const TUGame& game) {
  const int n = game.players();
  std::vector<Rational> weight(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) weight[static_cast<std::size_t>(s)] = shapley_weight(n, s);
  PayoffVector phi(static_cast<std::size_t>(n), Rational(0));
  for (Player i = 0; i < n; ++i) {
    const Coalition others = game.grand().without(i);
    for_each_subset(others, [&](Coalition s) {
      phi[static_cast<std::size_t>(i)] +=
          weight[static_cast<std::size_t>(s.size())] * (game(s.with(i)) - game(s));
    });
  }
  return phi;
}

PayoffVector shapley_mobius_form(const TUGame& game) {
  const MobiusVector m = mobius_forward(game);
  const int n = game.players();
  PayoffVector phi(static_cast<std::size_t>(n), Rational(0));
  for (Mask mask = 1; mask < coalition_count(n); ++mask) {
    const Coalition s(mask);
    if (sgn(m(s)) == 0) continue;
    const Rational share = m(s) / s.size();
    for (Player p : s.members()) phi[static_cast<std::size_t>(p)] += share;
  }
  return phi;
}

PayoffVector shapley(const TUGame& game) {
  PayoffVector a = shapley_marginal_form(game);
  if (a != shapley_mobius_form(game)) throw InvariantError("Shapley value forms disagree");
  return a;
}

PayoffVector tau_gap_form(const TUGame& game) {
  const int n = game.players();
  const PayoffVector b = upper_vector(game);
  Rational singleton_gaps = 0;
  for (Player i = 0; i < n; ++i) singleton_gaps += gap(game, Coalition::singleton(i));
  if (sgn(singleton_gaps) == 0) return b;
  const Rational ratio = gap(game, game.grand()) / singleton_gaps;
  PayoffVector tau(b);
  for (Player i = 0; i < n; ++i) {
    tau[static_cast<std::size_t>(i)] -= ratio * gap(game, Coalition::singleton(i));
  }
  return tau;
}

PayoffVector tau_mobius_form(const TUGame& game) {
  const int n = game.players();
  const MobiusVector m = mobius_forward(game);
  Rational mass = 0, weighted = 0;
  PayoffVector shared(static_cast<std::size_t>(n), Rational(0));
  for (Mask mask = 1; mask < coalition_count(n); ++mask) {
    const Coalition s(mask);
    if (s.size() < 2 || sgn(m(s)) == 0) continue;
    mass += m(s);
    weighted += s.size() * m(s);
    for (Player p : s.members()) shared[static_cast<std::size_t>(p)] += m(s);
  }
  PayoffVector tau(static_cast<std::size_t>(n));
  for (Player i = 0; i < n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    tau[k] = m(Coalition::singleton(i));
    if (sgn(weighted) == 0) {
      tau[k] += shared[k];
    } else {
      tau[k] += mass / weighted * shared[k];
    }
  }
  return tau;
}

PayoffVector tau_convex(const TUGame& game) {
  if (!is_convex(game)) throw ValidationError("the tau-value closed form needs a convex game");
  PayoffVector a = tau_gap_form(game);
  if (a != tau_mobius_form(game)) throw InvariantError("tau-value forms disagree");
  return a;
}

}  // namespace coopgap
