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

#include "coopgap/approximations.hpp"

#include <string>
#include <utility>

#include "coopgap/errors.hpp"
#include "coopgap/extension_polytope.hpp"

namespace coopgap {
namespace {

void require_extendable(const PlayerCentered& g, GameClass cls) {
  if (!extendable(g, cls)) {
    throw NotExtendableError("game has no " + std::string(to_string(cls)) + " extension");
  }
}

void check_player(const PlayerCentered& g, Player k) {
  if (k < 0 || k >= g.players()) throw ValidationError("player outside the player set");
}

bool class_has_tau(GameClass cls) {
  return cls == GameClass::kPositive || cls == GameClass::kZeroNormalizedPositive ||
         cls == GameClass::kConvex || cls == GameClass::kMonotoneConvex;
}

// w(S) = v(S u i) when k is in S, 0 otherwise, on K^c.
TUGame monotone_shapley_top(const PlayerCentered& g, Player k) {
  const Player i = g.center();
  return TUGame::from_function(g.players(), [&](Coalition s) {
    if (s.contains(i)) return g.value(s);
    return s.contains(k) ? g.value(s.with(i)) : Rational(0);
  });
}

PlayerBound make_bound(Rational lo, Rational hi, TUGame lo_witness, TUGame hi_witness) {
  if (lo > hi) throw InvariantError("interval endpoints out of order");
  return {{std::move(lo), std::move(hi)}, std::move(lo_witness), std::move(hi_witness)};
}

}  // namespace

std::string_view to_string(Concept c) { return c == Concept::kShapley ? "shapley" : "tau"; }

Concept parse_concept(std::string_view name) {
  if (name == "shapley") return Concept::kShapley;
  if (name == "tau") return Concept::kTau;
  throw ValidationError("unknown solution concept \"" + std::string(name) + "\"");
}

TUGame upper_envelope(const PlayerCentered& g, GameClass cls) {
  require_extendable(g, cls);
  const HPolyhedron p = build_extension_polytope(g, cls);
  std::vector<Rational> values(coalition_count(g.players()));
  for (Coalition s : g.known_nonempty()) values[s.mask] = g.value(s);
  for (Coalition s : g.unknown()) {
    RationalVector objective(p.dim(), Rational(0));
    objective[game_coordinate(s)] = 1;
    const LpResult r = lp_maximize(p, objective);
    if (r.status != LpStatus::kOptimal) {
      throw ValidationError("worth of " + to_string(s) + " is unbounded over the extensions");
    }
    values[s.mask] = r.value;
  }
  return TUGame(g.players(), std::move(values));
}

CoreBounds core_bounds(const PlayerCentered& g, GameClass cls) {
  switch (cls) {
    case GameClass::kMonotone:
    case GameClass::kPositive:
    case GameClass::kMonotoneSuperadditive:
    case GameClass::kMonotoneConvex:
      break;
    default:
      throw ValidationError("core bounds are available for the monotone, positive, "
                            "monotone-superadditive and monotone-convex classes");
  }
  require_extendable(g, cls);
  TUGame v1 = v0_v1(g).v1;
  CoreBounds out{std::nullopt, std::nullopt, core_hrep(v1), v1};
  if (cls == GameClass::kPositive) {
    out.inner_game = positive_top(g);
  } else if (cls != GameClass::kMonotone) {
    out.inner_game = upper_envelope(g, cls);
  }
  if (out.inner_game) out.inner = core_hrep(*out.inner_game);
  return out;
}

Rational incomplete_shapley(const PlayerCentered& g, Player k) {
  check_player(g, k);
  const int n = g.players();
  Rational phi = 0;
  for (Coalition s : g.known_nonempty()) {
    if (s.contains(k)) continue;
    phi += shapley_weight(n, s.size()) * (g.value(s.with(k)) - g.value(s));
  }
  return phi;
}

PlayerBound shapley_interval(const PlayerCentered& g, GameClass cls, Player k) {
  check_player(g, k);
  if (cls != GameClass::kMonotone && cls != GameClass::kPositive) {
    throw ValidationError("no exact Shapley endpoints are known for the " +
                          std::string(to_string(cls)) + " class; use empirical bounds");
  }
  require_extendable(g, cls);
  const int n = g.players();
  const Player i = g.center();
  const auto idx = static_cast<std::size_t>(k);
  const CanonicalPair pair = v0_v1(g);

  if (cls == GameClass::kMonotone) {
    if (k == i) {
      return make_bound(shapley(pair.v0)[idx], shapley(pair.v1)[idx], pair.v0, pair.v1);
    }
    const Rational base = incomplete_shapley(g, k);
    Rational extra = 0;
    for (Coalition s : g.known_nonempty()) {
      if (!s.contains(k)) extra += shapley_weight(n, s.size() - 1) * g.value(s.with(k));
    }
    const TUGame top = monotone_shapley_top(g, k);
    if (shapley(pair.v1)[idx] != base || shapley(top)[idx] != base + extra) {
      throw InvariantError("monotone Shapley endpoints are not attained by their witnesses");
    }
    return make_bound(base, base + extra, pair.v1, top);
  }

  const TUGame top = positive_top(g);
  Rational at_top = shapley(top)[idx];
  Rational at_v1 = shapley(pair.v1)[idx];
  if (k == i) return make_bound(std::move(at_top), std::move(at_v1), top, pair.v1);
  return make_bound(std::move(at_v1), std::move(at_top), pair.v1, top);
}

SolutionBounds shapley_bounds(const PlayerCentered& g, GameClass cls) {
  SolutionBounds out{Concept::kShapley, cls, {}};
  for (Player k = 0; k < g.players(); ++k) out.per_player.push_back(shapley_interval(g, cls, k));
  return out;
}

PayoffVector shapley_of_beta(const PlayerCentered& g, const BetaProfile& beta) {
  if (!is_positive_pc(g)) throw NotExtendableError("game has no positive extension");
  if (beta.size() != g.unknown().size()) {
    throw ValidationError("beta must have one entry per unknown coalition");
  }
  const auto pm = partial_mobius(g);
  const Player i = g.center();
  PayoffVector phi(static_cast<std::size_t>(g.players()), Rational(0));
  phi[static_cast<std::size_t>(i)] = g.value(Coalition::singleton(i));
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (sgn(beta[j]) < 0 || beta[j] > 1) throw ValidationError("beta entries must lie in [0, 1]");
    const Coalition s = g.unknown()[j];
    const Rational& mass = pm.at(s.with(i));
    const int size = s.size();
    const Rational with_center = (1 - beta[j]) / (size + 1);
    phi[static_cast<std::size_t>(i)] += mass * with_center;
    const Rational share = mass * (with_center + beta[j] / size);
    for (Player k : s.members()) phi[static_cast<std::size_t>(k)] += share;
  }
  return phi;
}

PayoffVector tau_zero_normalized(const TUGame& game) {
  const int n = game.players();
  const MobiusVector m = mobius_forward(game);
  Rational weighted = 0;
  PayoffVector covering(static_cast<std::size_t>(n), Rational(0));
  for (Mask mask = 1; mask < coalition_count(n); ++mask) {
    const Coalition s(mask);
    if (sgn(m(s)) == 0) continue;
    weighted += s.size() * m(s);
    for (Player p : s.members()) covering[static_cast<std::size_t>(p)] += m(s);
  }
  if (sgn(weighted) == 0) return PayoffVector(static_cast<std::size_t>(n), Rational(0));
  const Rational scale = game(game.grand()) / weighted;
  for (Rational& c : covering) c *= scale;
  return covering;
}

PlayerBound tau_interval(const PlayerCentered& g, Player k) {
  check_player(g, k);
  require_extendable(g, GameClass::kZeroNormalizedPositive);
  const TUGame v1 = v0_v1(g).v1;
  const TUGame top = zero_normalized_top(g);
  const auto idx = static_cast<std::size_t>(k);
  const PayoffVector at_v1 = tau_zero_normalized(v1);
  const PayoffVector at_top = tau_zero_normalized(top);
  if (at_v1 != tau_convex(v1) || at_top != tau_convex(top)) {
    throw InvariantError("tau-value forms disagree on a zero-normalised positive game");
  }
  if (k == g.center()) return make_bound(at_top[idx], at_v1[idx], top, v1);
  return make_bound(at_v1[idx], at_top[idx], v1, top);
}

SolutionBounds tau_bounds(const PlayerCentered& g) {
  SolutionBounds out{Concept::kTau, GameClass::kZeroNormalizedPositive, {}};
  for (Player k = 0; k < g.players(); ++k) out.per_player.push_back(tau_interval(g, k));
  return out;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser over the combined key.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PayoffVector evaluate(Concept c, const TUGame& game) {
  return c == Concept::kShapley ? shapley(game) : tau_convex(game);
}

SolutionBounds empirical_bounds(const PlayerCentered& g, GameClass cls, Concept c,
                                std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw ValidationError("at least one sample is needed");
  if (c == Concept::kTau && !class_has_tau(cls)) {
    throw ValidationError("the tau-value is only evaluated over classes of convex games");
  }
  const ExtensionSampler sampler(g, cls);
  const TUGame v1 = v0_v1(g).v1;
  const bool start_at_v1 = belongs_to(v1, cls);

  SolutionBounds out{c, cls, {}};
  for (std::size_t s = 0; s < samples; ++s) {
    TUGame w = (s == 0 && start_at_v1) ? v1 : sampler.sample(sample_seed(seed, s));
    const PayoffVector value = evaluate(c, w);
    if (out.per_player.empty()) {
      for (const Rational& x : value) out.per_player.push_back({{x, x}, w, w});
      continue;
    }
    for (std::size_t k = 0; k < value.size(); ++k) {
      PlayerBound& b = out.per_player[k];
      if (value[k] < b.interval.lo) {
        b.interval.lo = value[k];
        b.lo_witness = w;
      }
      if (value[k] > b.interval.hi) {
        b.interval.hi = value[k];
        b.hi_witness = w;
      }
    }
  }
  return out;
}

}  // namespace coopgap
