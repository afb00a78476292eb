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

#include "coopgap/game.hpp"

#include <algorithm>
#include <string>

#include "coopgap/errors.hpp"

namespace coopgap {

SetFunction::SetFunction(int n) : n_(n) {
  if (n < 1 || n > kMaxPlayers) {
    throw ValidationError("player count must lie in [1, " + std::to_string(kMaxPlayers) +
                          "], got " + std::to_string(n));
  }
  values_.assign(coalition_count(n), Rational(0));
}

SetFunction::SetFunction(int n, std::vector<Rational> by_mask) : SetFunction(n) {
  if (by_mask.size() != coalition_count(n)) {
    throw ValidationError("expected " + std::to_string(coalition_count(n)) +
                          " entries indexed by coalition mask, got " +
                          std::to_string(by_mask.size()));
  }
  if (sgn(by_mask[0]) != 0) throw ValidationError("value of the empty coalition must be 0");
  values_ = std::move(by_mask);
}

const Rational& SetFunction::at(Coalition s) const {
  if (s.mask >= values_.size()) {
    throw ValidationError("coalition " + to_string(s) + " outside the player set");
  }
  return values_[s.mask];
}

TUGame TUGame::with_value(Coalition s, const Rational& worth) const {
  if (s.is_empty()) throw ValidationError("cannot assign a worth to the empty coalition");
  std::vector<Rational> values(values_);
  values.at(s.mask) = worth;
  return TUGame(n_, std::move(values));
}

namespace {

void require_same_players(const SetFunction& a, const SetFunction& b) {
  if (a.players() != b.players()) throw ValidationError("games have different player counts");
}

}  // namespace

TUGame operator+(const TUGame& a, const TUGame& b) {
  require_same_players(a, b);
  return TUGame::from_function(a.players(), [&](Coalition s) { return Rational(a(s) + b(s)); });
}

TUGame operator-(const TUGame& a, const TUGame& b) {
  require_same_players(a, b);
  return TUGame::from_function(a.players(), [&](Coalition s) { return Rational(a(s) - b(s)); });
}

TUGame operator*(const Rational& alpha, const TUGame& v) {
  return TUGame::from_function(v.players(), [&](Coalition s) { return Rational(alpha * v(s)); });
}

std::string_view to_string(GameClass cls) {
  switch (cls) {
    case GameClass::kMonotone: return "monotone";
    case GameClass::kSuperadditive: return "superadditive";
    case GameClass::kConvex: return "convex";
    case GameClass::kPositive: return "positive";
    case GameClass::kMonotoneSuperadditive: return "monotone-superadditive";
    case GameClass::kMonotoneConvex: return "monotone-convex";
    case GameClass::kZeroNormalizedPositive: return "zero-normalized-positive";
  }
  return "unknown";
}

GameClass parse_game_class(std::string_view name) {
  for (GameClass cls : kAllGameClasses) {
    if (to_string(cls) == name) return cls;
  }
  throw ValidationError("unknown game class \"" + std::string(name) + "\"");
}

MobiusVector mobius_forward(const TUGame& game) {
  const int n = game.players();
  std::vector<Rational> m(game.by_mask().begin(), game.by_mask().end());
  for (int j = 0; j < n; ++j) {
    const Mask bit = Mask{1} << j;
    for (Mask s = 0; s < m.size(); ++s) {
      if (s & bit) m[s] -= m[s ^ bit];
    }
  }
  return MobiusVector(n, std::move(m));
}

TUGame mobius_inverse(const MobiusVector& coeffs) {
  const int n = coeffs.players();
  std::vector<Rational> v(coeffs.by_mask().begin(), coeffs.by_mask().end());
  for (int j = 0; j < n; ++j) {
    const Mask bit = Mask{1} << j;
    for (Mask s = 0; s < v.size(); ++s) {
      if (s & bit) v[s] += v[s ^ bit];
    }
  }
  return TUGame(n, std::move(v));
}

TUGame unanimity_game(int n, Coalition t) {
  if (t.is_empty()) throw ValidationError("unanimity game of the empty coalition is undefined");
  if (!t.subset_of(Coalition::grand(n))) {
    throw ValidationError("coalition " + to_string(t) + " outside the player set");
  }
  return TUGame::from_function(n, [&](Coalition s) { return Rational(t.subset_of(s) ? 1 : 0); });
}

bool is_monotone(const TUGame& game) {
  const int n = game.players();
  for (Mask s = 1; s < coalition_count(n); ++s) {
    const Coalition big(s);
    for (Player j : big.members()) {
      if (game(big.without(j)) > game(big)) return false;
    }
  }
  return true;
}

bool is_superadditive(const TUGame& game) {
  const Coalition grand = game.grand();
  for (Mask s = 1; s < coalition_count(game.players()); ++s) {
    const Coalition a(s);
    const Coalition rest = grand - a;
    // Each unordered pair {a, b} once: b ranges over nonempty subsets of the
    // complement with a larger mask.
    bool ok = true;
    for_each_subset(rest, [&](Coalition b) {
      if (!ok || b.mask <= a.mask) return;
      if (game(a) + game(b) > game(a | b)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_convex(const TUGame& game) {
  const int n = game.players();
  for (Mask s = 0; s < coalition_count(n); ++s) {
    const Coalition base(s);
    for (Player j = 0; j < n; ++j) {
      if (base.contains(j)) continue;
      for (Player k = j + 1; k < n; ++k) {
        if (base.contains(k)) continue;
        if (game(base.with(j)) + game(base.with(k)) > game(base) + game(base.with(j).with(k))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_convex_mobius(const MobiusVector& m) {
  const int n = m.players();
  const Coalition grand = m.grand();
  for (Player j = 0; j < n; ++j) {
    for (Player k = j + 1; k < n; ++k) {
      const Coalition pair = Coalition::of({j, k});
      bool ok = true;
      for_each_subset(grand - pair, [&](Coalition extra) {
        if (!ok) return;
        Rational sum = 0;
        for_each_subset(extra, [&](Coalition c) { sum += m(pair | c); });
        if (sgn(sum) < 0) ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool is_positive(const MobiusVector& m) {
  return std::all_of(m.by_mask().begin(), m.by_mask().end(),
                     [](const Rational& c) { return sgn(c) >= 0; });
}

bool is_zero_normalized(const TUGame& game) {
  for (Player j = 0; j < game.players(); ++j) {
    if (sgn(game(Coalition::singleton(j))) != 0) return false;
  }
  return true;
}

bool belongs_to(const TUGame& game, GameClass cls) {
  switch (cls) {
    case GameClass::kMonotone: return is_monotone(game);
    case GameClass::kSuperadditive: return is_superadditive(game);
    case GameClass::kConvex: return is_convex(game);
    case GameClass::kPositive: return is_positive(mobius_forward(game));
    case GameClass::kMonotoneSuperadditive: return is_monotone(game) && is_superadditive(game);
    case GameClass::kMonotoneConvex: return is_monotone(game) && is_convex(game);
    case GameClass::kZeroNormalizedPositive:
      return is_zero_normalized(game) && is_positive(mobius_forward(game));
  }
  return false;
}

PayoffVector upper_vector(const TUGame& game) {
  const Coalition grand = game.grand();
  PayoffVector b(game.players());
  for (Player i = 0; i < game.players(); ++i) b[i] = game(grand) - game(grand.without(i));
  return b;
}

Rational coalition_sum(std::span<const Rational> x, Coalition s) {
  Rational acc = 0;
  for (Player p : s.members()) acc += x[p];
  return acc;
}

Rational gap(const TUGame& game, Coalition s) {
  return coalition_sum(upper_vector(game), s) - game.at(s);
}

PayoffVector lower_vector(const TUGame& game) {
  const PayoffVector b = upper_vector(game);
  PayoffVector a(game.players());
  for (Player i = 0; i < game.players(); ++i) {
    bool first = true;
    for (Mask s = 1; s < coalition_count(game.players()); ++s) {
      const Coalition c(s);
      if (!c.contains(i)) continue;
      Rational concession = game(c) - coalition_sum(b, c.without(i));
      if (first || concession > a[i]) a[i] = concession;
      first = false;
    }
  }
  return a;
}

std::set<Coalition> lattice_closure(int n, const std::set<Coalition>& family) {
  if (!family.contains(Coalition::empty())) {
    throw ValidationError("lattice closure requires the empty coalition in the family");
  }
  const Coalition grand = Coalition::grand(n);
  for (Coalition s : family) {
    if (!s.subset_of(grand)) throw ValidationError("coalition outside the player set");
  }
  std::set<Coalition> closed = family;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Coalition> snapshot(closed.begin(), closed.end());
    for (std::size_t a = 0; a < snapshot.size(); ++a) {
      for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
        grew |= closed.insert(snapshot[a] | snapshot[b]).second;
        grew |= closed.insert(snapshot[a] & snapshot[b]).second;
      }
    }
  }
  return closed;
}

}  // namespace coopgap
