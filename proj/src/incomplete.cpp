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

#include "coopgap/incomplete.hpp"

#include <string>
#include <utility>

#include "coopgap/errors.hpp"
#include "coopgap/polyhedron.hpp"

namespace coopgap {

IncompleteGame::IncompleteGame(int n, const std::map<Coalition, Rational>& values) : n_(n) {
  if (n < 1 || n > kMaxPlayers) {
    throw ValidationError("player count must lie in [1, " + std::to_string(kMaxPlayers) + "]");
  }
  const std::size_t count = coalition_count(n);
  known_flag_.assign(count, false);
  values_.assign(count, Rational(0));
  known_.insert(Coalition::empty());
  known_flag_[0] = true;
  for (const auto& [s, worth] : values) {
    if (s.mask >= count) throw ValidationError("coalition " + to_string(s) + " outside the player set");
    if (s.is_empty()) {
      if (sgn(worth) != 0) throw ValidationError("the empty coalition must have worth 0");
      continue;
    }
    known_.insert(s);
    known_flag_[s.mask] = true;
    values_[s.mask] = worth;
  }
}

const Rational& IncompleteGame::value(Coalition s) const {
  if (s.mask >= values_.size() || !known_flag_[s.mask]) {
    throw ValidationError("worth of " + to_string(s) + " is not known");
  }
  return values_[s.mask];
}

PlayerCentered::PlayerCentered(IncompleteGame base, Player center)
    : base_(std::move(base)), center_(center) {
  const int n = base_.players();
  if (center < 0 || center >= n) throw ValidationError("center outside the player set");
  for (Mask m = 1; m < coalition_count(n); ++m) {
    const Coalition s(m);
    const bool should_know = s.contains(center);
    if (base_.is_known(s) != should_know) {
      throw ValidationError("known coalitions are not centered on player " + std::to_string(center) +
                            ": " + to_string(s) + (should_know ? " is missing" : " is unexpected"));
    }
    if (!should_know) unknown_.push_back(s);
  }
}

PlayerCentered PlayerCentered::from_values(int n, Player center,
                                           const std::map<Coalition, Rational>& values) {
  return PlayerCentered(IncompleteGame(n, values), center);
}

std::vector<Coalition> PlayerCentered::known_nonempty() const {
  std::vector<Coalition> out;
  for (Coalition s : base_.known()) {
    if (!s.is_empty()) out.push_back(s);
  }
  return out;
}

PlayerCentered restrict_game(const TUGame& game, Player center) {
  const int n = game.players();
  if (center < 0 || center >= n) throw ValidationError("center outside the player set");
  std::map<Coalition, Rational> values;
  for (Mask m = 1; m < coalition_count(n); ++m) {
    if (Coalition(m).contains(center)) values.emplace(Coalition(m), game(Coalition(m)));
  }
  return PlayerCentered::from_values(n, center, values);
}

std::map<Coalition, Rational> partial_mobius(const PlayerCentered& g) {
  const int n = g.players();
  const Player i = g.center();
  std::vector<Rational> a(coalition_count(n));
  for (Coalition s : g.known_nonempty()) a[s.mask] = g.value(s);
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const Mask bit = Mask{1} << j;
    for (Mask m = 0; m < a.size(); ++m) {
      if (Coalition(m).contains(i) && (m & bit)) a[m] -= a[m ^ bit];
    }
  }
  std::map<Coalition, Rational> out;
  for (Coalition s : g.known_nonempty()) out.emplace(s, std::move(a[s.mask]));
  return out;
}

bool is_positive_pc(const PlayerCentered& g) {
  for (const auto& [s, coeff] : partial_mobius(g)) {
    if (sgn(coeff) < 0) return false;
  }
  return true;
}

bool is_convex_pc(const PlayerCentered& g) {
  const int n = g.players();
  for (Coalition s : g.known_nonempty()) {
    for (int j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (s.contains(k)) continue;
        if (g.value(s.with(j)) + g.value(s.with(k)) > g.value(s) + g.value(s.with(j).with(k))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_monotone_pc(const PlayerCentered& g) {
  const int n = g.players();
  if (sgn(g.value(Coalition::singleton(g.center()))) < 0) return false;
  for (Coalition s : g.known_nonempty()) {
    for (int j = 0; j < n; ++j) {
      if (!s.contains(j) && g.value(s) > g.value(s.with(j))) return false;
    }
  }
  return true;
}

bool is_superadditive_pc(const PlayerCentered&) { return true; }

bool bk2018_feasible(const IncompleteGame& g) {
  const int n = g.players();
  const std::set<Coalition> closure = lattice_closure(n, g.known());
  std::vector<Coalition> family;
  for (Coalition s : closure) {
    bool below = false;
    for (Coalition hi : g.known()) below = below || s.subset_of(hi);
    if (below) family.push_back(s);
  }
  std::map<Coalition, std::size_t> index;
  for (Coalition s : family) {
    if (!s.is_empty()) index.emplace(s, index.size());
  }
  const std::size_t dim = index.size();
  HPolyhedron p(dim);
  auto add = [&](RationalVector& row, Coalition s, int coeff) {
    if (!s.is_empty()) row[index.at(s)] += coeff;
  };
  for (Coalition s : g.known()) {
    if (s.is_empty()) continue;
    RationalVector row(dim, Rational(0));
    add(row, s, 1);
    p.add_equality(std::move(row), g.value(s));
  }
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      const Coalition s = family[a];
      const Coalition t = family[b];
      if (s.subset_of(t) || t.subset_of(s)) continue;
      const Coalition cup = s | t;
      const Coalition cap = s & t;
      if (!cup.is_empty() && !index.contains(cup)) continue;
      if (!cap.is_empty() && !index.contains(cap)) continue;
      RationalVector row(dim, Rational(0));
      add(row, s, 1);
      add(row, t, 1);
      add(row, cup, -1);
      add(row, cap, -1);
      p.add_inequality(std::move(row), 0);
    }
  }
  return lp_feasible(p).feasible;
}

}  // namespace coopgap
