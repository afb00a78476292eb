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

#include "coopgap/extension_polytope.hpp"

#include <vector>

#include "coopgap/errors.hpp"

namespace coopgap {
namespace {

class RowBuilder {
 public:
  explicit RowBuilder(std::size_t dim) : row_(dim, Rational(0)) {}
  RowBuilder& add(Coalition s, int coeff) {
    if (!s.is_empty()) row_[game_coordinate(s)] += coeff;
    return *this;
  }
  RationalVector take() { return std::move(row_); }

 private:
  RationalVector row_;
};

void add_monotone(HPolyhedron& p, int n) {
  for (Mask m = 0; m < coalition_count(n); ++m) {
    const Coalition s(m);
    for (int j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      p.add_inequality(RowBuilder(p.dim()).add(s, 1).add(s.with(j), -1).take(), 0);
    }
  }
}

void add_superadditive(HPolyhedron& p, int n) {
  for (Mask a = 1; a < coalition_count(n); ++a) {
    for (Mask b = a + 1; b < coalition_count(n); ++b) {
      if ((a & b) != 0) continue;
      const Coalition s(a), t(b);
      p.add_inequality(RowBuilder(p.dim()).add(s, 1).add(t, 1).add(s | t, -1).take(), 0);
    }
  }
}

void add_convex(HPolyhedron& p, int n) {
  for (Mask m = 0; m < coalition_count(n); ++m) {
    const Coalition s(m);
    for (int j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (s.contains(k)) continue;
        p.add_inequality(RowBuilder(p.dim())
                             .add(s.with(j), 1)
                             .add(s.with(k), 1)
                             .add(s, -1)
                             .add(s.with(j).with(k), -1)
                             .take(),
                         0);
      }
    }
  }
}

void add_positive(HPolyhedron& p, int n) {
  for (Mask m = 1; m < coalition_count(n); ++m) {
    const Coalition t(m);
    RowBuilder row(p.dim());
    for_each_subset(t, [&](Coalition s) { row.add(s, ((t - s).size() % 2 == 0) ? -1 : 1); });
    p.add_inequality(row.take(), 0);
  }
}

}  // namespace

RationalVector to_coordinates(const TUGame& game) {
  const auto values = game.by_mask();
  return RationalVector(values.begin() + 1, values.end());
}

TUGame from_coordinates(int n, std::span<const Rational> x) {
  if (x.size() + 1 != coalition_count(n)) throw ValidationError("coordinate vector has the wrong length");
  std::vector<Rational> values(coalition_count(n));
  for (std::size_t c = 0; c < x.size(); ++c) values[c + 1] = x[c];
  return TUGame(n, std::move(values));
}

HPolyhedron class_polyhedron(int n, GameClass cls) {
  HPolyhedron p(coalition_count(n) - 1);
  switch (cls) {
    case GameClass::kMonotone:
      add_monotone(p, n);
      break;
    case GameClass::kSuperadditive:
      add_superadditive(p, n);
      break;
    case GameClass::kConvex:
      add_convex(p, n);
      break;
    case GameClass::kPositive:
      add_positive(p, n);
      break;
    case GameClass::kMonotoneSuperadditive:
      add_monotone(p, n);
      add_superadditive(p, n);
      break;
    case GameClass::kMonotoneConvex:
      add_monotone(p, n);
      add_convex(p, n);
      break;
    case GameClass::kZeroNormalizedPositive:
      add_positive(p, n);
      for (int k = 0; k < n; ++k) {
        p.add_equality(RowBuilder(p.dim()).add(Coalition::singleton(k), 1).take(), 0);
      }
      break;
  }
  return p;
}

HPolyhedron build_extension_polytope(const PlayerCentered& g, GameClass cls) {
  HPolyhedron p = class_polyhedron(g.players(), cls);
  for (Coalition s : g.known_nonempty()) {
    p.add_equality(RowBuilder(p.dim()).add(s, 1).take(), g.value(s));
  }
  return p;
}

HPolyhedron reduce_recession_cone(int n, Player center, GameClass cls) {
  if (n < 1 || n > kMaxPlayers || center < 0 || center >= n) {
    throw ValidationError("invalid player count or center");
  }
  std::vector<long> position(coalition_count(n), -1);
  std::size_t dim = 0;
  for (Mask m = 1; m < coalition_count(n); ++m) {
    if (!Coalition(m).contains(center)) position[m] = static_cast<long>(dim++);
  }
  HPolyhedron cone(dim);
  auto row = [&](std::initializer_list<std::pair<Coalition, int>> terms) {
    RationalVector r(dim, Rational(0));
    for (const auto& [s, c] : terms) {
      if (!s.is_empty()) r[static_cast<std::size_t>(position[s.mask])] += c;
    }
    cone.add_inequality(std::move(r), 0);
  };

  switch (cls) {
    case GameClass::kConvex:
      for (Mask m = 1; m < coalition_count(n); ++m) {
        const Coalition s(m);
        if (s.contains(center)) continue;
        const std::vector<Player> members = s.members();
        if (s.size() == 1) row({{s, 1}});
        for (std::size_t a = 0; a < members.size(); ++a) {
          if (s.size() > 1) row({{s, 1}, {s.without(members[a]), -1}});
          for (std::size_t b = a + 1; b < members.size(); ++b) {
            const Player j = members[a], k = members[b];
            row({{s.without(j), 1}, {s.without(k), 1}, {s.without(j).without(k), -1}, {s, -1}});
          }
        }
      }
      break;
    case GameClass::kSuperadditive:
      for (Mask a = 1; a < coalition_count(n); ++a) {
        const Coalition s(a);
        if (s.contains(center)) continue;
        row({{s, 1}});
        for (Mask b = a + 1; b < coalition_count(n); ++b) {
          const Coalition t(b);
          if (t.contains(center) || !s.disjoint(t)) continue;
          row({{s, 1}, {t, 1}, {s | t, -1}});
        }
      }
      break;
    default:
      throw ValidationError("reduced recession cones exist for the convex and superadditive classes only");
  }
  return cone;
}

HPolyhedron reduce_recession_cone(const PlayerCentered& g, GameClass cls) {
  return reduce_recession_cone(g.players(), g.center(), cls);
}

TUGame lift_unknown(int n, Player center, std::span<const Rational> r) {
  std::vector<Rational> values(coalition_count(n));
  std::size_t next = 0;
  for (Mask m = 1; m < coalition_count(n); ++m) {
    if (Coalition(m).contains(center)) continue;
    if (next >= r.size()) throw ValidationError("unknown-coordinate vector too short");
    values[m] = r[next++];
  }
  if (next != r.size()) throw ValidationError("unknown-coordinate vector too long");
  return TUGame(n, std::move(values));
}

RationalVector project_unknown(const TUGame& game, Player center) {
  RationalVector out;
  for (Mask m = 1; m < coalition_count(game.players()); ++m) {
    if (!Coalition(m).contains(center)) out.push_back(game(Coalition(m)));
  }
  return out;
}

}  // namespace coopgap
