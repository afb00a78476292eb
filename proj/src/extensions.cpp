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

#include "coopgap/extensions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "coopgap/errors.hpp"
#include "coopgap/extension_polytope.hpp"
#include "coopgap/polyhedron.hpp"

namespace coopgap {
namespace {

// Largest |K^c| for which the (sigma, x) family is enumerated.
constexpr std::size_t kMonotoneFamilyLimit = 7;
// Largest number of free x coordinates for the positive vertex family.
constexpr std::size_t kPositiveFamilyLimit = 20;

bool by_worths(const TUGame& a, const TUGame& b) {
  return std::lexicographical_compare(a.by_mask().begin(), a.by_mask().end(), b.by_mask().begin(),
                                      b.by_mask().end());
}

std::vector<TUGame> sorted_unique(std::vector<TUGame> games) {
  std::sort(games.begin(), games.end(), by_worths);
  games.erase(std::unique(games.begin(), games.end()), games.end());
  return games;
}

void require(bool ok, const PlayerCentered&, GameClass cls) {
  if (!ok) throw NotExtendableError(std::string("game has no ") + std::string(to_string(cls)) + " extension");
}

void check_profile_size(const PlayerCentered& g, std::size_t size, const char* what) {
  if (size != g.unknown().size()) {
    throw ValidationError(std::string(what) + " must have one entry per unknown coalition (" +
                          std::to_string(g.unknown().size()) + ")");
  }
}

// Unknown coalition S -> its position in g.unknown().
std::vector<long> unknown_positions(const PlayerCentered& g) {
  std::vector<long> pos(coalition_count(g.players()), -1);
  for (std::size_t k = 0; k < g.unknown().size(); ++k) pos[g.unknown()[k].mask] = static_cast<long>(k);
  return pos;
}

TUGame fill_unknown(const PlayerCentered& g, const std::vector<Rational>& unknown_values) {
  std::vector<Rational> values(coalition_count(g.players()));
  for (Coalition s : g.known_nonempty()) values[s.mask] = g.value(s);
  for (std::size_t k = 0; k < g.unknown().size(); ++k) values[g.unknown()[k].mask] = unknown_values[k];
  return TUGame(g.players(), std::move(values));
}

}  // namespace

bool extendable(const PlayerCentered& g, GameClass cls) {
  switch (cls) {
    case GameClass::kMonotone:
    case GameClass::kMonotoneSuperadditive:
      return is_monotone_pc(g);
    case GameClass::kSuperadditive:
      return is_superadditive_pc(g);
    case GameClass::kConvex:
      return is_convex_pc(g);
    case GameClass::kPositive:
      return is_positive_pc(g);
    case GameClass::kMonotoneConvex:
      return is_monotone_pc(g) && is_convex_pc(g);
    case GameClass::kZeroNormalizedPositive:
      return sgn(g.value(Coalition::singleton(g.center()))) == 0 && is_positive_pc(g);
  }
  return false;
}

CanonicalPair v0_v1(const PlayerCentered& g) {
  std::vector<Rational> top, bottom(g.unknown().size(), Rational(0));
  for (Coalition s : g.unknown()) top.push_back(g.value(s.with(g.center())));
  return {fill_unknown(g, top), fill_unknown(g, bottom)};
}

TUGame positive_top(const PlayerCentered& g) {
  const Rational& vi = g.value(Coalition::singleton(g.center()));
  std::vector<Rational> top;
  for (Coalition s : g.unknown()) top.push_back(g.value(s.with(g.center())) - vi);
  return fill_unknown(g, top);
}

TUGame zero_normalized_top(const PlayerCentered& g) {
  BetaProfile beta;
  for (Coalition s : g.unknown()) beta.push_back(s.size() >= 2 ? Rational(1) : Rational(0));
  return beta_extension(g, beta);
}

TUGame vx_vertex(const PlayerCentered& g, const XVector& x) {
  require(is_positive_pc(g), g, GameClass::kPositive);
  check_profile_size(g, x.size(), "x");
  const auto pm = partial_mobius(g);
  const Player i = g.center();
  std::vector<Rational> m(coalition_count(g.players()));
  m[Coalition::singleton(i).mask] = g.value(Coalition::singleton(i));
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Coalition s = g.unknown()[k];
    if (x[k] > 1) throw ValidationError("x entries must be 0 or 1");
    m[(x[k] == 0 ? s : s.with(i)).mask] = pm.at(s.with(i));
  }
  return mobius_inverse(MobiusVector(g.players(), std::move(m)));
}

std::vector<TUGame> enumerate_positive_vertices(const PlayerCentered& g) {
  require(is_positive_pc(g), g, GameClass::kPositive);
  const auto pm = partial_mobius(g);
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < g.unknown().size(); ++k) {
    if (sgn(pm.at(g.unknown()[k].with(g.center()))) != 0) active.push_back(k);
  }
  if (active.size() > kPositiveFamilyLimit) {
    throw CapacityError("too many unknown coalitions with nonzero mass for the vertex family");
  }
  std::vector<TUGame> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << active.size()); ++bits) {
    XVector x(g.unknown().size(), 0);
    for (std::size_t a = 0; a < active.size(); ++a) x[active[a]] = (bits >> a) & 1U;
    out.push_back(vx_vertex(g, x));
  }
  return sorted_unique(std::move(out));
}

TUGame beta_extension(const PlayerCentered& g, const BetaProfile& beta) {
  require(is_positive_pc(g), g, GameClass::kPositive);
  check_profile_size(g, beta.size(), "beta");
  const auto pm = partial_mobius(g);
  const Player i = g.center();
  std::vector<Rational> m(coalition_count(g.players()));
  m[Coalition::singleton(i).mask] = g.value(Coalition::singleton(i));
  for (std::size_t k = 0; k < beta.size(); ++k) {
    if (sgn(beta[k]) < 0 || beta[k] > 1) throw ValidationError("beta entries must lie in [0, 1]");
    const Coalition s = g.unknown()[k];
    const Rational& mass = pm.at(s.with(i));
    m[s.mask] = beta[k] * mass;
    m[s.with(i).mask] = (1 - beta[k]) * mass;
  }
  return mobius_inverse(MobiusVector(g.players(), std::move(m)));
}

TUGame superadditive_witness(const PlayerCentered& g) {
  const int n = g.players();
  std::optional<Rational> least;
  for (Coalition s : g.unknown()) {
    for (Coalition t : g.known_nonempty()) {
      if (!s.disjoint(t)) continue;
      Rational slack = g.value(s | t) - g.value(t);
      if (!least || slack < *least) least = std::move(slack);
    }
  }
  Rational per_player = 0;
  if (least) per_player = sgn(*least) >= 0 ? *least / n : *least;
  std::vector<Rational> fill;
  for (Coalition s : g.unknown()) fill.push_back(per_player * s.size());
  return fill_unknown(g, fill);
}

TUGame vsigmax_vertex(const PlayerCentered& g, const SigmaOrder& sigma, const XVector& x) {
  require(is_monotone_pc(g), g, GameClass::kMonotone);
  check_profile_size(g, sigma.size(), "sigma");
  check_profile_size(g, x.size(), "x");
  const std::vector<long> pos = unknown_positions(g);
  std::vector<bool> seen(g.unknown().size(), false);
  for (Coalition s : sigma) {
    if (s.mask >= pos.size() || pos[s.mask] < 0 || seen[static_cast<std::size_t>(pos[s.mask])]) {
      throw ValidationError("sigma must order every unknown coalition exactly once");
    }
    seen[static_cast<std::size_t>(pos[s.mask])] = true;
  }

  const int n = g.players();
  std::vector<Rational> values(coalition_count(n));
  std::vector<bool> defined(coalition_count(n), false);
  defined[0] = true;
  for (Coalition s : g.known_nonempty()) {
    values[s.mask] = g.value(s);
    defined[s.mask] = true;
  }
  for (Coalition s : sigma) {
    const std::size_t k = static_cast<std::size_t>(pos[s.mask]);
    if (x[k] > 1) throw ValidationError("x entries must be 0 or 1");
    std::optional<Rational> best;
    for (Mask m = 0; m < coalition_count(n); ++m) {
      if (!defined[m] || m == s.mask) continue;
      const Coalition a(m);
      const bool candidate = x[k] == 1 ? s.subset_of(a) : a.subset_of(s);
      if (!candidate) continue;
      if (!best || (x[k] == 1 ? values[m] < *best : values[m] > *best)) best = values[m];
    }
    if (!best) throw InvariantError("v_{sigma,x} recursion found no predecessor");
    values[s.mask] = *best;
    defined[s.mask] = true;
  }
  return TUGame(n, std::move(values));
}

std::vector<TUGame> enumerate_monotone_vertices(const PlayerCentered& g) {
  require(is_monotone_pc(g), g, GameClass::kMonotone);
  const std::size_t u = g.unknown().size();
  if (u > kMonotoneFamilyLimit) {
    throw CapacityError("the (sigma, x) family is enumerated for at most " +
                        std::to_string(kMonotoneFamilyLimit) + " unknown coalitions");
  }
  const int n = g.players();
  std::vector<Rational> base(coalition_count(n));
  for (Coalition s : g.known_nonempty()) base[s.mask] = g.value(s);

  // Depth-first over (next coalition, x) with memoisation of partial states.
  using State = std::pair<std::uint32_t, std::vector<Rational>>;
  std::set<State> visited;
  std::vector<TUGame> out;
  std::vector<State> stack{{0U, base}};
  while (!stack.empty()) {
    State state = std::move(stack.back());
    stack.pop_back();
    if (!visited.insert(state).second) continue;
    const auto& [assigned, values] = state;
    if (assigned == (std::uint32_t{1} << u) - 1) {
      out.emplace_back(n, values);
      continue;
    }
    auto is_defined = [&](Mask m) {
      const Coalition a(m);
      if (a.is_empty() || a.contains(g.center())) return true;
      const auto it = std::find(g.unknown().begin(), g.unknown().end(), a);
      return ((assigned >> (it - g.unknown().begin())) & 1U) != 0;
    };
    for (std::size_t k = 0; k < u; ++k) {
      if ((assigned >> k) & 1U) continue;
      const Coalition s = g.unknown()[k];
      for (int branch = 0; branch < 2; ++branch) {
        std::optional<Rational> best;
        for (Mask m = 0; m < coalition_count(n); ++m) {
          if (m == s.mask || !is_defined(m)) continue;
          const Coalition a(m);
          const bool candidate = branch == 1 ? s.subset_of(a) : a.subset_of(s);
          if (!candidate) continue;
          if (!best || (branch == 1 ? values[m] < *best : values[m] > *best)) best = values[m];
        }
        State next{assigned | (std::uint32_t{1} << k), values};
        next.second[s.mask] = *best;
        if (!visited.contains(next)) stack.push_back(std::move(next));
      }
    }
  }
  return sorted_unique(std::move(out));
}

TUGame ray_eS0(int n, Player center, Coalition s0) {
  if (n < 1 || n > kMaxPlayers || center < 0 || center >= n) {
    throw ValidationError("invalid player count or center");
  }
  if (s0.is_empty() || s0.contains(center) || !s0.subset_of(Coalition::grand(n))) {
    throw ValidationError("S0 must be a nonempty coalition without the center");
  }
  std::vector<Rational> m(coalition_count(n));
  for_each_subset(s0, [&](Coalition t) {
    if (!t.is_empty()) m[t.mask] = t.size() % 2 == 0 ? 1 : -1;
  });
  TUGame inverse = mobius_inverse(MobiusVector(n, std::move(m)));
  std::vector<Rational> values(inverse.by_mask().begin(), inverse.by_mask().end());
  for (Mask mask = 1; mask < values.size(); ++mask) {
    if (Coalition(mask).contains(center)) values[mask] = 0;
  }
  return TUGame(n, std::move(values));
}

TUGame ray_neg_unanimity(int n, Player center, Player k) {
  if (n < 1 || n > kMaxPlayers || center < 0 || center >= n || k < 0 || k >= n) {
    throw ValidationError("invalid player count, center or player");
  }
  if (k == center) throw ValidationError("k must differ from the center");
  return TUGame::from_function(n, [&](Coalition s) {
    return (!s.contains(center) && s.contains(k)) ? Rational(-1) : Rational(0);
  });
}

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  // Uniform over {0, 1/q, ..., 1} with q drawn from 1..12.
  Rational unit() {
    const std::uint64_t q = 1 + below(12);
    Rational r(Integer(static_cast<unsigned long>(below(q + 1))),
               Integer(static_cast<unsigned long>(q)));
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 engine_;
};

TUGame combine(const std::vector<TUGame>& games, const std::vector<Rational>& weights) {
  std::vector<Rational> values(games.front().by_mask().size());
  for (std::size_t g = 0; g < games.size(); ++g) {
    if (sgn(weights[g]) == 0) continue;
    for (std::size_t m = 1; m < values.size(); ++m) values[m] += weights[g] * games[g].by_mask()[m];
  }
  return TUGame(games.front().players(), std::move(values));
}

}  // namespace

ExtensionSampler::ExtensionSampler(const PlayerCentered& g, GameClass cls) : g_(g), cls_(cls) {
  require(extendable(g, cls), g, cls);
  const int n = g.players();
  switch (cls) {
    case GameClass::kPositive:
    case GameClass::kZeroNormalizedPositive:
    case GameClass::kMonotone:
      break;
    case GameClass::kConvex:
    case GameClass::kSuperadditive:
    case GameClass::kMonotoneConvex:
    case GameClass::kMonotoneSuperadditive: {
      const VRep rep = vertex_enumeration(build_extension_polytope(g, cls));
      for (const RationalVector& x : rep.vertices) vertices_.push_back(from_coordinates(n, x));
      if (vertices_.empty()) throw InvariantError("extendable game produced an empty extension set");
      if (cls == GameClass::kConvex || cls == GameClass::kSuperadditive) {
        for (Coalition s : g.unknown()) rays_.push_back(ray_eS0(n, g.center(), s));
        if (cls == GameClass::kSuperadditive) {
          for (Player k = 0; k < n; ++k) {
            if (k != g.center()) rays_.push_back(ray_neg_unanimity(n, g.center(), k));
          }
        }
      }
      break;
    }
  }
}

TUGame ExtensionSampler::sample(std::uint64_t seed) const {
  Draw draw(seed);
  const std::size_t u = g_.unknown().size();
  switch (cls_) {
    case GameClass::kPositive:
    case GameClass::kZeroNormalizedPositive: {
      BetaProfile beta(u);
      for (std::size_t k = 0; k < u; ++k) {
        const bool pinned = cls_ == GameClass::kZeroNormalizedPositive && g_.unknown()[k].size() == 1;
        beta[k] = pinned ? Rational(0) : draw.unit();
      }
      return beta_extension(g_, beta);
    }
    case GameClass::kMonotone: {
      const std::size_t parts = 1 + draw.below(3);
      std::vector<TUGame> games;
      std::vector<Rational> weights;
      Integer total = 0;
      for (std::size_t p = 0; p < parts; ++p) {
        SigmaOrder sigma = g_.unknown();
        for (std::size_t k = sigma.size(); k > 1; --k) std::swap(sigma[k - 1], sigma[draw.below(k)]);
        XVector x(u);
        for (auto& b : x) b = static_cast<std::uint8_t>(draw.below(2));
        games.push_back(vsigmax_vertex(g_, sigma, x));
        const unsigned long w = 1 + draw.below(6);
        weights.emplace_back(static_cast<unsigned long>(w));
        total += w;
      }
      for (Rational& w : weights) w /= total;
      return combine(games, weights);
    }
    default: {
      std::vector<Rational> weights(vertices_.size(), Rational(0));
      const std::size_t parts = 1 + draw.below(std::min<std::size_t>(4, vertices_.size()));
      Integer total = 0;
      for (std::size_t p = 0; p < parts; ++p) {
        const unsigned long w = 1 + draw.below(6);
        weights[draw.below(vertices_.size())] += static_cast<unsigned long>(w);
        total += w;
      }
      for (Rational& w : weights) w /= total;
      TUGame out = combine(vertices_, weights);
      if (!rays_.empty()) {
        std::vector<Rational> multiples(rays_.size());
        for (Rational& c : multiples) c = draw.below(3) == 0 ? draw.unit() * 2 : Rational(0);
        out = out + combine(rays_, multiples);
      }
      return out;
    }
  }
}

TUGame sample_extension(const PlayerCentered& g, GameClass cls, std::uint64_t seed) {
  return ExtensionSampler(g, cls).sample(seed);
}

RayCensus ray_census(int n) {
  constexpr Player kCenter = 0;
  RayCensus out;
  out.n = n;
  const auto s_rays = extreme_ray_enumeration(reduce_recession_cone(n, kCenter, GameClass::kSuperadditive));
  const auto c_rays = extreme_ray_enumeration(reduce_recession_cone(n, kCenter, GameClass::kConvex));
  out.superadditive_rays = s_rays.size();
  out.convex_rays = c_rays.size();
  const std::set<RationalVector> s_set(s_rays.begin(), s_rays.end());
  const std::set<RationalVector> c_set(c_rays.begin(), c_rays.end());
  for (Player k = 0; k < n; ++k) {
    if (k == kCenter) continue;
    const RationalVector r = project_unknown(ray_neg_unanimity(n, kCenter, k), kCenter);
    out.neg_unanimity_rays += s_set.count(canonical_ray(r));
  }
  const Coalition others = Coalition::grand(n).without(kCenter);
  for (Mask m = 1; m < coalition_count(n); ++m) {
    const Coalition s0(m);
    if (!s0.subset_of(others)) continue;
    const RationalVector r = project_unknown(ray_eS0(n, kCenter, s0), kCenter);
    out.es0_rays += c_set.count(canonical_ray(r));
  }
  return out;
}

}  // namespace coopgap
