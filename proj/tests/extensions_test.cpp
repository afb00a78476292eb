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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "coopgap/errors.hpp"
#include "coopgap/extension_polytope.hpp"
#include "coopgap/extensions.hpp"
#include "coopgap/polyhedron.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace coopgap {
namespace {

PlayerCentered g3() {
  return PlayerCentered::from_values(3, 0,
                                     {{Coalition::of({0}), 0},
                                      {Coalition::of({0, 1}), 1},
                                      {Coalition::of({0, 2}), 1},
                                      {Coalition::of({0, 1, 2}), 3}});
}

bool agrees_on_known(const TUGame& w, const PlayerCentered& g) {
  for (Coalition s : g.known_nonempty()) {
    if (w(s) != g.value(s)) return false;
  }
  return true;
}

std::set<RationalVector> coordinates(const std::vector<TUGame>& games) {
  std::set<RationalVector> out;
  for (const TUGame& w : games) out.insert(to_coordinates(w));
  return out;
}

std::set<RationalVector> engine_vertices(const PlayerCentered& g, GameClass cls) {
  const VRep v = vertex_enumeration(build_extension_polytope(g, cls));
  return {v.vertices.begin(), v.vertices.end()};
}

TEST(ClassPolyhedronTest, CutsOutExactlyTheClass) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.integer(1, 4);
    TUGame v = gen::random_game(rng, n);
    switch (trial % 5) {
      case 1: v = gen::random_positive_game(rng, n); break;
      case 2: v = gen::random_convex_game(rng, n); break;
      case 3: v = gen::random_monotone_game(rng, n); break;
      case 4: v = gen::random_zero_normalized_positive_game(rng, n); break;
      default: break;
    }
    for (GameClass cls : kAllGameClasses) {
      ASSERT_EQ(class_polyhedron(n, cls).contains_point(to_coordinates(v)), belongs_to(v, cls))
          << to_string(cls);
    }
  }
}

TEST(ClassPolyhedronTest, CoordinatesRoundTrip) {
  gen::Rng rng(42);
  const TUGame v = gen::random_game(rng, 4);
  EXPECT_EQ(from_coordinates(4, to_coordinates(v)), v);
  EXPECT_EQ(game_coordinate(Coalition::of({0})), 0u);
  const PlayerCentered g = restrict_game(v, 1);
  const RationalVector r = project_unknown(v, 1);
  EXPECT_EQ(r.size(), g.unknown().size());
  const TUGame lifted = lift_unknown(4, 1, r);
  for (Coalition s : g.unknown()) EXPECT_EQ(lifted(s), v(s));
  for (Coalition s : g.known_nonempty()) EXPECT_EQ(lifted(s), 0);
}

TEST(ExtendableTest, AgreesWithLpForEveryClass) {
  gen::Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = rng.integer(1, 4);
    TUGame base = gen::random_game(rng, n);
    if (trial % 3 == 1) base = gen::random_positive_game(rng, n);
    if (trial % 3 == 2) base = gen::random_monotone_game(rng, n);
    const PlayerCentered g = gen::random_centered(rng, base);
    for (GameClass cls : kAllGameClasses) {
      ASSERT_EQ(extendable(g, cls), lp_feasible(build_extension_polytope(g, cls)).feasible)
          << to_string(cls);
    }
  }
}

TEST(CanonicalPairTest, G3) {
  const PlayerCentered g = g3();
  const CanonicalPair pair = v0_v1(g);
  EXPECT_EQ(pair.v0, TUGame(3, {0, 0, 1, 1, 1, 1, 3, 3}));
  EXPECT_EQ(pair.v1, TUGame(3, {0, 0, 0, 1, 0, 1, 0, 3}));
  EXPECT_EQ(positive_top(g), pair.v0);
  EXPECT_EQ(zero_normalized_top(g), TUGame(3, {0, 0, 0, 1, 0, 1, 1, 3}));
}

TEST(CanonicalPairTest, TopsDifferFromV0ByTheCenterWorth) {
  gen::Rng rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const PlayerCentered g = gen::random_centered(rng, gen::random_positive_game(rng, rng.integer(2, 4)));
    const CanonicalPair pair = v0_v1(g);
    const TUGame top = positive_top(g);
    const Rational vi = g.value(Coalition::singleton(g.center()));
    EXPECT_TRUE(belongs_to(pair.v1, GameClass::kPositive));
    EXPECT_TRUE(belongs_to(top, GameClass::kPositive));
    EXPECT_TRUE(agrees_on_known(pair.v1, g));
    EXPECT_TRUE(agrees_on_known(top, g));
    for (Coalition s : g.unknown()) {
      EXPECT_EQ(pair.v0(s), g.value(s.with(g.center())));
      EXPECT_EQ(top(s), pair.v0(s) - vi);
      EXPECT_EQ(pair.v1(s), 0);
    }
  }
}

TEST(PositiveVerticesTest, G3HasEight) {
  const auto family = enumerate_positive_vertices(g3());
  EXPECT_EQ(family.size(), 8u);
  EXPECT_EQ(coordinates(family), engine_vertices(g3(), GameClass::kPositive));
}

TEST(PositiveVerticesTest, SmallestCase) {
  const PlayerCentered g = PlayerCentered::from_values(2, 0, {{Coalition::of({0}), 0}, {Coalition::of({0, 1}), 1}});
  const auto family = enumerate_positive_vertices(g);
  ASSERT_EQ(family.size(), 2u);
  EXPECT_EQ(family[0](Coalition::of({1})), 0);
  EXPECT_EQ(family[1](Coalition::of({1})), 1);
}

TEST(PositiveVerticesTest, FamilyMatchesEngineAndRowSubsetOracle) {
  gen::Rng rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.integer(2, 3);
    const PlayerCentered g = gen::random_centered(rng, gen::random_positive_game(rng, n));
    const HPolyhedron p = build_extension_polytope(g, GameClass::kPositive);
    const auto family = coordinates(enumerate_positive_vertices(g));
    const VRep v = vertex_enumeration(p);
    EXPECT_TRUE(v.rays.empty());
    ASSERT_EQ(family, std::set<RationalVector>(v.vertices.begin(), v.vertices.end()));
    ASSERT_EQ(family, oracle::brute_vertices(p));
  }
}

TEST(PositiveVerticesTest, EveryVertexIsAPositiveExtension) {
  gen::Rng rng(46);
  for (int trial = 0; trial < 20; ++trial) {
    const PlayerCentered g = gen::random_centered(rng, gen::random_positive_game(rng, 4));
    const HPolyhedron p = build_extension_polytope(g, GameClass::kPositive);
    for (const TUGame& w : enumerate_positive_vertices(g)) {
      EXPECT_TRUE(belongs_to(w, GameClass::kPositive));
      EXPECT_TRUE(agrees_on_known(w, g));
      EXPECT_TRUE(is_extreme_point(p, to_coordinates(w)));
    }
  }
}

TEST(BetaExtensionTest, EndpointsAreVertices) {
  gen::Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const PlayerCentered g = gen::random_centered(rng, gen::random_positive_game(rng, rng.integer(2, 4)));
    const std::size_t k = g.unknown().size();
    EXPECT_EQ(beta_extension(g, BetaProfile(k, Rational(1))), vx_vertex(g, XVector(k, 0)));
    EXPECT_EQ(beta_extension(g, BetaProfile(k, Rational(0))), vx_vertex(g, XVector(k, 1)));
    EXPECT_EQ(beta_extension(g, BetaProfile(k, Rational(1))), positive_top(g));
    EXPECT_EQ(beta_extension(g, BetaProfile(k, Rational(0))), v0_v1(g).v1);
    BetaProfile beta(k);
    for (auto& b : beta) b = rng.rational(0, 1, 5);
    const TUGame w = beta_extension(g, beta);
    EXPECT_TRUE(belongs_to(w, GameClass::kPositive));
    EXPECT_TRUE(agrees_on_known(w, g));
  }
}

TEST(BetaExtensionTest, G3HalfProfile) {
  const TUGame w = beta_extension(g3(), BetaProfile(3, Rational(1, 2)));
  EXPECT_EQ(w(Coalition::of({1})), Rational(1, 2));
  EXPECT_EQ(w(Coalition::of({2})), Rational(1, 2));
  EXPECT_EQ(w(Coalition::of({1, 2})), Rational(3, 2));
  EXPECT_THROW(beta_extension(g3(), BetaProfile(2, Rational(0))), ValidationError);
  EXPECT_THROW(beta_extension(g3(), BetaProfile(3, Rational(2))), ValidationError);
}

TEST(SuperadditiveWitnessTest, AlwaysSuperadditive) {
  gen::Rng rng(48);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(1, 4);
    const Player center = static_cast<Player>(rng.integer(0, n - 1));
    std::map<Coalition, Rational> values;
    for (Mask m = 1; m < coalition_count(n); ++m) {
      if (Coalition(m).contains(center)) values[Coalition(m)] = rng.rational(-4, 4, 3);
    }
    const PlayerCentered g = PlayerCentered::from_values(n, center, values);
    const TUGame w = superadditive_witness(g);
    ASSERT_TRUE(oracle::superadditive_all_pairs(w));
    ASSERT_TRUE(agrees_on_known(w, g));
  }
}

TEST(SuperadditiveWitnessTest, LossMakingCenter) {
  // v(0) = 5 above v(01) = 2: the unknown worth must drop to 2 - 5.
  const PlayerCentered g = PlayerCentered::from_values(2, 0, {{Coalition::of({0}), 5}, {Coalition::of({0, 1}), 2}});
  const TUGame w = superadditive_witness(g);
  EXPECT_EQ(w(Coalition::of({1})), -3);
  EXPECT_TRUE(is_superadditive(w));
}

// Worths of {1}, {2}, {1,2} in a three-player game centered at 0.
std::vector<Rational> unknown_worths(const TUGame& w) {
  return {w(Coalition::of({1})), w(Coalition::of({2})), w(Coalition::of({1, 2}))};
}

std::vector<Rational> worths(int a, int b, int c) { return {a, b, c}; }

TEST(HandComputedTest, G3VertexRecursions) {
  const PlayerCentered g = g3();
  EXPECT_EQ(unknown_worths(vx_vertex(g, XVector{1, 0, 1})), worths(0, 1, 1));
  const SigmaOrder sigma{Coalition::of({1}), Coalition::of({2}), Coalition::of({1, 2})};
  EXPECT_EQ(unknown_worths(vsigmax_vertex(g, sigma, XVector{1, 1, 1})), worths(1, 1, 3));
  EXPECT_EQ(unknown_worths(vsigmax_vertex(g, sigma, XVector{0, 0, 0})), worths(0, 0, 0));
  EXPECT_EQ(unknown_worths(vsigmax_vertex(g, sigma, XVector{1, 0, 0})), worths(1, 0, 1));
  EXPECT_EQ(unknown_worths(superadditive_witness(g)),
            (std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(2, 3)}));
}

TEST(HandComputedTest, ConvexRayGames) {
  EXPECT_EQ(unknown_worths(ray_eS0(3, 0, Coalition::of({1}))), worths(-1, 0, -1));
  EXPECT_EQ(unknown_worths(ray_eS0(3, 0, Coalition::of({1, 2}))), worths(-1, -1, -1));
  const TUGame e = ray_eS0(3, 0, Coalition::of({1, 2}));
  for (Mask m = 1; m < 8; ++m) {
    if (Coalition(m).contains(0)) {
      EXPECT_EQ(e(Coalition(m)), 0);
    }
  }
  EXPECT_THROW(ray_eS0(3, 0, Coalition::of({0, 1})), ValidationError);
  EXPECT_THROW(ray_eS0(3, 0, Coalition::empty()), ValidationError);
}

TEST(HandComputedTest, UnanimityRestrictions) {
  // Only N \ i carries mass, so the positive family has two members.
  const PlayerCentered g = restrict_game(unanimity_game(3, Coalition::grand(3)), 0);
  EXPECT_EQ(enumerate_positive_vertices(g).size(), 2u);
  const TUGame w = superadditive_witness(g);
  EXPECT_EQ(unknown_worths(w), worths(0, 0, 0));
}

TEST(MonotoneVerticesTest, G3MatchesEngine) {
  const auto family = enumerate_monotone_vertices(g3());
  EXPECT_EQ(coordinates(family), engine_vertices(g3(), GameClass::kMonotone));
  EXPECT_EQ(family.size(), 8u);
}

TEST(MonotoneVerticesTest, FamilyMatchesEngine) {
  gen::Rng rng(49);
  for (int trial = 0; trial < 25; ++trial) {
    const PlayerCentered g = gen::random_centered(rng, gen::random_monotone_game(rng, 3));
    const auto family = enumerate_monotone_vertices(g);
    for (const TUGame& w : family) {
      ASSERT_TRUE(oracle::monotone_all_pairs(w));
      ASSERT_TRUE(agrees_on_known(w, g));
    }
    const HPolyhedron p = build_extension_polytope(g, GameClass::kMonotone);
    ASSERT_EQ(coordinates(family), engine_vertices(g, GameClass::kMonotone));
    ASSERT_EQ(coordinates(family), oracle::brute_vertices(p));
  }
}

TEST(MonotoneVerticesTest, SigmaXVertexDefinition) {
  const PlayerCentered g = g3();
  // sigma lists K^c with supersets before subsets; x picks "carry" or "zero".
  const SigmaOrder sigma{Coalition::of({1, 2}), Coalition::of({1}), Coalition::of({2})};
  const TUGame w = vsigmax_vertex(g, sigma, XVector{1, 0, 1});
  EXPECT_TRUE(is_monotone(w));
  EXPECT_TRUE(agrees_on_known(w, g));
  EXPECT_TRUE(is_extreme_point(build_extension_polytope(g, GameClass::kMonotone), to_coordinates(w)));
}

TEST(RayFamilyTest, MembersAreExtremeRays) {
  for (int n = 2; n <= 4; ++n) {
    for (Player center = 0; center < n; ++center) {
      const HPolyhedron conv = reduce_recession_cone(n, center, GameClass::kConvex);
      const HPolyhedron sup = reduce_recession_cone(n, center, GameClass::kSuperadditive);
      const Coalition others = Coalition::grand(n).without(center);
      for_each_subset(others, [&](Coalition s0) {
        if (s0.is_empty()) return;
        const TUGame e = ray_eS0(n, center, s0);
        EXPECT_TRUE(is_convex(e));
        EXPECT_TRUE(is_extreme_ray(conv, project_unknown(e, center)));
      });
      for (Player k = 0; k < n; ++k) {
        if (k == center) {
          EXPECT_THROW(ray_neg_unanimity(n, center, k), ValidationError);
          continue;
        }
        const TUGame u = ray_neg_unanimity(n, center, k);
        EXPECT_TRUE(is_superadditive(u));
        EXPECT_TRUE(is_extreme_ray(sup, project_unknown(u, center)));
        for (Mask m = 1; m < coalition_count(n); ++m) {
          const Coalition s(m);
          EXPECT_EQ(u(s), !s.contains(center) && s.contains(k) ? -1 : 0);
        }
      }
    }
  }
}

TEST(RayFamilyTest, ReducedConesMatchFullRecessionCones) {
  const PlayerCentered g = g3();
  for (GameClass cls : {GameClass::kConvex, GameClass::kSuperadditive}) {
    const VRep v = vertex_enumeration(build_extension_polytope(g, cls));
    std::set<RationalVector> lifted;
    for (const auto& r : extreme_ray_enumeration(reduce_recession_cone(g, cls))) {
      lifted.insert(to_coordinates(lift_unknown(3, 0, r)));
    }
    EXPECT_EQ(std::set<RationalVector>(v.rays.begin(), v.rays.end()), lifted);
  }
  EXPECT_THROW(reduce_recession_cone(3, 0, GameClass::kPositive), ValidationError);
}

TEST(RayCensusTest, SmallPlayerCounts) {
  const std::size_t s_rays[] = {0, 1, 4, 22, 3120};
  const std::size_t c_rays[] = {0, 1, 3, 8, 41};
  for (int n = 1; n <= 5; ++n) {
    const RayCensus c = ray_census(n);
    EXPECT_EQ(c.superadditive_rays, s_rays[n - 1]);
    EXPECT_EQ(c.convex_rays, c_rays[n - 1]);
    EXPECT_EQ(c.neg_unanimity_rays, static_cast<std::size_t>(n - 1));
    EXPECT_EQ(c.es0_rays, (std::size_t{1} << (n - 1)) - 1);
  }
}

TEST(RayCensusTest, EngineMatchesRowSubsetOracle) {
  for (int n = 1; n <= 3; ++n) {
    for (GameClass cls : {GameClass::kConvex, GameClass::kSuperadditive}) {
      const HPolyhedron cone = reduce_recession_cone(n, 0, cls);
      std::set<RationalVector> engine;
      for (const auto& r : extreme_ray_enumeration(cone)) engine.insert(oracle::normalise_direction(r));
      EXPECT_EQ(engine, oracle::brute_rays(cone)) << n << " " << to_string(cls);
    }
  }
}

TEST(SamplerTest, SamplesAreExtensionsInTheClass) {
  gen::Rng rng(50);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.integer(2, 4);
    TUGame base = gen::random_positive_game(rng, n);
    if (trial % 4 == 1) base = gen::random_monotone_game(rng, n);
    if (trial % 4 == 2) base = gen::random_convex_game(rng, n);
    if (trial % 4 == 3) base = gen::random_zero_normalized_positive_game(rng, n);
    const PlayerCentered g = gen::random_centered(rng, base);
    for (GameClass cls : kAllGameClasses) {
      if (!extendable(g, cls)) {
        EXPECT_THROW(ExtensionSampler(g, cls), NotExtendableError);
        continue;
      }
      const ExtensionSampler sampler(g, cls);
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const TUGame w = sampler.sample(seed);
        ASSERT_TRUE(belongs_to(w, cls)) << to_string(cls);
        ASSERT_TRUE(agrees_on_known(w, g));
      }
    }
  }
}

TEST(SamplerTest, Deterministic) {
  for (GameClass cls : kAllGameClasses) {
    const ExtensionSampler a(g3(), cls);
    const ExtensionSampler b(g3(), cls);
    for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
      EXPECT_EQ(a.sample(seed), b.sample(seed));
      EXPECT_EQ(sample_extension(g3(), cls, seed), a.sample(seed));
    }
  }
}

}  // namespace
}  // namespace coopgap
