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

#include <set>

#include "coopgap/coalition.hpp"
#include "coopgap/errors.hpp"
#include "coopgap/game.hpp"
#include "coopgap/rational.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace coopgap {
namespace {

TEST(RationalTest, CanonicalText) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-6/3")), "-2");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
}

TEST(RationalTest, RejectsMalformed) {
  for (const char* bad : {"", "1/0", "1/x", " 1", "1/", "/2", "1.5", "--1", "1/-2"}) {
    EXPECT_THROW(parse_rational(bad), ValidationError) << bad;
  }
}

TEST(RationalTest, Factorial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
}

TEST(CoalitionTest, SetOperations) {
  const Coalition s = Coalition::of({0, 2});
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.with(1), Coalition::grand(3));
  EXPECT_EQ(s.without(0), Coalition::singleton(2));
  EXPECT_TRUE(s.subset_of(Coalition::grand(3)));
  EXPECT_TRUE(s.disjoint(Coalition::singleton(1)));
  EXPECT_EQ(to_string(s), "{0,2}");
  EXPECT_EQ(s.members(), (std::vector<Player>{0, 2}));
}

TEST(CoalitionTest, SubsetEnumerationVisitsEverySubsetOnce) {
  for (int n = 0; n <= 6; ++n) {
    std::set<Mask> seen;
    for_each_subset(Coalition::grand(n), [&](Coalition t) { EXPECT_TRUE(seen.insert(t.mask).second); });
    EXPECT_EQ(seen.size(), coalition_count(n));
  }
}

TEST(SetFunctionTest, RejectsBadShape) {
  EXPECT_THROW(TUGame(2, std::vector<Rational>{1, 0, 0, 0}), ValidationError);
  EXPECT_THROW(TUGame(2, std::vector<Rational>{0, 0, 0}), ValidationError);
  EXPECT_THROW(unanimity_game(3, Coalition::empty()), ValidationError);
}

TEST(MobiusTest, UnanimityGameHasIndicatorCoefficients) {
  const Coalition t = Coalition::of({1, 2});
  const MobiusVector m = mobius_forward(unanimity_game(4, t));
  for (Mask s = 1; s < coalition_count(4); ++s) {
    EXPECT_EQ(m(Coalition(s)), Coalition(s) == t ? 1 : 0);
  }
}

TEST(MobiusTest, RoundTripIsExact) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const TUGame v = gen::random_game(rng, rng.integer(1, 6));
    EXPECT_EQ(mobius_inverse(mobius_forward(v)), v);
  }
}

TEST(MobiusTest, MatchesAlternatingSum) {
  gen::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const TUGame v = gen::random_game(rng, rng.integer(1, 5));
    const MobiusVector m = mobius_forward(v);
    for (Mask s = 1; s < coalition_count(v.players()); ++s) {
      ASSERT_EQ(m(Coalition(s)), oracle::mobius_literal(v, Coalition(s)));
    }
  }
}

TEST(MobiusTest, Linear) {
  gen::Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.integer(1, 5);
    const TUGame a = gen::random_game(rng, n);
    const TUGame b = gen::random_game(rng, n);
    const Rational alpha = rng.rational(-3, 3, 5);
    const MobiusVector lhs = mobius_forward(alpha * a + b);
    const MobiusVector ma = mobius_forward(a);
    const MobiusVector mb = mobius_forward(b);
    for (Mask s = 1; s < coalition_count(n); ++s) {
      ASSERT_EQ(lhs(Coalition(s)), alpha * ma(Coalition(s)) + mb(Coalition(s)));
    }
  }
}

TEST(PredicateTest, PositiveCoefficientsGiveAPositiveConvexGame) {
  gen::Rng rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const TUGame v = gen::random_positive_game(rng, rng.integer(1, 5));
    EXPECT_TRUE(is_positive(mobius_forward(v)));
    EXPECT_TRUE(is_convex(v));
    EXPECT_TRUE(is_monotone(v));
    EXPECT_TRUE(is_superadditive(v));
  }
}

TEST(PredicateTest, NegativePairCoefficientIsNotPositive) {
  const MobiusVector m = MobiusVector::from_function(3, [](Coalition s) {
    return s == Coalition::of({0, 1}) ? Rational(-1) : Rational(0);
  });
  EXPECT_FALSE(is_positive(m));
  EXPECT_FALSE(is_convex_mobius(m));
}

TEST(PredicateTest, LocalChecksAgreeWithAllPairs) {
  gen::Rng rng(15);
  int convex = 0, monotone = 0, superadditive = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.integer(1, 4);
    TUGame v = gen::random_game(rng, n);
    switch (trial % 4) {
      case 1: v = gen::random_convex_game(rng, n); break;
      case 2: v = gen::random_monotone_game(rng, n); break;
      case 3: v = gen::random_superadditive_game(rng, n); break;
      default: break;
    }
    const bool c = oracle::convex_all_pairs(v);
    const bool m = oracle::monotone_all_pairs(v);
    const bool s = oracle::superadditive_all_pairs(v);
    ASSERT_EQ(is_convex(v), c);
    ASSERT_EQ(is_convex_mobius(mobius_forward(v)), c);
    ASSERT_EQ(is_monotone(v), m);
    ASSERT_EQ(is_superadditive(v), s);
    ASSERT_EQ(is_positive(mobius_forward(v)), oracle::positive_literal(v));
    convex += c;
    monotone += m;
    superadditive += s;
  }
  // The generators must exercise both outcomes.
  EXPECT_GT(convex, 50);
  EXPECT_LT(convex, 350);
  EXPECT_GT(monotone, 50);
  EXPECT_GT(superadditive, 50);
}

TEST(PredicateTest, ClassMembership) {
  gen::Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const TUGame v = trial % 2 ? gen::random_positive_game(rng, 3) : gen::random_game(rng, 3);
    const bool mono = oracle::monotone_all_pairs(v);
    const bool sup = oracle::superadditive_all_pairs(v);
    const bool conv = oracle::convex_all_pairs(v);
    const bool pos = oracle::positive_literal(v);
    bool zero_normalized = true;
    for (Player j = 0; j < 3; ++j) zero_normalized = zero_normalized && v(Coalition::singleton(j)) == 0;
    EXPECT_EQ(belongs_to(v, GameClass::kMonotone), mono);
    EXPECT_EQ(belongs_to(v, GameClass::kSuperadditive), sup);
    EXPECT_EQ(belongs_to(v, GameClass::kConvex), conv);
    EXPECT_EQ(belongs_to(v, GameClass::kPositive), pos);
    EXPECT_EQ(belongs_to(v, GameClass::kMonotoneSuperadditive), mono && sup);
    EXPECT_EQ(belongs_to(v, GameClass::kMonotoneConvex), mono && conv);
    EXPECT_EQ(belongs_to(v, GameClass::kZeroNormalizedPositive), pos && zero_normalized);
    EXPECT_EQ(is_zero_normalized(v), zero_normalized);
  }
}

TEST(GameClassTest, NamesRoundTrip) {
  for (GameClass cls : kAllGameClasses) EXPECT_EQ(parse_game_class(to_string(cls)), cls);
  EXPECT_THROW(parse_game_class("balanced"), ValidationError);
}

TEST(VectorTest, UpperAndLowerVectors) {
  // v(1) = 1, v(2) = 2, v(12) = 5: b = (3, 4), a_1 = max(1, 5 - 4) = 1.
  const TUGame v(2, {0, 1, 2, 5});
  EXPECT_EQ(upper_vector(v), (PayoffVector{3, 4}));
  EXPECT_EQ(lower_vector(v), (PayoffVector{1, 2}));
  EXPECT_EQ(gap(v, Coalition::grand(2)), 2);
  EXPECT_EQ(gap(v, Coalition::singleton(0)), 2);
}

TEST(VectorTest, GapIsUtopiaSurplus) {
  gen::Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const TUGame v = gen::random_game(rng, rng.integer(1, 4));
    const PayoffVector b = upper_vector(v);
    for (Mask s = 1; s < coalition_count(v.players()); ++s) {
      ASSERT_EQ(gap(v, Coalition(s)), coalition_sum(b, Coalition(s)) - v(Coalition(s)));
    }
  }
}

bool closed(const std::set<Coalition>& f) {
  for (Coalition a : f) {
    for (Coalition b : f) {
      if (!f.contains(a | b) || !f.contains(a & b)) return false;
    }
  }
  return true;
}

TEST(LatticeClosureTest, SmallExample) {
  const std::set<Coalition> family{Coalition::empty(), Coalition::of({0, 1}), Coalition::of({1, 2})};
  const std::set<Coalition> want{Coalition::empty(), Coalition::of({1}), Coalition::of({0, 1}),
                                 Coalition::of({1, 2}), Coalition::of({0, 1, 2})};
  EXPECT_EQ(lattice_closure(3, family), want);
}

TEST(LatticeClosureTest, ClosedContainingAndMinimal) {
  gen::Rng rng(18);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.integer(1, 4);
    std::set<Coalition> family{Coalition::empty()};
    for (Mask m = 1; m < coalition_count(n); ++m) {
      if (rng.coin(25)) family.insert(Coalition(m));
    }
    const auto c = lattice_closure(n, family);
    EXPECT_TRUE(closed(c));
    for (Coalition s : family) EXPECT_TRUE(c.contains(s));
    // Every member is an intersection of unions of family members.
    std::set<Coalition> generated = family;
    bool grew = true;
    while (grew) {
      grew = false;
      const auto snapshot = generated;
      for (Coalition a : snapshot) {
        for (Coalition b : snapshot) grew |= generated.insert(a | b).second | generated.insert(a & b).second;
      }
    }
    EXPECT_EQ(c, generated);
  }
  EXPECT_THROW(lattice_closure(2, {Coalition::of({0})}), ValidationError);
}

}  // namespace
}  // namespace coopgap
