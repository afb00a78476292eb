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

// Complete TU games, their Moebius transform, and the class predicates.

#ifndef COOPGAP_GAME_HPP_
#define COOPGAP_GAME_HPP_

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coopgap/coalition.hpp"
#include "coopgap/rational.hpp"

namespace coopgap {

using PayoffVector = std::vector<Rational>;

// Dense set function on 2^N indexed by coalition mask. Entry 0 (the empty
// coalition) is always zero. Shared storage for games and Moebius vectors.
class SetFunction {
 public:
  // The zero function on n players.
  explicit SetFunction(int n);
  // `by_mask` must hold 2^n entries with by_mask[0] == 0.
  SetFunction(int n, std::vector<Rational> by_mask);

  int players() const { return n_; }
  Coalition grand() const { return Coalition::grand(n_); }
  const Rational& operator()(Coalition s) const { return values_[s.mask]; }
  const Rational& at(Coalition s) const;
  std::span<const Rational> by_mask() const { return values_; }

  bool operator==(const SetFunction&) const = default;

 protected:
  int n_;
  std::vector<Rational> values_;
};

// Characteristic function v with v(empty) = 0 on every nonempty coalition.
class TUGame : public SetFunction {
 public:
  using SetFunction::SetFunction;

  template <typename F>
  static TUGame from_function(int n, F&& worth) {
    std::vector<Rational> values(coalition_count(n));
    for (Mask m = 1; m < values.size(); ++m) values[m] = worth(Coalition(m));
    return TUGame(n, std::move(values));
  }

  // Copy with v(s) replaced.
  TUGame with_value(Coalition s, const Rational& worth) const;

  bool operator==(const TUGame&) const = default;
};

TUGame operator+(const TUGame& a, const TUGame& b);
TUGame operator-(const TUGame& a, const TUGame& b);
TUGame operator*(const Rational& alpha, const TUGame& v);

// Moebius coefficients m(T) for every nonempty T.
class MobiusVector : public SetFunction {
 public:
  using SetFunction::SetFunction;

  template <typename F>
  static MobiusVector from_function(int n, F&& coeff) {
    std::vector<Rational> values(coalition_count(n));
    for (Mask m = 1; m < values.size(); ++m) values[m] = coeff(Coalition(m));
    return MobiusVector(n, std::move(values));
  }

  bool operator==(const MobiusVector&) const = default;
};

enum class GameClass {
  kMonotone,
  kSuperadditive,
  kConvex,
  kPositive,
  kMonotoneSuperadditive,
  kMonotoneConvex,
  kZeroNormalizedPositive,
};

inline constexpr GameClass kAllGameClasses[] = {
    GameClass::kMonotone,          GameClass::kSuperadditive,
    GameClass::kConvex,            GameClass::kPositive,
    GameClass::kMonotoneSuperadditive, GameClass::kMonotoneConvex,
    GameClass::kZeroNormalizedPositive,
};

// Stable names used by the CLI and JSON: "monotone", "superadditive",
// "convex", "positive", "monotone-superadditive", "monotone-convex",
// "zero-normalized-positive".
std::string_view to_string(GameClass cls);
GameClass parse_game_class(std::string_view name);

// m(T) = sum over S subset of T of (-1)^{|T \ S|} v(S).
MobiusVector mobius_forward(const TUGame& game);
// v(S) = sum over nonempty T subset of S of m(T).
TUGame mobius_inverse(const MobiusVector& m);

// u_T(S) = 1 iff T is a subset of S. Rejects T = empty.
TUGame unanimity_game(int n, Coalition t);

bool is_monotone(const TUGame& game);
bool is_superadditive(const TUGame& game);
bool is_convex(const TUGame& game);
// Interval-sum characterisation: every [A:B] with |A| = 2 sums to >= 0.
bool is_convex_mobius(const MobiusVector& m);
bool is_positive(const MobiusVector& m);
bool is_zero_normalized(const TUGame& game);

// Class membership of a complete game.
bool belongs_to(const TUGame& game, GameClass cls);

// b_i = v(N) - v(N \ i).
PayoffVector upper_vector(const TUGame& game);
// g(S) = b(S) - v(S).
Rational gap(const TUGame& game, Coalition s);
// a_i = max over S containing i of v(S) - b(S \ i), the concession reading
// of the lower vector used in the tau-value literature.
PayoffVector lower_vector(const TUGame& game);

Rational coalition_sum(std::span<const Rational> x, Coalition s);

// Inclusion-minimal superset of `family` closed under union and intersection.
// The empty coalition must be a member of `family`.
std::set<Coalition> lattice_closure(int n, const std::set<Coalition>& family);

}  // namespace coopgap

#endif  // COOPGAP_GAME_HPP_
