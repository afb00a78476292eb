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

// Exact-rational H-polyhedra: LP feasibility and optimisation, double
// description vertex/ray enumeration, and the rank certificates for extreme
// points and extreme rays.

#ifndef COOPGAP_POLYHEDRON_HPP_
#define COOPGAP_POLYHEDRON_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "coopgap/rational.hpp"

namespace coopgap {

// a . x <= rhs (inequality) or a . x = rhs (equality).
struct LinearRow {
  RationalVector coeffs;
  Rational rhs;

  bool operator==(const LinearRow&) const = default;
};

class HPolyhedron {
 public:
  explicit HPolyhedron(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::vector<LinearRow>& inequalities() const { return inequalities_; }
  const std::vector<LinearRow>& equalities() const { return equalities_; }

  void add_inequality(RationalVector coeffs, Rational rhs);
  void add_equality(RationalVector coeffs, Rational rhs);

  // All right-hand sides zero.
  bool is_homogeneous() const;
  bool contains_point(std::span<const Rational> x) const;
  // A r <= 0 and E r = 0.
  bool contains_direction(std::span<const Rational> r) const;

 private:
  std::size_t dim_;
  std::vector<LinearRow> inequalities_;
  std::vector<LinearRow> equalities_;
};

// P = conv(vertices) + cone(rays). Rays are primitive integer vectors (entries
// coprime) stored as rationals, vertices and rays both sorted ascending.
struct VRep {
  std::vector<RationalVector> vertices;
  std::vector<RationalVector> rays;
};

struct FeasibilityResult {
  bool feasible = false;
  RationalVector witness;  // a point of P when feasible
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;          // optimum when kOptimal
  RationalVector argmax;   // optimal point when kOptimal
};

FeasibilityResult lp_feasible(const HPolyhedron& p);
LpResult lp_maximize(const HPolyhedron& p, std::span<const Rational> objective);
LpResult lp_minimize(const HPolyhedron& p, std::span<const Rational> objective);

struct EnumerationOptions {
  // Drop LP-redundant inequalities before running double description.
  bool prune_redundant = true;
  // 0 means "use dimension_cap()".
  std::size_t dim_cap = 0;
};

// Effective-dimension ceiling for enumeration: 15 unless COOPGAP_DIM_CAP is set.
std::size_t dimension_cap();

// Dimension left after solving the equality system (ambient minus rank).
std::size_t effective_dimension(const HPolyhedron& p);

// Throws ValidationError when P has a nontrivial lineality space and
// CapacityError when the effective dimension exceeds the cap.
VRep vertex_enumeration(const HPolyhedron& p, const EnumerationOptions& options = {});

// Extreme rays of a pointed homogeneous cone {A x <= 0, E x = 0}.
std::vector<RationalVector> extreme_ray_enumeration(const HPolyhedron& cone,
                                                    const EnumerationOptions& options = {});

// No line inside the recession cone.
bool is_pointed(const HPolyhedron& p);

// Same rows with every right-hand side zeroed.
HPolyhedron recession_cone(const HPolyhedron& p);

// dim linearly independent constraints binding at x. Throws ValidationError
// when x is not in P.
bool is_extreme_point(const HPolyhedron& p, std::span<const Rational> x);

// r != 0 in the cone with dim - 1 linearly independent binding rows.
bool is_extreme_ray(const HPolyhedron& cone, std::span<const Rational> r);

// Q subset of P, decided by one LP per row of P.
bool contains(const HPolyhedron& p, const HPolyhedron& q);

// Drops duplicate rows (up to positive scaling) and LP-implied inequalities.
HPolyhedron remove_redundant_inequalities(const HPolyhedron& p);

// Primitive integer representative of the ray through r (positive scaling).
RationalVector canonical_ray(std::span<const Rational> r);

// Debug text: one row per line, rationals as "p/q".
std::string format_hrep(const HPolyhedron& p);
std::string format_vrep(const VRep& v);

}  // namespace coopgap

#endif  // COOPGAP_POLYHEDRON_HPP_
