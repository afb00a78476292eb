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

#include "coopgap/polyhedron.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>

#include "coopgap/errors.hpp"
#include "coopgap/linalg.hpp"

namespace coopgap {
namespace {

constexpr std::size_t kDefaultDimensionCap = 15;

void check_length(const HPolyhedron& p, const RationalVector& coeffs) {
  if (coeffs.size() != p.dim()) throw ValidationError("row length differs from dimension");
}

linalg::Matrix binding_rows(const HPolyhedron& p, std::span<const Rational> x, bool homogeneous) {
  linalg::Matrix rows;
  for (const LinearRow& row : p.equalities()) rows.push_back(row.coeffs);
  for (const LinearRow& row : p.inequalities()) {
    const Rational target = homogeneous ? Rational(0) : row.rhs;
    if (dot(row.coeffs, x) == target) rows.push_back(row.coeffs);
  }
  return rows;
}

// (a, b) scaled to a primitive integer vector, used to detect duplicates.
RationalVector normalised_row(const LinearRow& row) {
  RationalVector joined = row.coeffs;
  joined.push_back(row.rhs);
  return canonical_ray(joined);
}

}  // namespace

void HPolyhedron::add_inequality(RationalVector coeffs, Rational rhs) {
  check_length(*this, coeffs);
  inequalities_.push_back({std::move(coeffs), std::move(rhs)});
}

void HPolyhedron::add_equality(RationalVector coeffs, Rational rhs) {
  check_length(*this, coeffs);
  equalities_.push_back({std::move(coeffs), std::move(rhs)});
}

bool HPolyhedron::is_homogeneous() const {
  for (const LinearRow& row : inequalities_) {
    if (sgn(row.rhs) != 0) return false;
  }
  for (const LinearRow& row : equalities_) {
    if (sgn(row.rhs) != 0) return false;
  }
  return true;
}

bool HPolyhedron::contains_point(std::span<const Rational> x) const {
  if (x.size() != dim_) return false;
  for (const LinearRow& row : inequalities_) {
    if (dot(row.coeffs, x) > row.rhs) return false;
  }
  for (const LinearRow& row : equalities_) {
    if (dot(row.coeffs, x) != row.rhs) return false;
  }
  return true;
}

bool HPolyhedron::contains_direction(std::span<const Rational> r) const {
  if (r.size() != dim_) return false;
  for (const LinearRow& row : inequalities_) {
    if (sgn(dot(row.coeffs, r)) > 0) return false;
  }
  for (const LinearRow& row : equalities_) {
    if (sgn(dot(row.coeffs, r)) != 0) return false;
  }
  return true;
}

std::size_t dimension_cap() {
  const char* env = std::getenv("COOPGAP_DIM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultDimensionCap;
  const std::string text(env);
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value == 0) {
    throw ValidationError("COOPGAP_DIM_CAP must be a positive integer, got \"" + text + "\"");
  }
  return value;
}

std::size_t effective_dimension(const HPolyhedron& p) {
  linalg::Matrix rows;
  for (const LinearRow& row : p.equalities()) rows.push_back(row.coeffs);
  return p.dim() - linalg::rank(rows, p.dim());
}

bool is_pointed(const HPolyhedron& p) {
  linalg::Matrix rows;
  for (const LinearRow& row : p.equalities()) rows.push_back(row.coeffs);
  for (const LinearRow& row : p.inequalities()) rows.push_back(row.coeffs);
  return linalg::rank(rows, p.dim()) == p.dim();
}

HPolyhedron recession_cone(const HPolyhedron& p) {
  HPolyhedron cone(p.dim());
  for (const LinearRow& row : p.inequalities()) cone.add_inequality(row.coeffs, 0);
  for (const LinearRow& row : p.equalities()) cone.add_equality(row.coeffs, 0);
  return cone;
}

bool is_extreme_point(const HPolyhedron& p, std::span<const Rational> x) {
  if (!p.contains_point(x)) throw ValidationError("point is not in the polyhedron");
  return linalg::rank(binding_rows(p, x, false), p.dim()) == p.dim();
}

bool is_extreme_ray(const HPolyhedron& cone, std::span<const Rational> r) {
  bool nonzero = false;
  for (const Rational& c : r) nonzero = nonzero || sgn(c) != 0;
  if (!nonzero || !cone.contains_direction(r)) return false;
  return linalg::rank(binding_rows(cone, r, true), cone.dim()) + 1 == cone.dim();
}

bool contains(const HPolyhedron& p, const HPolyhedron& q) {
  if (p.dim() != q.dim()) throw ValidationError("dimension mismatch in containment test");
  if (!lp_feasible(q).feasible) return true;
  for (const LinearRow& row : p.inequalities()) {
    const LpResult r = lp_maximize(q, row.coeffs);
    if (r.status != LpStatus::kOptimal || r.value > row.rhs) return false;
  }
  for (const LinearRow& row : p.equalities()) {
    const LpResult hi = lp_maximize(q, row.coeffs);
    if (hi.status != LpStatus::kOptimal || hi.value != row.rhs) return false;
    const LpResult lo = lp_minimize(q, row.coeffs);
    if (lo.status != LpStatus::kOptimal || lo.value != row.rhs) return false;
  }
  return true;
}

HPolyhedron remove_redundant_inequalities(const HPolyhedron& p) {
  std::vector<LinearRow> kept;
  std::vector<RationalVector> seen;
  for (const LinearRow& row : p.inequalities()) {
    bool zero = true;
    for (const Rational& c : row.coeffs) zero = zero && sgn(c) == 0;
    if (zero && sgn(row.rhs) >= 0) continue;
    RationalVector key = normalised_row(row);
    bool duplicate = false;
    for (const RationalVector& s : seen) duplicate = duplicate || s == key;
    if (duplicate) continue;
    seen.push_back(std::move(key));
    kept.push_back(row);
  }

  auto rebuild = [&](std::size_t skip) {
    HPolyhedron out(p.dim());
    for (const LinearRow& row : p.equalities()) out.add_equality(row.coeffs, row.rhs);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != skip) out.add_inequality(kept[j].coeffs, kept[j].rhs);
    }
    return out;
  };

  if (!lp_feasible(rebuild(kept.size())).feasible) return rebuild(kept.size());
  for (std::size_t j = kept.size(); j-- > 0;) {
    const HPolyhedron without = rebuild(j);
    const LpResult r = lp_maximize(without, kept[j].coeffs);
    if (r.status == LpStatus::kOptimal && r.value <= kept[j].rhs) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(j));
    }
  }
  return rebuild(kept.size());
}

RationalVector canonical_ray(std::span<const Rational> r) {
  const std::vector<Integer> ints = linalg::primitive_integer(r);
  return RationalVector(ints.begin(), ints.end());
}

std::string format_hrep(const HPolyhedron& p) {
  std::ostringstream out;
  auto write = [&](const LinearRow& row, const char* rel) {
    for (const Rational& c : row.coeffs) out << to_string(c) << ' ';
    out << rel << ' ' << to_string(row.rhs) << '\n';
  };
  for (const LinearRow& row : p.equalities()) write(row, "=");
  for (const LinearRow& row : p.inequalities()) write(row, "<=");
  return out.str();
}

std::string format_vrep(const VRep& v) {
  std::ostringstream out;
  auto write = [&](const char* tag, const RationalVector& x) {
    out << tag;
    for (const Rational& c : x) out << ' ' << to_string(c);
    out << '\n';
  };
  for (const RationalVector& x : v.vertices) write("V", x);
  for (const RationalVector& r : v.rays) write("R", r);
  return out.str();
}

}  // namespace coopgap
