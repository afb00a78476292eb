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

// Double description method on integer rays with the combinatorial adjacency
// test, plus the homogenisation used for vertex enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coopgap/errors.hpp"
#include "coopgap/linalg.hpp"
#include "coopgap/polyhedron.hpp"

namespace coopgap {
namespace {

using IntVector = std::vector<Integer>;

class ZeroSet {
 public:
  explicit ZeroSet(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool subset_of(const ZeroSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  ZeroSet operator&(const ZeroSet& other) const {
    ZeroSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector y;
  ZeroSet zeros;
};

Integer int_dot(const IntVector& a, const IntVector& b) {
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  }
  return acc;
}

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, x);
  if (g > 1) {
    for (Integer& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

IntVector to_integer_row(std::span<const Rational> row) { return linalg::primitive_integer(row); }

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

linalg::Matrix as_rational(const std::vector<IntVector>& rows) {
  linalg::Matrix out;
  for (const IntVector& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

// Extreme rays of {y in R^k : m_r . y <= 0 for all r}, which must be pointed.
std::vector<IntVector> double_description(const std::vector<IntVector>& rows, std::size_t k) {
  if (k == 0) return {};
  if (linalg::rank(as_rational(rows), k) < k) {
    throw ValidationError("cone is not pointed: it contains a line");
  }

  // Greedy choice of k linearly independent rows, in insertion order.
  std::vector<std::size_t> basis;
  std::vector<bool> in_basis(rows.size(), false);
  {
    linalg::Matrix chosen;
    for (std::size_t r = 0; r < rows.size() && basis.size() < k; ++r) {
      chosen.emplace_back(rows[r].begin(), rows[r].end());
      if (linalg::rank(chosen, k) == chosen.size()) {
        basis.push_back(r);
        in_basis[r] = true;
      } else {
        chosen.pop_back();
      }
    }
  }

  // Columns of -B^{-1} generate {B y <= 0}.
  linalg::Matrix augmented;
  for (std::size_t j = 0; j < k; ++j) {
    RationalVector row(rows[basis[j]].begin(), rows[basis[j]].end());
    row.resize(2 * k, Rational(0));
    row[k + j] = 1;
    augmented.push_back(std::move(row));
  }
  const linalg::RowEchelon inv = linalg::reduce(std::move(augmented), 2 * k);

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < k; ++j) {
    RationalVector col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = -inv.rows[i][k + j];
    Ray ray{linalg::primitive_integer(col), ZeroSet(rows.size())};
    for (std::size_t b = 0; b < k; ++b) {
      if (b != j) ray.zeros.set(basis[b]);
    }
    rays.push_back(std::move(ray));
  }

  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (in_basis[r]) continue;
    const IntVector& a = rows[r];
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      value[j] = int_dot(a, rays[j].y);
      const int s = sgn(value[j]);
      if (s > 0) pos.push_back(j);
      if (s < 0) neg.push_back(j);
    }
    if (pos.empty()) {
      for (std::size_t j = 0; j < rays.size(); ++j) {
        if (sgn(value[j]) == 0) rays[j].zeros.set(r);
      }
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const ZeroSet common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o != p && o != q && common.subset_of(rays[o].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector y(k);
        for (std::size_t i = 0; i < k; ++i) y[i] = value[p] * rays[q].y[i] - value[q] * rays[p].y[i];
        make_primitive(y);
        Ray ray{std::move(y), common};
        ray.zeros.set(r);
        next.push_back(std::move(ray));
      }
    }
    for (std::size_t j = 0; j < rays.size(); ++j) {
      const int s = sgn(value[j]);
      if (s > 0) continue;
      if (s == 0) rays[j].zeros.set(r);
      next.push_back(std::move(rays[j]));
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (Ray& ray : rays) out.push_back(std::move(ray.y));
  return out;
}

// Extreme rays of {A x <= 0, E x = 0} in canonical form, sorted.
std::vector<RationalVector> cone_rays(const HPolyhedron& cone) {
  const std::size_t d = cone.dim();
  linalg::Matrix directions;
  if (cone.equalities().empty()) {
    for (std::size_t j = 0; j < d; ++j) {
      RationalVector e(d, Rational(0));
      e[j] = 1;
      directions.push_back(std::move(e));
    }
  } else {
    linalg::Matrix eq;
    for (const LinearRow& row : cone.equalities()) eq.push_back(row.coeffs);
    directions = linalg::nullspace(eq, d);
  }
  const std::size_t k = directions.size();

  std::vector<IntVector> rows;
  for (const LinearRow& row : cone.inequalities()) {
    RationalVector projected(k);
    for (std::size_t j = 0; j < k; ++j) projected[j] = dot(row.coeffs, directions[j]);
    IntVector ints = to_integer_row(projected);
    if (is_zero(ints)) continue;
    if (std::find(rows.begin(), rows.end(), ints) != rows.end()) continue;
    rows.push_back(std::move(ints));
  }

  std::vector<RationalVector> out;
  for (const IntVector& y : double_description(rows, k)) {
    RationalVector x(d, Rational(0));
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(y[j]) == 0) continue;
      for (std::size_t i = 0; i < d; ++i) x[i] += y[j] * directions[j][i];
    }
    out.push_back(canonical_ray(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_capacity(std::size_t effective, const EnumerationOptions& options) {
  const std::size_t cap = options.dim_cap != 0 ? options.dim_cap : dimension_cap();
  if (effective > cap) {
    throw CapacityError("effective dimension " + std::to_string(effective) +
                        " exceeds the enumeration cap " + std::to_string(cap));
  }
}

}  // namespace

std::vector<RationalVector> extreme_ray_enumeration(const HPolyhedron& cone,
                                                    const EnumerationOptions& options) {
  if (!cone.is_homogeneous()) throw ValidationError("ray enumeration needs a homogeneous system");
  check_capacity(effective_dimension(cone), options);
  return cone_rays(options.prune_redundant ? remove_redundant_inequalities(cone) : cone);
}

VRep vertex_enumeration(const HPolyhedron& p, const EnumerationOptions& options) {
  check_capacity(effective_dimension(p), options);
  if (!lp_feasible(p).feasible) return {};
  if (!is_pointed(recession_cone(p))) {
    throw ValidationError("polyhedron contains a line; it has no vertices");
  }
  const HPolyhedron q = options.prune_redundant ? remove_redundant_inequalities(p) : p;

  const std::size_t d = p.dim();
  HPolyhedron cone(d + 1);
  for (const LinearRow& row : q.inequalities()) {
    RationalVector c = row.coeffs;
    c.push_back(-row.rhs);
    cone.add_inequality(std::move(c), 0);
  }
  RationalVector t_row(d + 1, Rational(0));
  t_row[d] = -1;
  cone.add_inequality(std::move(t_row), 0);
  for (const LinearRow& row : q.equalities()) {
    RationalVector c = row.coeffs;
    c.push_back(-row.rhs);
    cone.add_equality(std::move(c), 0);
  }

  VRep out;
  for (const RationalVector& ray : cone_rays(cone)) {
    const Rational& t = ray[d];
    if (sgn(t) > 0) {
      RationalVector x(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(d));
      for (Rational& c : x) c /= t;
      out.vertices.push_back(std::move(x));
    } else {
      out.rays.push_back(
          canonical_ray(std::span<const Rational>(ray.data(), d)));
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

}  // namespace coopgap
