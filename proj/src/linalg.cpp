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

#include "coopgap/linalg.hpp"

#include <utility>

namespace coopgap::linalg {

RowEchelon reduce(Matrix rows, std::size_t cols) {
  RowEchelon out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    const Rational inv = 1 / rows[next][col];
    for (std::size_t c = col; c < cols; ++c) rows[next][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || sgn(rows[r][col]) == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (sgn(rows[next][c]) != 0) rows[r][c] -= factor * rows[next][c];
      }
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const Matrix& rows, std::size_t cols) { return reduce(rows, cols).pivots.size(); }

Matrix nullspace(const Matrix& rows, std::size_t cols) {
  const RowEchelon ech = reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const Matrix& a, std::span<const Rational> b,
                                           std::size_t cols) {
  Matrix augmented;
  augmented.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    RationalVector row(a[r]);
    row.push_back(b[r]);
    augmented.push_back(std::move(row));
  }
  const RowEchelon ech = reduce(std::move(augmented), cols + 1);
  if (!ech.pivots.empty() && ech.pivots.back() == cols) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(cols, Rational(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) sol.particular[ech.pivots[r]] = ech.rows[r][cols];

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][free];
    sol.directions.push_back(std::move(v));
  }
  return sol;
}

std::vector<Integer> primitive_integer(std::span<const Rational> v) {
  Integer lcm_den = 1;
  for (const Rational& x : v) lcm_den = lcm(lcm_den, x.get_den());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    g = gcd(g, out[i]);
  }
  if (g > 1) {
    for (Integer& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

}  // namespace coopgap::linalg
