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

// Exact dense linear algebra over the rationals, sized for the small systems
// that arise from games with at most a handful of players.

#ifndef COOPGAP_LINALG_HPP_
#define COOPGAP_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coopgap/rational.hpp"

namespace coopgap::linalg {

using Matrix = std::vector<RationalVector>;

struct RowEchelon {
  Matrix rows;                       // reduced rows, one per pivot
  std::vector<std::size_t> pivots;   // pivot column of each row
};

// Reduced row echelon form of `rows` (each of length `cols`).
RowEchelon reduce(Matrix rows, std::size_t cols);

std::size_t rank(const Matrix& rows, std::size_t cols);

// Basis of {x : rows * x = 0}; one vector per free column.
Matrix nullspace(const Matrix& rows, std::size_t cols);

// Solutions of {x : a_r . x = b_r}: a particular solution and a basis of the
// homogeneous solution space, or nullopt when inconsistent.
struct AffineSolution {
  RationalVector particular;
  Matrix directions;
};
std::optional<AffineSolution> solve_affine(const Matrix& a, std::span<const Rational> b,
                                           std::size_t cols);

// Scales v by a positive factor to the primitive integer vector on its ray.
std::vector<Integer> primitive_integer(std::span<const Rational> v);

}  // namespace coopgap::linalg

#endif  // COOPGAP_LINALG_HPP_
