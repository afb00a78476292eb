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

// Two-phase primal simplex on a dense exact tableau with Bland's rule.

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "coopgap/errors.hpp"
#include "coopgap/linalg.hpp"
#include "coopgap/polyhedron.hpp"

namespace coopgap {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  Tableau(std::vector<RationalVector> rows, std::vector<std::size_t> basis, std::size_t columns)
      : rows_(std::move(rows)), basis_(std::move(basis)), columns_(columns) {}

  std::size_t row_count() const { return rows_.size(); }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  const Rational& entry(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Rational& rhs(std::size_t r) const { return rows_[r][columns_]; }

  void set_objective(const RationalVector& cost) {
    objective_.assign(columns_ + 1, Rational(0));
    for (std::size_t c = 0; c < columns_; ++c) objective_[c] = cost[c];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t c = 0; c <= columns_; ++c) {
        if (sgn(rows_[r][c]) != 0) objective_[c] -= cb * rows_[r][c];
      }
    }
  }

  Rational objective_value() const { return -objective_[columns_]; }

  // Maximises the current objective over columns < `usable`.
  LpStatus optimise(std::size_t usable) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t c = 0; c < usable; ++c) {
        if (sgn(objective_[c]) > 0) {
          enter = c;
          break;
        }
      }
      if (enter == kNone) return LpStatus::kOptimal;

      std::size_t leave = kNone;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (sgn(rows_[r][enter]) <= 0) continue;
        Rational ratio = rows_[r][columns_] / rows_[r][enter];
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == kNone) return LpStatus::kUnbounded;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    RationalVector& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    for (Rational& x : prow) {
      if (sgn(x) != 0) x *= inv;
    }
    auto eliminate = [&](RationalVector& row) {
      if (sgn(row[c]) == 0) return;
      const Rational factor = row[c];
      for (std::size_t k = 0; k <= columns_; ++k) {
        if (sgn(prow[k]) != 0) row[k] -= factor * prow[k];
      }
    };
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (k != r) eliminate(rows_[k]);
    }
    if (!objective_.empty()) eliminate(objective_);
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> basis_;
  std::size_t columns_;
  RationalVector objective_;
};

// max objective . y subject to C y <= g, y free.
struct ReducedLp {
  std::vector<RationalVector> c;
  RationalVector g;
  std::size_t vars = 0;
};

struct SimplexOutcome {
  LpStatus status;
  Rational value;
  RationalVector y;
};

SimplexOutcome run_simplex(const ReducedLp& lp, const std::optional<RationalVector>& objective) {
  const std::size_t k = lp.vars;
  const std::size_t m = lp.c.size();
  std::size_t artificial_count = 0;
  for (const Rational& gi : lp.g) artificial_count += sgn(gi) < 0 ? 1 : 0;

  // Columns: y+ (k), y- (k), slack (m), artificial (artificial_count).
  const std::size_t first_slack = 2 * k;
  const std::size_t first_art = first_slack + m;
  const std::size_t columns = first_art + artificial_count;

  std::vector<RationalVector> rows(m, RationalVector(columns + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  std::size_t next_art = first_art;
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = sgn(lp.g[r]) < 0;
    const int s = flip ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(lp.c[r][j]) == 0) continue;
      rows[r][j] = s * lp.c[r][j];
      rows[r][k + j] = -s * lp.c[r][j];
    }
    rows[r][first_slack + r] = s;
    rows[r][columns] = s * lp.g[r];
    if (flip) {
      rows[r][next_art] = 1;
      basis[r] = next_art++;
    } else {
      basis[r] = first_slack + r;
    }
  }

  Tableau tab(std::move(rows), std::move(basis), columns);
  if (artificial_count > 0) {
    RationalVector phase1(columns, Rational(0));
    for (std::size_t c = first_art; c < columns; ++c) phase1[c] = -1;
    tab.set_objective(phase1);
    tab.optimise(columns);
    if (sgn(tab.objective_value()) < 0) return {LpStatus::kInfeasible, Rational(0), {}};
    // Drive zero-level artificials out of the basis.
    for (std::size_t r = 0; r < tab.row_count();) {
      if (tab.basic(r) < first_art) {
        ++r;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t c = 0; c < first_art; ++c) {
        if (sgn(tab.entry(r, c)) != 0) {
          col = c;
          break;
        }
      }
      if (col == kNone) {
        tab.drop_row(r);
      } else {
        tab.pivot(r, col);
        ++r;
      }
    }
  }

  LpStatus status = LpStatus::kOptimal;
  if (objective) {
    RationalVector cost(columns, Rational(0));
    for (std::size_t j = 0; j < k; ++j) {
      cost[j] = (*objective)[j];
      cost[k + j] = -(*objective)[j];
    }
    tab.set_objective(cost);
    status = tab.optimise(first_art);
    if (status == LpStatus::kUnbounded) return {status, Rational(0), {}};
  }

  RationalVector y(k, Rational(0));
  for (std::size_t r = 0; r < tab.row_count(); ++r) {
    const std::size_t b = tab.basic(r);
    if (b < k) {
      y[b] += tab.rhs(r);
    } else if (b < 2 * k) {
      y[b - k] -= tab.rhs(r);
    }
  }
  Rational value = 0;
  if (objective) value = dot(*objective, y);
  return {status, value, std::move(y)};
}

struct Parameterisation {
  RationalVector origin;
  linalg::Matrix directions;  // x = origin + sum_j y_j directions[j]
};

std::optional<Parameterisation> parameterise(const HPolyhedron& p) {
  const std::size_t d = p.dim();
  if (p.equalities().empty()) {
    Parameterisation out{RationalVector(d, Rational(0)), {}};
    for (std::size_t j = 0; j < d; ++j) {
      RationalVector e(d, Rational(0));
      e[j] = 1;
      out.directions.push_back(std::move(e));
    }
    return out;
  }
  linalg::Matrix a;
  RationalVector b;
  for (const LinearRow& row : p.equalities()) {
    a.push_back(row.coeffs);
    b.push_back(row.rhs);
  }
  auto sol = linalg::solve_affine(a, b, d);
  if (!sol) return std::nullopt;
  return Parameterisation{std::move(sol->particular), std::move(sol->directions)};
}

LpResult solve(const HPolyhedron& p, const std::optional<RationalVector>& objective) {
  const auto param = parameterise(p);
  if (!param) return {LpStatus::kInfeasible, Rational(0), {}};
  const std::size_t k = param->directions.size();

  ReducedLp lp;
  lp.vars = k;
  for (const LinearRow& row : p.inequalities()) {
    RationalVector c(k);
    for (std::size_t j = 0; j < k; ++j) c[j] = dot(row.coeffs, param->directions[j]);
    lp.c.push_back(std::move(c));
    lp.g.push_back(row.rhs - dot(row.coeffs, param->origin));
  }
  std::optional<RationalVector> reduced_objective;
  Rational offset = 0;
  if (objective) {
    RationalVector c(k);
    for (std::size_t j = 0; j < k; ++j) c[j] = dot(*objective, param->directions[j]);
    reduced_objective = std::move(c);
    offset = dot(*objective, param->origin);
  }

  SimplexOutcome out = run_simplex(lp, reduced_objective);
  if (out.status != LpStatus::kOptimal) return {out.status, Rational(0), {}};

  RationalVector x = param->origin;
  for (std::size_t j = 0; j < k; ++j) {
    if (sgn(out.y[j]) == 0) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += out.y[j] * param->directions[j][i];
  }
  return {LpStatus::kOptimal, out.value + offset, std::move(x)};
}

}  // namespace

FeasibilityResult lp_feasible(const HPolyhedron& p) {
  LpResult r = solve(p, std::nullopt);
  if (r.status != LpStatus::kOptimal) return {false, {}};
  return {true, std::move(r.argmax)};
}

LpResult lp_maximize(const HPolyhedron& p, std::span<const Rational> objective) {
  if (objective.size() != p.dim()) throw ValidationError("objective length differs from dimension");
  return solve(p, RationalVector(objective.begin(), objective.end()));
}

LpResult lp_minimize(const HPolyhedron& p, std::span<const Rational> objective) {
  RationalVector negated(objective.begin(), objective.end());
  for (Rational& c : negated) c = -c;
  LpResult r = lp_maximize(p, negated);
  if (r.status == LpStatus::kOptimal) r.value = -r.value;
  return r;
}

}  // namespace coopgap
