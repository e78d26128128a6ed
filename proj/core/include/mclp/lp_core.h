// Copyright 2026 The MCLP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCLP_LP_CORE_H_
#define MCLP_LP_CORE_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace mclp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Per-variable domain: fixed at zero, non-negative, or free.
enum class SignRestriction { kZero, kNonNegative, kFree };

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

enum class Direction { kMaximize, kMinimize };

// A finite LP: optimize objective' x subject to
//   constraints.row(i) * x  (relations[i])  rhs[i],   x_j in restrictions[j].
struct LpProblem {
  Direction direction = Direction::kMaximize;
  Vector objective;
  Matrix constraints;
  Vector rhs;
  std::vector<Relation> relations;
  std::vector<SignRestriction> restrictions;

  int num_rows() const { return static_cast<int>(constraints.rows()); }
  int num_cols() const { return static_cast<int>(constraints.cols()); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view LpStatusName(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;

  // Optimal: the optimal vertex. Unbounded: the last feasible vertex visited.
  Vector primal;

  // Shadow prices for the rows in their original orientation, so that the
  // optimal value equals rhs' dual. Sign convention for a maximization: <=
  // rows carry non-negative prices, >= rows non-positive ones; mirrored for a
  // minimization.
  Vector dual;

  double objective_value = 0.0;

  // Basic variables of the final basis. Index j < num_cols denotes the
  // structural column j, num_cols + i the logical (slack or artificial)
  // variable of row i. Always num_rows distinct entries when kOptimal.
  std::vector<int> basis;

  // kInfeasible: Farkas vector y with y' rhs = -1 (see IsFarkasCertificate).
  // kUnbounded: an improving ray of the feasible set.
  Vector certificate;

  std::int64_t iterations = 0;
};

struct SimplexOptions {
  // Relative to 1 + ||rhs||_inf.
  double feasibility_tol = 1e-9;
  // Relative to 1 + ||objective||_inf.
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-10;
  // Consecutive degenerate pivots before switching from Dantzig to Bland
  // pricing, as a multiple of (m + n).
  int degenerate_pivot_factor = 3;
  // Pivots between accuracy checks of the explicit basis inverse.
  int refactor_period = 100;
  // <= 0 selects an automatic cap proportional to the problem size.
  std::int64_t max_iterations = 0;
};

// Throws Error(kMalformedProblem) on inconsistent dimensions or non-finite
// data.
void ValidateLp(const LpProblem& lp);

// Dense revised simplex (explicit basis inverse, product-form updates) with
// Dantzig pricing and a Bland fallback against cycling. Two phases; phase one
// uses artificial variables only on rows without a usable slack.
//
// Throws Error(kMalformedProblem) for bad input and Error(kNumericalFailure)
// when the basis becomes singular or the iteration cap is exceeded.
LpOutcome SolveLp(const LpProblem& lp, const SimplexOptions& options = {});

// The LP dual under the Z/P/U convention. For a maximization:
//   P variable -> >= row, U variable -> = row, Z variable -> no row,
//   <= row -> P variable, = row -> U variable, >= row -> P variable on the
//   negated row.
// Minimizations are dualized symmetrically into maximizations.
LpProblem LpDual(const LpProblem& lp);

// Removes Z columns, folds unit slack columns of equality rows into row
// relations, turns sign-defining singleton rows into restrictions and orients
// rows as <= (maximize) or >= (minimize). Relative order of the surviving
// rows and columns is preserved.
LpProblem CanonicalizeLp(const LpProblem& lp);

// Structural equality after applying permutations: row i of `a` is row
// row_of[i] of `b`, column j of `a` is column col_of[j] of `b`. Empty
// permutations mean identity.
bool LpStructurallyEqual(const LpProblem& a, const LpProblem& b,
                         const std::vector<int>& row_of,
                         const std::vector<int>& col_of, double tol = 1e-12);

double LpObjective(const LpProblem& lp, const Vector& x);

// Largest violation of rows and sign restrictions at x (0 when feasible).
double MaxConstraintViolation(const LpProblem& lp, const Vector& x);

// y proves infeasibility: y has the row-relation signs (>= 0 on <=, <= 0 on
// >=), y'A is >= 0 on P columns and 0 on U columns, and y' rhs < 0.
bool IsFarkasCertificate(const LpProblem& lp, const Vector& y, double tol);

// d is a recession direction of the feasible set along which the objective
// strictly improves.
bool IsImprovingRay(const LpProblem& lp, const Vector& d, double tol);

}  // namespace mclp

#endif  // MCLP_LP_CORE_H_
