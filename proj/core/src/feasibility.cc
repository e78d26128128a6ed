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

#include "mclp/feasibility.h"

#include <algorithm>
#include <limits>
#include <string>

#include "mclp/error.h"

namespace mclp {

LpProblem BuildTestLp(const ProblemData& p) {
  ValidateProblem(p);
  const int k = p.num_rows();
  const int j = p.num_cols();
  const double T = p.horizon;

  LpProblem lp;
  lp.direction = Direction::kMaximize;
  lp.objective.resize(2 * j);
  lp.objective << p.gamma + T * p.c, p.gamma;
  lp.constraints = Matrix::Zero(2 * k, 2 * j);
  lp.constraints.block(0, 0, k, j) = p.A;
  lp.constraints.block(k, 0, k, j) = p.A;
  lp.constraints.block(k, j, k, j) = p.A;
  lp.rhs.resize(2 * k);
  lp.rhs << p.beta, p.beta + T * p.b;
  lp.relations.assign(2 * k, Relation::kLessEqual);
  lp.restrictions.assign(2 * j, SignRestriction::kNonNegative);
  return lp;
}

LpProblem BuildMarginLp(const ProblemData& p) {
  LpProblem test = BuildTestLp(p);
  const int m = test.num_rows();
  const int n = test.num_cols();
  LpProblem lp;
  lp.direction = Direction::kMaximize;
  lp.objective = Vector::Zero(n + 1);
  lp.objective[n] = 1.0;
  lp.constraints.resize(m, n + 1);
  lp.constraints << test.constraints, Vector::Ones(m);
  lp.rhs = test.rhs;
  lp.relations = test.relations;
  lp.restrictions = test.restrictions;
  lp.restrictions.push_back(SignRestriction::kFree);
  return lp;
}

FeasibilityReport CheckFeasibility(const ProblemData& p,
                                   const SimplexOptions& options) {
  const int j = p.num_cols();
  FeasibilityReport report;

  const LpOutcome test = SolveLp(BuildTestLp(p), options);
  if (test.status == LpStatus::kInfeasible) {
    report.feasible = false;
    report.certificate = test.certificate;
    report.strict_margin = -std::numeric_limits<double>::infinity();
  } else {
    report.feasible = true;
    report.witness = TestLpPoint{test.primal.head(j), test.primal.tail(j)};
  }

  const LpOutcome margin = SolveLp(BuildMarginLp(p), options);
  switch (margin.status) {
    case LpStatus::kUnbounded:
      report.strict_margin = std::numeric_limits<double>::infinity();
      break;
    case LpStatus::kOptimal:
      report.strict_margin = margin.objective_value;
      break;
    case LpStatus::kInfeasible:
      // alpha -> -infinity always satisfies the rows.
      throw Error(ErrorCode::kNumericalFailure,
                  "strict-feasibility LP reported infeasible");
  }
  if (!report.feasible) {
    report.strict_margin = std::min(report.strict_margin, 0.0);
  }
  return report;
}

MeasureSolution TestSolutionToMeasure(const ProblemData& p, const Vector& u,
                                      const Vector& U, double tol) {
  ValidateProblem(p);
  const int j = p.num_cols();
  if (u.size() != j || U.size() != j) {
    throw Error(ErrorCode::kDimensionMismatch,
                "witness must have " + std::to_string(j) + " components");
  }
  LpProblem lp = BuildTestLp(p);
  Vector x(2 * j);
  x << u, U;
  const double scale = 1.0 + lp.rhs.lpNorm<Eigen::Infinity>();
  const double violation = MaxConstraintViolation(lp, x);
  if (violation > tol * scale) {
    throw Error(ErrorCode::kInfeasibleWitness,
                "Test-LP violation " + std::to_string(violation));
  }
  MeasureSolution sol;
  sol.atom_start = u.cwiseMax(0.0);
  sol.partition = {0.0, p.horizon};
  sol.densities = {U.cwiseMax(0.0) / p.horizon};
  sol.atom_end = Vector::Zero(j);
  return sol;
}

}  // namespace mclp
