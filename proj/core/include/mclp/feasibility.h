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

#ifndef MCLP_FEASIBILITY_H_
#define MCLP_FEASIBILITY_H_

#include <optional>

#include "mclp/lp_core.h"
#include "mclp/model.h"

namespace mclp {

// A point (u, U) of the Test-LP: an atom at 0 and the total increment over
// (0, T].
struct TestLpPoint {
  Vector atom;
  Vector increment;
};

struct FeasibilityReport {
  bool feasible = false;
  // Largest common alpha with A u + alpha <= beta and
  // A (u + U) + alpha <= beta + b T; +infinity when unbounded.
  double strict_margin = 0.0;
  std::optional<TestLpPoint> witness;
  // Farkas vector of the Test-LP when infeasible.
  std::optional<Vector> certificate;

  bool strictly_feasible() const { return feasible && strict_margin > 0.0; }
};

// Variables (u, U) >= 0; rows A u <= beta, A u + A U <= beta + b T;
// objective max (gamma + c T)' u + gamma' U.
LpProblem BuildTestLp(const ProblemData& p);

// The strict-feasibility LP: BuildTestLp's rows with a free alpha added to
// every row, maximizing alpha.
LpProblem BuildMarginLp(const ProblemData& p);

FeasibilityReport CheckFeasibility(const ProblemData& p,
                                   const SimplexOptions& options = {});

// U(t) = u + (t / T) U. Throws Error(kInfeasibleWitness) when (u, U)
// violates the Test-LP beyond tol (scaled by 1 + |rhs|).
MeasureSolution TestSolutionToMeasure(const ProblemData& p, const Vector& u,
                                      const Vector& U, double tol = 1e-9);

}  // namespace mclp

#endif  // MCLP_FEASIBILITY_H_
