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


#ifndef MCLP_TESTS_TESTING_ORACLES_H_
#define MCLP_TESTS_TESTING_ORACLES_H_

#include <functional>

#include "mclp/lp_core.h"
#include "mclp/model.h"
#include "mclp/sclp_bridge.h"

namespace mclp::testing {

struct BruteForceResult {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
};

// Solves a small LP by enumerating the basic solutions of its standard form
// (free variables split, slacks added). Unboundedness is decided from the
// vertices of {M d = 0, 1'd = 1, d >= 0}, i.e. the extreme rays.
BruteForceResult BruteForceLp(const LpProblem& lp);

// The M-CLP extension of s with u(t) <= W: a slack block S (J1 columns,
// zero cost) is appended and U_*(t) + S(t) = W t is imposed as the two row
// blocks <= W t and >= W t.
ProblemData CappedSclpExtension(const SclpData& s, double w);

// Removes the S block from a solution of CappedSclpExtension(s, w).
MeasureSolution DropCapSlack(const SclpData& s, const MeasureSolution& sol);

// Best objective over measures U(t) = a + d t on [0, T] (atom a at 0,
// constant density d, no other atoms) with a, d on a grid of the given step
// in [0, max]^J. Feasibility is checked on a time grid of `time_points`
// points and the objective by the midpoint rule. Intended for J = 1 or 2.
double GridSearchAtomPlusDensity(const ProblemData& p, double step,
                                 double max, int time_points);

// Numerical integral of f over [0, T] by the composite Simpson rule.
double Simpson(const std::function<double(double)>& f, double horizon,
               int panels);

}  // namespace mclp::testing

#endif  // MCLP_TESTS_TESTING_ORACLES_H_
