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

#ifndef MCLP_STRUCTURE_H_
#define MCLP_STRUCTURE_H_

#include <string>
#include <utility>
#include <vector>

#include "mclp/lp_core.h"
#include "mclp/model.h"

namespace mclp {

struct SupportSets {
  std::vector<int> j_set;  // u_j > 0
  std::vector<int> k_set;  // p_k > 0 at the mirrored dual time
  // Components within a factor of 10 of the classification threshold.
  std::vector<int> borderline_j;
  std::vector<int> borderline_k;
};

// Support of a rate pair with threshold 1e-7 (1 + |rate|_inf).
SupportSets ComputeSupport(const Vector& u_rate, const Vector& p_rate);

struct RateInterval {
  double t_lo = 0.0;
  double t_hi = 0.0;
  Vector u_rate;  // primal density on (t_lo, t_hi)
  Vector p_rate;  // dual density at dual times T - t
  SupportSets support;
  double objective_slope = 0.0;  // c' u_rate
};

struct RateDetectionOptions {
  // Rates agree when they differ by at most tol (1 + |rate|_inf), but never
  // less than 1e-8 absolute.
  double tol = 1e-6;
  // A single cell whose rates lie on the segment between its neighbours is a
  // transition cell: the breakpoint falls inside it. Such cells are split
  // between the neighbours instead of forming an interval of their own. A
  // single cell at 0 or T is folded into its neighbour unless its rates pass
  // VerifyRatesPair and keep the slope non-increasing; otherwise it carries
  // smeared endpoint atom mass.
  bool absorb_transitions = true;
};

// Maximal intervals of constant (u, p) rates of a near-optimal pair. Throws
// Error(kNonMonotoneSlope) when c' u increases by more than 10 tol across
// consecutive intervals.
std::vector<RateInterval> DetectRateIntervals(
    const ProblemData& p, const MeasureSolution& primal,
    const MeasureSolution& dual, const RateDetectionOptions& options = {});

// Rates-LP: max c' u s.t. A u + xdot = b, u_j in P on the j-support and Z
// off it, xdot_k in P on the k-support and U off it. Rates-LP* mirrors it:
// min b' p s.t. A' p - qdot = c. The second LP is checked to be the
// canonical dual of the first. Throws Error(kDimensionMismatch) for indices
// out of range.
std::pair<LpProblem, LpProblem> BuildRatesLpPair(const ProblemData& p,
                                                 const SupportSets& support);

struct RatesVerification {
  bool passed = true;
  std::vector<std::string> violations;
};

// Sign pattern, rate complementary slackness and optimality of (u, p) for
// the Rates-LP pair of the interval's support.
RatesVerification VerifyRatesPair(const ProblemData& p,
                                  const RateInterval& interval,
                                  double tol = 1e-6);

// True when c is not a linear combination of fewer than J columns of
// [A' I]. Enumerates all C(K + J, J - 1) column subsets after a randomized
// pre-check; intended for K + J <= 12.
bool CheckNondegeneracy(const Matrix& A, const Vector& c);

// Interpolates U linearly between the given breakpoints (which must start at
// 0 and end at T), keeping the atoms at 0 and T. Throws
// Error(kInfeasibleResult) when the interpolant violates the constraints.
MeasureSolution PiecewiseLinearize(const ProblemData& p,
                                   const MeasureSolution& sol,
                                   const std::vector<double>& breakpoints,
                                   double tol = 1e-9);

// Largest mass, over components, by which a cell exceeds what the densities
// of its neighbours could carry, plus any explicit interior atoms. An
// interior atom of the limit shows up as such an excess that does not shrink
// under refinement.
double InteriorAtomMass(const MeasureSolution& sol);

}  // namespace mclp

#endif  // MCLP_STRUCTURE_H_
