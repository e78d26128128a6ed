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

#ifndef MCLP_MODEL_H_
#define MCLP_MODEL_H_

#include <vector>

#include "mclp/lp_core.h"

namespace mclp {

// One instance of
//   max  int_{0-}^T (gamma + (T - t) c)' dU(t)
//   s.t. A U(t) <= beta + b t,  0 <= t <= T,
//        U >= 0 non-decreasing and right-continuous, U(0-) = 0,
// and implicitly of its symmetric dual over P(t) with A' P(t) >= gamma + c t.
struct ProblemData {
  Matrix A;       // K x J
  Vector beta;    // K
  Vector b;       // K
  Vector gamma;   // J
  Vector c;       // J
  double horizon = 1.0;

  int num_rows() const { return static_cast<int>(A.rows()); }  // K
  int num_cols() const { return static_cast<int>(A.cols()); }  // J
};

// Throws Error(kMalformedProblem) unless K, J >= 1, T > 0, the vector
// lengths match A and every entry is finite.
void ValidateProblem(const ProblemData& p);

// An atom strictly inside (0, T).
struct InteriorAtom {
  double time = 0.0;
  Vector mass;
};

// A non-decreasing control: an atom at 0, a piecewise-constant density on
// the partition, optional atoms strictly inside (0, T) and an atom at T.
// Dual-side solutions use the same type in dual time (t = 0 is primal T).
struct MeasureSolution {
  Vector atom_start;
  std::vector<double> partition;  // 0 = t_0 < t_1 < ... < t_N = T
  std::vector<Vector> densities;  // densities[n] lives on (t_n, t_{n+1})
  Vector atom_end;
  std::vector<InteriorAtom> interior_atoms;  // sorted by time

  int dimension() const { return static_cast<int>(atom_start.size()); }
  int num_intervals() const { return static_cast<int>(densities.size()); }
  double horizon() const { return partition.empty() ? 0.0 : partition.back(); }
};

// The zero control with a single interval.
MeasureSolution ZeroMeasure(int dimension, double horizon);

// Throws Error(kDimensionMismatch) when the solution is not a well-formed
// measure of the given dimension over [0, horizon].
void ValidateMeasure(const MeasureSolution& sol, int dimension,
                     double horizon);

struct TrajectoryPoint {
  double t = 0.0;
  Vector U;
  Vector slack;  // beta + b t - A U(t)
};

// (A, beta, b, gamma, c, T) -> (-A', -gamma, -c, -beta, -b, T). The M-CLP
// over the result is the dual problem rewritten as a maximization, so its
// value is -V(M-CLP*) and its feasible set is the dual feasible set.
ProblemData DualProblem(const ProblemData& p);

// U(t) including any atom at t, and the left limit U(t-) (zero at t = 0).
Vector CumulativeAt(const MeasureSolution& sol, double t);
Vector CumulativeBefore(const MeasureSolution& sol, double t);

// Density of the interval containing t; intervals are half open [t_n,
// t_{n+1}) except the last one, which includes T.
const Vector& DensityAt(const MeasureSolution& sol, double t);

// Closed form of the objective; no quadrature.
double EvaluateObjective(const ProblemData& p, const MeasureSolution& sol);

// Throws Error(kTimeOutOfRange) unless 0 <= t <= T.
TrajectoryPoint SlackAt(const ProblemData& p, const MeasureSolution& sol,
                        double t);

struct MeasureFeasibility {
  bool feasible = true;
  double worst_violation = 0.0;
  double worst_t = 0.0;
};

// The slack is piecewise linear between breakpoints and atom times, so
// checking it at those points and their left limits is exact. Negative atoms
// or densities count as violations as well.
MeasureFeasibility CheckFeasibleMeasure(const ProblemData& p,
                                        const MeasureSolution& sol,
                                        double tol);

// int x(T - t)' dP(t) + int q(T - t)' dU(t) for a primal solution of p and a
// dual solution in dual time. Zero exactly when a feasible pair is
// complementary; for feasible pairs it equals the objective difference.
double ComplementarySlacknessResidual(const ProblemData& p,
                                      const MeasureSolution& primal,
                                      const MeasureSolution& dual);

}  // namespace mclp

#endif  // MCLP_MODEL_H_
