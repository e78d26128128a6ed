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

#ifndef MCLP_DISCRETIZATION_H_
#define MCLP_DISCRETIZATION_H_

#include <utility>
#include <vector>

#include "mclp/lp_core.h"
#include "mclp/model.h"

namespace mclp {

struct Partition {
  std::vector<double> breakpoints;  // 0 = t_0 < ... < t_N = T
  bool equidistant = false;
  double epsilon = 0.0;  // T / (2N) when equidistant, else 0

  int size() const { return static_cast<int>(breakpoints.size()) - 1; }
  double horizon() const { return breakpoints.back(); }
};

// Throws Error(kMalformedProblem) unless the breakpoints start at exactly 0
// and increase strictly. Detects equidistance with tolerance 1e-12 T.
Partition MakePartition(std::vector<double> breakpoints);
Partition EquidistantPartition(double horizon, int n);
// Breakpoints T - t_{N-n}: the same partition seen in dual time.
Partition ReversePartition(const Partition& part);

// A solution of dCLP1 (or of dCLP2 seen in dual time): the atom at 0, the
// increments Delta U^1..Delta U^N over the partition intervals, the atom at
// T, and the N + 2 slack vectors x^0, x^1..x^N and the one after the atom.
struct DiscreteSolution {
  Vector atom_start;
  std::vector<Vector> increments;
  Vector atom_end;
  std::vector<Vector> slacks;
  // Objective with the midpoint weights of dCLP1 (primal side) or dCLP2
  // (dual side, reported as the minimization value).
  double value = 0.0;
};

// Variables [u^0, Delta U^1..Delta U^N, u^N] (J each), all P; rows
// [row 0, rows 1..N, final row] (K each) as <= inequalities; the slacks are
// the implicit row slacks. Maximization with midpoint weights.
LpProblem BuildDclp1(const ProblemData& p, const Partition& part);

// Variables [p^N, Delta P^1..Delta P^N, p^0] (K each, Delta P^i belongs to
// primal interval i), all P; rows [A' p^N >= gamma, middle rows n = 1..N,
// final row] as >= inequalities. Minimization with midpoint weights.
LpProblem BuildDclp2(const ProblemData& p, const Partition& part);

// mdCLP / mdCLP*: the dCLP1 / dCLP2 constraints with the right-endpoint
// weights gamma + c (T - t_{i-1}) and beta + b t_i. The pair is checked to be
// an LP-dual pair. Throws Error(kNotEquidistant).
std::pair<LpProblem, LpProblem> BuildMdclpPair(const ProblemData& p,
                                               const Partition& part);

// Row and column correspondence between LpDual(mdCLP) and mdCLP*: the first
// and last blocks trade places, middle blocks stay.
std::vector<int> MdclpBlockPermutation(int block, int n);

// Decoding of LP vectors. The dual-side decoders return solutions in dual
// time over ReversePartition(part).
DiscreteSolution PrimalDiscreteSolution(const ProblemData& p,
                                        const Partition& part,
                                        const Vector& dclp1_vars);
DiscreteSolution DualDiscreteSolution(const ProblemData& p,
                                      const Partition& part,
                                      const Vector& dclp2_vars);
// Optimal mdCLP* variables read off mdCLP row prices.
Vector MdclpDualsToDclp2Vars(const ProblemData& p, const Partition& part,
                             const Vector& mdclp_row_duals);
Vector DiscreteToLpVars(const DiscreteSolution& sol);

struct GapCertificate {
  double v_low = 0.0;
  double v_high = 0.0;
  double posterior_gap = 0.0;
  double upsilon = 0.0;
  double prior_bound = 0.0;
};

// upsilon = c' sum Delta U* - b' sum Delta P*, prior_bound = upsilon eps.
// Only those two fields are filled.
GapCertificate GapBound(const Vector& c, const Vector& b,
                        const std::vector<Vector>& delta_u,
                        const std::vector<Vector>& delta_p, double epsilon);

struct CoarseBounds {
  double v_lower = 0.0;
  double v_upper = 0.0;
};

// V_L and V_U from the single-interval mdCLP pair. When the optimum is not
// unique the tightest admissible optimum is used (a second LP over the
// optimal face). Throws Error(kInfeasiblePrimal / kInfeasibleDual).
CoarseBounds ComputeCoarseBounds(const ProblemData& p,
                                 const SimplexOptions& options = {});

}  // namespace mclp

#endif  // MCLP_DISCRETIZATION_H_
