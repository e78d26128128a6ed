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

#ifndef MCLP_SOLVER_DRIVER_H_
#define MCLP_SOLVER_DRIVER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mclp/discretization.h"
#include "mclp/lp_core.h"
#include "mclp/model.h"

namespace mclp {

enum class SolveStatus {
  kOptimal,
  kInfeasible,
  kDualInfeasible,
  kGapNotCertified,
  kUnbounded,
};

std::string_view SolveStatusName(SolveStatus status);

struct SolveOptions {
  // Stop once V(dCLP2) - V(dCLP1) <= tol (1 + |V(dCLP1)|).
  double tol = 1e-6;
  int n_max = 4096;
  // Refinement also stops before a level whose dense LPs would have more
  // than this many matrix entries.
  double max_lp_entries = 6.0e7;
  // Strict-feasibility margins at or below this value produce a warning.
  double slater_warning = 1e-7;
  bool compute_coarse_bounds = true;
  // Solve the LPs of one level concurrently.
  bool parallel = true;
  SimplexOptions simplex;
};

struct LevelRecord {
  int n = 0;
  double v_low = 0.0;
  double v_high = 0.0;
  double posterior_gap = 0.0;
  double upsilon = 0.0;
  double prior_bound = 0.0;
  double mdclp_value = 0.0;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kGapNotCertified;
  MeasureSolution primal;
  MeasureSolution dual;  // dual time
  double v_low = 0.0;
  double v_high = 0.0;
  double certified_gap = 0.0;
  std::vector<LevelRecord> history;
  int n_final = 0;
  double slater_primal = 0.0;
  double slater_dual = 0.0;
  std::optional<CoarseBounds> coarse_bounds;
  // Farkas vector of the failing Test-LP for kInfeasible / kDualInfeasible.
  std::optional<Vector> certificate;
  std::vector<std::string> warnings;

  // The final level in discrete form.
  Partition partition;
  DiscreteSolution primal_discrete;
  DiscreteSolution dual_discrete;
};

// Feasibility gate on both sides, then N = 1, 2, 4, ... <= n_max: dCLP1,
// dCLP2 and the mdCLP pair on the equidistant partition until the
// a-posteriori gap meets options.tol. Throws Error(kMalformedProblem) for bad
// input and Error(kNumericalFailure) when the discrete values contradict the
// theory beyond tolerance.
SolveReport Solve(const ProblemData& p, const SolveOptions& options = {});

struct ValueBracket {
  int n = 0;
  double v_low = 0.0;
  double v_high = 0.0;
};

// V(dCLP1) and V(dCLP2) on equidistant partitions with the given sizes.
// Throws Error(kInfeasiblePrimal / kInfeasibleDual) when a side has no
// finite value.
std::vector<ValueBracket> ValueBrackets(const ProblemData& p,
                                        const std::vector<int>& sizes,
                                        const SimplexOptions& options = {});

}  // namespace mclp

#endif  // MCLP_SOLVER_DRIVER_H_
