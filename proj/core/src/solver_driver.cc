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

#include "mclp/solver_driver.h"

#include <cmath>
#include <future>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "mclp/error.h"
#include "mclp/extension.h"
#include "mclp/feasibility.h"

namespace mclp {
namespace {

struct LevelSolves {
  LpOutcome dclp1;
  LpOutcome dclp2;
  LpOutcome mdclp;
};

LevelSolves SolveLevel(const ProblemData& p, const Partition& part,
                       const SolveOptions& options) {
  auto dclp1 = [&] { return SolveLp(BuildDclp1(p, part), options.simplex); };
  auto dclp2 = [&] { return SolveLp(BuildDclp2(p, part), options.simplex); };
  // mdCLP* is the LP dual of mdCLP; its optimum is read off the row prices.
  auto mdclp = [&] {
    return SolveLp(BuildMdclpPair(p, part).first, options.simplex);
  };
  LevelSolves out;
  if (options.parallel) {
    auto f1 = std::async(std::launch::async, dclp1);
    auto f2 = std::async(std::launch::async, dclp2);
    out.mdclp = mdclp();
    out.dclp1 = f1.get();
    out.dclp2 = f2.get();
  } else {
    out.dclp1 = dclp1();
    out.dclp2 = dclp2();
    out.mdclp = mdclp();
  }
  return out;
}

std::string Format(const char* what, double value) {
  std::ostringstream os;
  os.precision(6);
  os << what << value;
  return os.str();
}

}  // namespace

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "Optimal";
    case SolveStatus::kInfeasible: return "Infeasible";
    case SolveStatus::kDualInfeasible: return "DualInfeasible";
    case SolveStatus::kGapNotCertified: return "GapNotCertified";
    case SolveStatus::kUnbounded: return "Unbounded";
  }
  return "Unknown";
}

SolveReport Solve(const ProblemData& p, const SolveOptions& options) {
  ValidateProblem(p);
  if (!(options.tol > 0.0) || options.n_max < 1) {
    throw Error(ErrorCode::kMalformedProblem, "need tol > 0 and n_max >= 1");
  }
  const int k = p.num_rows();
  const int j = p.num_cols();
  SolveReport report;

  const FeasibilityReport primal_feas = CheckFeasibility(p, options.simplex);
  const FeasibilityReport dual_feas =
      CheckFeasibility(DualProblem(p), options.simplex);
  report.slater_primal = primal_feas.strict_margin;
  report.slater_dual = dual_feas.strict_margin;
  if (!primal_feas.feasible) {
    report.status = SolveStatus::kInfeasible;
    report.certificate = primal_feas.certificate;
    return report;
  }
  if (!dual_feas.feasible) {
    report.status = SolveStatus::kDualInfeasible;
    report.certificate = dual_feas.certificate;
    return report;
  }
  if (report.slater_primal <= options.slater_warning) {
    report.warnings.push_back(
        Format("primal is not strictly feasible; margin ",
               report.slater_primal));
  }
  if (report.slater_dual <= options.slater_warning) {
    report.warnings.push_back(
        Format("dual is not strictly feasible; margin ", report.slater_dual));
  }

  if (options.compute_coarse_bounds) {
    try {
      report.coarse_bounds = ComputeCoarseBounds(p, options.simplex);
    } catch (const Error& e) {
      report.warnings.push_back(std::string("coarse bounds: ") + e.what());
    }
  }

  bool have_level = false;
  for (long long n = 1; n <= options.n_max; n *= 2) {
    const double entries =
        static_cast<double>(k) * static_cast<double>(j) * (n + 2.0) * (n + 2.0);
    if (have_level && entries > options.max_lp_entries) {
      report.warnings.push_back(
          "refinement stopped at N = " + std::to_string(report.n_final) +
          ": the next level exceeds the LP size limit");
      break;
    }
    const Partition part = EquidistantPartition(p.horizon, static_cast<int>(n));
    const LevelSolves level = SolveLevel(p, part, options);

    if (level.dclp1.status == LpStatus::kUnbounded) {
      report.status = SolveStatus::kUnbounded;
      report.n_final = static_cast<int>(n);
      report.v_low = report.v_high = std::numeric_limits<double>::infinity();
      return report;
    }
    if (level.dclp1.status != LpStatus::kOptimal ||
        level.dclp2.status != LpStatus::kOptimal ||
        level.mdclp.status != LpStatus::kOptimal) {
      throw Error(ErrorCode::kNumericalFailure,
                  "discretized LPs disagree with the feasibility test at N = " +
                      std::to_string(n));
    }

    LevelRecord record;
    record.n = static_cast<int>(n);
    record.v_low = level.dclp1.objective_value;
    record.v_high = level.dclp2.objective_value;
    record.posterior_gap = record.v_high - record.v_low;
    record.mdclp_value = level.mdclp.objective_value;

    const DiscreteSolution md_primal =
        PrimalDiscreteSolution(p, part, level.mdclp.primal);
    const DiscreteSolution md_dual = DualDiscreteSolution(
        p, part, MdclpDualsToDclp2Vars(p, part, level.mdclp.dual));
    const GapCertificate prior = GapBound(p.c, p.b, md_primal.increments,
                                          md_dual.increments, part.epsilon);
    record.upsilon = prior.upsilon;
    record.prior_bound = prior.prior_bound;

    const double scale = 1.0 + std::abs(record.v_low);
    if (record.posterior_gap < -1e-7 * scale) {
      throw Error(ErrorCode::kNumericalFailure,
                  Format("negative duality gap ", record.posterior_gap));
    }
    double upsilon_scale = 1.0;
    for (const Vector& v : md_primal.increments) {
      upsilon_scale += p.c.cwiseAbs().dot(v.cwiseAbs());
    }
    for (const Vector& v : md_dual.increments) {
      upsilon_scale += p.b.cwiseAbs().dot(v.cwiseAbs());
    }
    if (record.upsilon < -1e-7 * upsilon_scale) {
      throw Error(ErrorCode::kNumericalFailure,
                  Format("negative gap predictor upsilon ", record.upsilon));
    }
    if (report.coarse_bounds &&
        (record.mdclp_value < report.coarse_bounds->v_lower - 1e-7 * scale ||
         record.mdclp_value > report.coarse_bounds->v_upper + 1e-7 * scale)) {
      report.warnings.push_back("V(mdCLP) outside the coarse bounds at N = " +
                                std::to_string(n));
    }
    if (have_level) {
      const LevelRecord& prev = report.history.back();
      if (record.v_low < prev.v_low - 1e-7 * scale ||
          record.v_high > prev.v_high + 1e-7 * scale) {
        report.warnings.push_back(
            "bracket not monotone under refinement at N = " +
            std::to_string(n));
      }
    }
    report.history.push_back(record);

    report.partition = part;
    report.primal_discrete = PrimalDiscreteSolution(p, part, level.dclp1.primal);
    report.dual_discrete = DualDiscreteSolution(p, part, level.dclp2.primal);
    report.v_low = record.v_low;
    report.v_high = record.v_high;
    report.certified_gap = record.posterior_gap;
    report.n_final = record.n;
    have_level = true;

    if (record.posterior_gap <= options.tol * scale) {
      report.status = SolveStatus::kOptimal;
      break;
    }
  }
  if (report.status != SolveStatus::kOptimal) {
    report.status = SolveStatus::kGapNotCertified;
  }
  report.primal = ExtendDiscrete(report.primal_discrete, report.partition);
  report.dual = ExtendDiscrete(report.dual_discrete,
                               ReversePartition(report.partition));
  return report;
}

std::vector<ValueBracket> ValueBrackets(const ProblemData& p,
                                        const std::vector<int>& sizes,
                                        const SimplexOptions& options) {
  std::vector<ValueBracket> out;
  for (int n : sizes) {
    const Partition part = EquidistantPartition(p.horizon, n);
    const LpOutcome low = SolveLp(BuildDclp1(p, part), options);
    const LpOutcome high = SolveLp(BuildDclp2(p, part), options);
    if (low.status != LpStatus::kOptimal) {
      throw Error(ErrorCode::kInfeasiblePrimal,
                  "dCLP1 has no optimum at N = " + std::to_string(n));
    }
    if (high.status != LpStatus::kOptimal) {
      throw Error(ErrorCode::kInfeasibleDual,
                  "dCLP2 has no optimum at N = " + std::to_string(n));
    }
    out.push_back({n, low.objective_value, high.objective_value});
  }
  return out;
}

}  // namespace mclp
