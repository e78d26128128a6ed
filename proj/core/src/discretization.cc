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

#include "mclp/discretization.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mclp/error.h"

namespace mclp {
namespace {

enum class Weights { kMidpoint, kEndpoint };

LpProblem PrimalLp(const ProblemData& p, const Partition& part, Weights w) {
  ValidateProblem(p);
  if (std::abs(part.horizon() - p.horizon) > 1e-12 * p.horizon) {
    throw Error(ErrorCode::kMalformedProblem,
                "partition does not end at the horizon");
  }
  const int k = p.num_rows();
  const int j = p.num_cols();
  const int n = part.size();
  const double T = p.horizon;
  const auto& t = part.breakpoints;

  LpProblem lp;
  lp.direction = Direction::kMaximize;
  lp.constraints = Matrix::Zero(k * (n + 2), j * (n + 2));
  lp.rhs.resize(k * (n + 2));
  lp.objective.resize(j * (n + 2));
  for (int r = 0; r < n + 2; ++r) {
    const double tr = r == 0 ? 0.0 : (r <= n ? t[r] : T);
    lp.rhs.segment(r * k, k) = p.beta + tr * p.b;
    for (int col = 0; col <= r; ++col) {
      lp.constraints.block(r * k, col * j, k, j) = p.A;
    }
  }
  lp.objective.head(j) = p.gamma + T * p.c;
  for (int i = 1; i <= n; ++i) {
    const double weight_time = w == Weights::kMidpoint
                                   ? T - 0.5 * (t[i] + t[i - 1])
                                   : T - t[i - 1];
    lp.objective.segment(i * j, j) = p.gamma + weight_time * p.c;
  }
  lp.objective.tail(j) = p.gamma;
  lp.relations.assign(lp.num_rows(), Relation::kLessEqual);
  lp.restrictions.assign(lp.num_cols(), SignRestriction::kNonNegative);
  return lp;
}

LpProblem DualLp(const ProblemData& p, const Partition& part, Weights w) {
  ValidateProblem(p);
  if (std::abs(part.horizon() - p.horizon) > 1e-12 * p.horizon) {
    throw Error(ErrorCode::kMalformedProblem,
                "partition does not end at the horizon");
  }
  const int k = p.num_rows();
  const int j = p.num_cols();
  const int n = part.size();
  const double T = p.horizon;
  const auto& t = part.breakpoints;
  const Matrix At = p.A.transpose();

  LpProblem lp;
  lp.direction = Direction::kMinimize;
  lp.constraints = Matrix::Zero(j * (n + 2), k * (n + 2));
  lp.rhs.resize(j * (n + 2));
  lp.objective.resize(k * (n + 2));

  lp.rhs.head(j) = p.gamma;
  for (int r = 1; r <= n; ++r) {
    lp.rhs.segment(r * j, j) = p.gamma + (T - t[r - 1]) * p.c;
  }
  lp.rhs.tail(j) = p.gamma + T * p.c;

  for (int r = 0; r < n + 2; ++r) {
    lp.constraints.block(r * j, 0, j, k) = At;
  }
  for (int i = 1; i <= n; ++i) {
    for (int r = 1; r <= i; ++r) {
      lp.constraints.block(r * j, i * k, j, k) = At;
    }
    lp.constraints.block((n + 1) * j, i * k, j, k) = At;
  }
  lp.constraints.block((n + 1) * j, (n + 1) * k, j, k) = At;

  lp.objective.head(k) = p.beta + T * p.b;
  for (int i = 1; i <= n; ++i) {
    const double weight_time =
        w == Weights::kMidpoint ? 0.5 * (t[i] + t[i - 1]) : t[i];
    lp.objective.segment(i * k, k) = p.beta + weight_time * p.b;
  }
  lp.objective.tail(k) = p.beta;
  lp.relations.assign(lp.num_rows(), Relation::kGreaterEqual);
  lp.restrictions.assign(lp.num_cols(), SignRestriction::kNonNegative);
  return lp;
}

}  // namespace

Partition MakePartition(std::vector<double> breakpoints) {
  if (breakpoints.size() < 2 || breakpoints.front() != 0.0) {
    throw Error(ErrorCode::kMalformedProblem,
                "partition needs breakpoints 0 = t_0 < ... < t_N");
  }
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1]) ||
        !std::isfinite(breakpoints[i + 1])) {
      throw Error(ErrorCode::kMalformedProblem,
                  "partition breakpoints must increase strictly");
    }
  }
  Partition part;
  part.breakpoints = std::move(breakpoints);
  const int n = part.size();
  const double T = part.horizon();
  part.equidistant = true;
  for (int i = 0; i <= n; ++i) {
    if (std::abs(part.breakpoints[i] - i * T / n) > 1e-12 * T) {
      part.equidistant = false;
      break;
    }
  }
  part.epsilon = part.equidistant ? T / (2.0 * n) : 0.0;
  return part;
}

Partition EquidistantPartition(double horizon, int n) {
  if (n < 1 || !(horizon > 0.0)) {
    throw Error(ErrorCode::kMalformedProblem,
                "equidistant partition needs N >= 1 and T > 0");
  }
  std::vector<double> t(n + 1);
  for (int i = 0; i < n; ++i) t[i] = i * horizon / n;
  t[n] = horizon;
  return MakePartition(std::move(t));
}

Partition ReversePartition(const Partition& part) {
  const int n = part.size();
  const double T = part.horizon();
  std::vector<double> t(n + 1);
  t[0] = 0.0;
  for (int i = 1; i < n; ++i) t[i] = T - part.breakpoints[n - i];
  t[n] = T;
  return MakePartition(std::move(t));
}

LpProblem BuildDclp1(const ProblemData& p, const Partition& part) {
  return PrimalLp(p, part, Weights::kMidpoint);
}

LpProblem BuildDclp2(const ProblemData& p, const Partition& part) {
  return DualLp(p, part, Weights::kMidpoint);
}

std::vector<int> MdclpBlockPermutation(int block, int n) {
  std::vector<int> perm(block * (n + 2));
  for (int r = 0; r < n + 2; ++r) {
    const int target = r == 0 ? n + 1 : (r == n + 1 ? 0 : r);
    for (int e = 0; e < block; ++e) perm[r * block + e] = target * block + e;
  }
  return perm;
}

std::pair<LpProblem, LpProblem> BuildMdclpPair(const ProblemData& p,
                                               const Partition& part) {
  if (!part.equidistant) {
    throw Error(ErrorCode::kNotEquidistant,
                "mdCLP is defined on equidistant partitions only");
  }
  std::pair<LpProblem, LpProblem> pair{PrimalLp(p, part, Weights::kEndpoint),
                                       DualLp(p, part, Weights::kEndpoint)};
  const int n = part.size();
  if (!LpStructurallyEqual(LpDual(pair.first), pair.second,
                           MdclpBlockPermutation(p.num_cols(), n),
                           MdclpBlockPermutation(p.num_rows(), n), 0.0)) {
    throw Error(ErrorCode::kNumericalFailure,
                "mdCLP and mdCLP* are not an LP-dual pair");
  }
  return pair;
}

DiscreteSolution PrimalDiscreteSolution(const ProblemData& p,
                                        const Partition& part,
                                        const Vector& vars) {
  const int j = p.num_cols();
  const int n = part.size();
  if (vars.size() != j * (n + 2)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dCLP1 vector has length " + std::to_string(vars.size()));
  }
  const double T = p.horizon;
  const auto& t = part.breakpoints;

  DiscreteSolution sol;
  sol.atom_start = vars.head(j);
  sol.atom_end = vars.tail(j);
  Vector cumulative = sol.atom_start;
  sol.slacks.push_back(p.beta - p.A * cumulative);
  sol.value = (p.gamma + T * p.c).dot(sol.atom_start);
  for (int i = 1; i <= n; ++i) {
    const Vector inc = vars.segment(i * j, j);
    sol.increments.push_back(inc);
    cumulative += inc;
    sol.slacks.push_back(p.beta + t[i] * p.b - p.A * cumulative);
    sol.value += (p.gamma + (T - 0.5 * (t[i] + t[i - 1])) * p.c).dot(inc);
  }
  cumulative += sol.atom_end;
  sol.slacks.push_back(p.beta + T * p.b - p.A * cumulative);
  sol.value += p.gamma.dot(sol.atom_end);
  return sol;
}

DiscreteSolution DualDiscreteSolution(const ProblemData& p,
                                      const Partition& part,
                                      const Vector& vars) {
  const int k = p.num_rows();
  const int n = part.size();
  if (vars.size() != k * (n + 2)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dCLP2 vector has length " + std::to_string(vars.size()));
  }
  // In dual time the increments run over primal intervals N..1.
  Vector reordered(vars.size());
  reordered.head(k) = vars.head(k);
  for (int i = 1; i <= n; ++i) {
    reordered.segment(i * k, k) = vars.segment((n + 1 - i) * k, k);
  }
  reordered.tail(k) = vars.tail(k);
  DiscreteSolution sol = PrimalDiscreteSolution(
      DualProblem(p), ReversePartition(part), reordered);
  sol.value = -sol.value;
  return sol;
}

Vector MdclpDualsToDclp2Vars(const ProblemData& p, const Partition& part,
                             const Vector& duals) {
  const int k = p.num_rows();
  const int n = part.size();
  if (duals.size() != k * (n + 2)) {
    throw Error(ErrorCode::kDimensionMismatch, "mdCLP dual has wrong length");
  }
  const std::vector<int> perm = MdclpBlockPermutation(k, n);
  Vector vars(duals.size());
  for (int i = 0; i < duals.size(); ++i) vars[perm[i]] = duals[i];
  return vars;
}

Vector DiscreteToLpVars(const DiscreteSolution& sol) {
  const int j = static_cast<int>(sol.atom_start.size());
  const int n = static_cast<int>(sol.increments.size());
  Vector vars(j * (n + 2));
  vars.head(j) = sol.atom_start;
  for (int i = 0; i < n; ++i) vars.segment((i + 1) * j, j) = sol.increments[i];
  vars.tail(j) = sol.atom_end;
  return vars;
}

GapCertificate GapBound(const Vector& c, const Vector& b,
                        const std::vector<Vector>& delta_u,
                        const std::vector<Vector>& delta_p, double epsilon) {
  Vector su = Vector::Zero(c.size());
  Vector sp = Vector::Zero(b.size());
  for (const Vector& v : delta_u) su += v;
  for (const Vector& v : delta_p) sp += v;
  GapCertificate cert;
  cert.upsilon = c.dot(su) - b.dot(sp);
  cert.prior_bound = cert.upsilon * epsilon;
  return cert;
}

CoarseBounds ComputeCoarseBounds(const ProblemData& p,
                                 const SimplexOptions& options) {
  const int k = p.num_rows();
  const int j = p.num_cols();
  const double T = p.horizon;
  const Partition single = EquidistantPartition(T, 1);
  auto [primal, dual] = BuildMdclpPair(p, single);

  const LpOutcome primal_out = SolveLp(primal, options);
  if (primal_out.status == LpStatus::kInfeasible) {
    throw Error(ErrorCode::kInfeasiblePrimal, "mdCLP(pi^1) is infeasible");
  }
  if (primal_out.status == LpStatus::kUnbounded) {
    throw Error(ErrorCode::kInfeasibleDual,
                "mdCLP(pi^1) is unbounded, so its dual is infeasible");
  }
  // mdCLP and mdCLP* are an LP-dual pair, so the dual optimum is known.
  const double value = primal_out.objective_value;
  const double slack = 1e-9 * (1.0 + std::abs(value));

  const Vector c_plus = p.c.cwiseMax(0.0);
  const Vector c_minus = (-p.c).cwiseMax(0.0);
  const Vector b_plus = p.b.cwiseMax(0.0);
  const Vector b_minus = (-p.b).cwiseMax(0.0);

  // Among the optima, pick the one maximizing V_L (minimizing V_U).
  auto restrict_to_optima = [&](LpProblem lp, const Vector& objective,
                                Relation relation, double level) {
    const int m = lp.num_rows();
    lp.constraints.conservativeResize(m + 1, Eigen::NoChange);
    lp.constraints.row(m) = lp.objective.transpose();
    lp.rhs.conservativeResize(m + 1);
    lp.rhs[m] = level;
    lp.relations.push_back(relation);
    lp.objective = objective;
    return lp;
  };

  Vector lower_weights(3 * j);
  lower_weights << p.gamma + T * p.c,
      p.gamma + 0.5 * T * c_plus - T * c_minus, p.gamma;
  const LpOutcome lower = SolveLp(
      restrict_to_optima(primal, lower_weights, Relation::kGreaterEqual,
                         value - slack),
      options);

  Vector upper_weights(3 * k);
  upper_weights << p.beta + T * p.b, p.beta + T * b_plus - 0.5 * T * b_minus,
      p.beta;
  const LpOutcome upper = SolveLp(
      restrict_to_optima(dual, upper_weights, Relation::kLessEqual,
                         value + slack),
      options);
  if (lower.status != LpStatus::kOptimal ||
      upper.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kNumericalFailure,
                "coarse bound LP over the optimal face failed");
  }
  return CoarseBounds{lower.objective_value, upper.objective_value};
}

}  // namespace mclp
