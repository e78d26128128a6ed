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

#include "mclp/model.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mclp/error.h"

namespace mclp {
namespace {

void Require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) throw Error(code, what);
}

// Index n of the interval [t_n, t_{n+1}) containing t, clamped to the valid
// range so that t = T maps to the last interval.
int IntervalIndex(const MeasureSolution& sol, double t) {
  const auto& tp = sol.partition;
  auto it = std::upper_bound(tp.begin(), tp.end(), t);
  int n = static_cast<int>(it - tp.begin()) - 1;
  return std::clamp(n, 0, sol.num_intervals() - 1);
}

// Mass of the density on [0, t]; atoms are added by the callers.
Vector AbsolutelyContinuousPart(const MeasureSolution& sol, double t) {
  Vector u = Vector::Zero(sol.dimension());
  const auto& tp = sol.partition;
  for (int n = 0; n < sol.num_intervals(); ++n) {
    if (t <= tp[n]) break;
    const double upper = std::min(t, tp[n + 1]);
    u += (upper - tp[n]) * sol.densities[n];
  }
  return u;
}

Vector Slack(const ProblemData& p, double t, const Vector& u) {
  return p.beta + t * p.b - p.A * u;
}

// q(t) = A' P(t) - gamma - c t for a dual-side cumulative value.
Vector DualSlack(const ProblemData& p, double t, const Vector& pcum) {
  return p.A.transpose() * pcum - p.gamma - t * p.c;
}

}  // namespace

void ValidateProblem(const ProblemData& p) {
  const int k = p.num_rows();
  const int j = p.num_cols();
  const ErrorCode bad = ErrorCode::kMalformedProblem;
  Require(k >= 1 && j >= 1, bad, "A must have at least one row and column");
  Require(p.beta.size() == k, bad, "beta length must equal rows of A");
  Require(p.b.size() == k, bad, "b length must equal rows of A");
  Require(p.gamma.size() == j, bad, "gamma length must equal columns of A");
  Require(p.c.size() == j, bad, "c length must equal columns of A");
  Require(std::isfinite(p.horizon) && p.horizon > 0.0, bad,
          "horizon must be positive and finite");
  Require(p.A.allFinite() && p.beta.allFinite() && p.b.allFinite() &&
              p.gamma.allFinite() && p.c.allFinite(),
          bad, "problem data must be finite");
}

MeasureSolution ZeroMeasure(int dimension, double horizon) {
  MeasureSolution sol;
  sol.atom_start = Vector::Zero(dimension);
  sol.partition = {0.0, horizon};
  sol.densities = {Vector::Zero(dimension)};
  sol.atom_end = Vector::Zero(dimension);
  return sol;
}

void ValidateMeasure(const MeasureSolution& sol, int dimension,
                     double horizon) {
  const ErrorCode bad = ErrorCode::kDimensionMismatch;
  Require(sol.atom_start.size() == dimension, bad,
          "atom_start has dimension " + std::to_string(sol.atom_start.size()) +
              ", expected " + std::to_string(dimension));
  Require(sol.atom_end.size() == dimension, bad,
          "atom_end has the wrong dimension");
  Require(sol.partition.size() >= 2, bad, "partition needs two breakpoints");
  Require(sol.densities.size() + 1 == sol.partition.size(), bad,
          "need one density per partition interval");
  Require(sol.partition.front() == 0.0, bad, "partition must start at 0");
  Require(std::abs(sol.partition.back() - horizon) <= 1e-12 * horizon, bad,
          "partition must end at the horizon");
  for (size_t n = 0; n + 1 < sol.partition.size(); ++n) {
    Require(sol.partition[n] < sol.partition[n + 1], bad,
            "partition must be strictly increasing");
    Require(sol.densities[n].size() == dimension, bad,
            "density " + std::to_string(n) + " has the wrong dimension");
  }
  double previous = 0.0;
  for (const InteriorAtom& atom : sol.interior_atoms) {
    Require(atom.mass.size() == dimension, bad,
            "interior atom has the wrong dimension");
    Require(atom.time > previous && atom.time < sol.partition.back(), bad,
            "interior atoms must be sorted and strictly inside (0, T)");
    previous = atom.time;
  }
}

ProblemData DualProblem(const ProblemData& p) {
  ProblemData d;
  d.A = -p.A.transpose();
  d.beta = -p.gamma;
  d.b = -p.c;
  d.gamma = -p.beta;
  d.c = -p.b;
  d.horizon = p.horizon;
  return d;
}

Vector CumulativeBefore(const MeasureSolution& sol, double t) {
  if (t <= 0.0) return Vector::Zero(sol.dimension());
  Vector u = sol.atom_start + AbsolutelyContinuousPart(sol, t);
  for (const InteriorAtom& atom : sol.interior_atoms) {
    if (atom.time < t) u += atom.mass;
  }
  return u;
}

Vector CumulativeAt(const MeasureSolution& sol, double t) {
  Vector u = sol.atom_start + AbsolutelyContinuousPart(sol, t);
  for (const InteriorAtom& atom : sol.interior_atoms) {
    if (atom.time <= t) u += atom.mass;
  }
  if (t >= sol.horizon()) u += sol.atom_end;
  return u;
}

const Vector& DensityAt(const MeasureSolution& sol, double t) {
  return sol.densities[IntervalIndex(sol, t)];
}

double EvaluateObjective(const ProblemData& p, const MeasureSolution& sol) {
  const double T = p.horizon;
  ValidateMeasure(sol, p.num_cols(), T);
  double value = (p.gamma + T * p.c).dot(sol.atom_start);
  for (int n = 0; n < sol.num_intervals(); ++n) {
    const double lo = sol.partition[n];
    const double hi = sol.partition[n + 1];
    const double mid = 0.5 * (lo + hi);
    value += (hi - lo) * (p.gamma + (T - mid) * p.c).dot(sol.densities[n]);
  }
  for (const InteriorAtom& atom : sol.interior_atoms) {
    value += (p.gamma + (T - atom.time) * p.c).dot(atom.mass);
  }
  value += p.gamma.dot(sol.atom_end);
  return value;
}

TrajectoryPoint SlackAt(const ProblemData& p, const MeasureSolution& sol,
                        double t) {
  ValidateMeasure(sol, p.num_cols(), p.horizon);
  if (!(t >= 0.0 && t <= p.horizon)) {
    throw Error(ErrorCode::kTimeOutOfRange,
                "t = " + std::to_string(t) + " outside [0, T]");
  }
  TrajectoryPoint point;
  point.t = t;
  point.U = CumulativeAt(sol, t);
  point.slack = Slack(p, t, point.U);
  return point;
}

MeasureFeasibility CheckFeasibleMeasure(const ProblemData& p,
                                        const MeasureSolution& sol,
                                        double tol) {
  ValidateMeasure(sol, p.num_cols(), p.horizon);
  MeasureFeasibility result;
  auto consider = [&](double violation, double t) {
    if (violation > result.worst_violation) {
      result.worst_violation = violation;
      result.worst_t = t;
    }
  };
  auto negativity = [](const Vector& v) {
    return v.size() == 0 ? 0.0 : std::max(0.0, -v.minCoeff());
  };

  consider(negativity(sol.atom_start), 0.0);
  consider(negativity(sol.atom_end), p.horizon);
  for (int n = 0; n < sol.num_intervals(); ++n) {
    consider(negativity(sol.densities[n]), sol.partition[n]);
  }
  for (const InteriorAtom& atom : sol.interior_atoms) {
    consider(negativity(atom.mass), atom.time);
  }

  std::vector<double> times(sol.partition);
  for (const InteriorAtom& atom : sol.interior_atoms) {
    times.push_back(atom.time);
  }
  std::sort(times.begin(), times.end());
  for (double t : times) {
    consider(negativity(Slack(p, t, CumulativeAt(sol, t))), t);
    if (t > 0.0) {
      consider(negativity(Slack(p, t, CumulativeBefore(sol, t))), t);
    }
  }
  result.feasible = result.worst_violation <= tol;
  return result;
}

double ComplementarySlacknessResidual(const ProblemData& p,
                                      const MeasureSolution& primal,
                                      const MeasureSolution& dual) {
  const double T = p.horizon;
  ValidateMeasure(primal, p.num_cols(), T);
  ValidateMeasure(dual, p.num_rows(), T);

  // Breakpoints of both integrands in primal time.
  std::vector<double> cuts(primal.partition);
  for (double tau : dual.partition) cuts.push_back(T - tau);
  for (const InteriorAtom& atom : primal.interior_atoms) {
    cuts.push_back(atom.time);
  }
  for (const InteriorAtom& atom : dual.interior_atoms) {
    cuts.push_back(T - atom.time);
  }
  for (double& s : cuts) s = std::clamp(s, 0.0, T);
  std::sort(cuts.begin(), cuts.end());

  auto x_at = [&](double s) { return Slack(p, s, CumulativeAt(primal, s)); };
  auto q_at = [&](double tau) {
    return DualSlack(p, tau, CumulativeAt(dual, tau));
  };

  double residual = 0.0;
  // Both integrands are linear times constant on every piece, so the
  // midpoint rule is exact.
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double len = cuts[k + 1] - cuts[k];
    if (len <= 0.0) continue;
    const double s = 0.5 * (cuts[k] + cuts[k + 1]);
    const double tau = T - s;
    residual += len * x_at(s).dot(DensityAt(dual, tau));
    residual += len * q_at(tau).dot(DensityAt(primal, s));
  }

  residual += q_at(T).dot(primal.atom_start);
  residual += q_at(0.0).dot(primal.atom_end);
  for (const InteriorAtom& atom : primal.interior_atoms) {
    residual += q_at(T - atom.time).dot(atom.mass);
  }
  residual += x_at(T).dot(dual.atom_start);
  residual += x_at(0.0).dot(dual.atom_end);
  for (const InteriorAtom& atom : dual.interior_atoms) {
    residual += x_at(T - atom.time).dot(atom.mass);
  }
  return residual;
}

}  // namespace mclp
