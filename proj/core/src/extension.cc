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

#include "mclp/extension.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mclp/error.h"

namespace mclp {
namespace {

void CheckTime(const std::vector<double>& breakpoints, double t) {
  if (!(t >= breakpoints.front() && t <= breakpoints.back())) {
    throw Error(ErrorCode::kTimeOutOfRange,
                "t = " + std::to_string(t) + " outside the partition");
  }
}

int Locate(const std::vector<double>& breakpoints, double t) {
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
  const int i = static_cast<int>(it - breakpoints.begin()) - 1;
  return std::clamp(i, 0, static_cast<int>(breakpoints.size()) - 2);
}

double MinCoeffOrZero(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.minCoeff();
}

// Mass of the measure on [lo, hi), excluding the atom at 0.
Vector MassOn(const MeasureSolution& sol, double lo, double hi) {
  Vector mass = Vector::Zero(sol.dimension());
  for (int k = 0; k < sol.num_intervals(); ++k) {
    const double a = std::max(lo, sol.partition[k]);
    const double b = std::min(hi, sol.partition[k + 1]);
    if (b > a) mass += (b - a) * sol.densities[k];
  }
  for (const InteriorAtom& atom : sol.interior_atoms) {
    if (atom.time >= lo && atom.time < hi) mass += atom.mass;
  }
  return mass;
}

}  // namespace

StepFunction::StepFunction(std::vector<Vector> values,
                           std::vector<double> breakpoints)
    : values_(std::move(values)), breakpoints_(std::move(breakpoints)) {
  if (values_.size() + 1 != breakpoints_.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "step function needs one value per interval");
  }
}

Vector StepFunction::operator()(double t) const {
  CheckTime(breakpoints_, t);
  return values_[Locate(breakpoints_, t)];
}

PiecewiseLinearFunction::PiecewiseLinearFunction(
    std::vector<Vector> values, std::vector<double> breakpoints)
    : values_(std::move(values)), breakpoints_(std::move(breakpoints)) {
  if (values_.size() != breakpoints_.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "piecewise linear function needs one value per breakpoint");
  }
}

Vector PiecewiseLinearFunction::operator()(double t) const {
  CheckTime(breakpoints_, t);
  const int i = Locate(breakpoints_, t);
  const double lo = breakpoints_[i];
  const double hi = breakpoints_[i + 1];
  if (t == hi) return values_[i + 1];
  const double len = hi - lo;
  return ((hi - t) / len) * values_[i] + ((t - lo) / len) * values_[i + 1];
}

StepFunction PiecewiseConstantExtension(std::vector<Vector> values,
                                        const Partition& part) {
  if (static_cast<int>(values.size()) != part.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(part.size()) + " values, got " +
                    std::to_string(values.size()));
  }
  return StepFunction(std::move(values), part.breakpoints);
}

PiecewiseLinearFunction PiecewiseLinearExtension(std::vector<Vector> values,
                                                 const Partition& part) {
  if (static_cast<int>(values.size()) != part.size() + 1) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(part.size() + 1) +
                    " values, got " + std::to_string(values.size()));
  }
  return PiecewiseLinearFunction(std::move(values), part.breakpoints);
}

MeasureSolution ExtendDiscrete(const DiscreteSolution& sol,
                               const Partition& part, double tol) {
  const int n = part.size();
  if (static_cast<int>(sol.increments.size()) != n) {
    throw Error(ErrorCode::kLengthMismatch,
                "discrete solution has " +
                    std::to_string(sol.increments.size()) +
                    " increments for " + std::to_string(n) + " intervals");
  }
  double scale = 1.0;
  double lowest = std::min(MinCoeffOrZero(sol.atom_start),
                           MinCoeffOrZero(sol.atom_end));
  for (const Vector& v : sol.increments) {
    lowest = std::min(lowest, MinCoeffOrZero(v));
  }
  for (const Vector& x : sol.slacks) {
    if (x.size() > 0) scale = std::max(scale, x.cwiseAbs().maxCoeff());
    lowest = std::min(lowest, MinCoeffOrZero(x));
  }
  if (lowest < -tol * scale) {
    throw Error(ErrorCode::kInfeasibleDiscrete,
                "discrete solution has a component " + std::to_string(lowest));
  }

  MeasureSolution out;
  out.atom_start = sol.atom_start.cwiseMax(0.0);
  out.partition = part.breakpoints;
  out.densities.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double len = part.breakpoints[i + 1] - part.breakpoints[i];
    out.densities.push_back(sol.increments[i].cwiseMax(0.0) / len);
  }
  out.atom_end = sol.atom_end.cwiseMax(0.0);
  return out;
}

DiscreteSolution RestrictMeasure(const ProblemData& p,
                                 const MeasureSolution& sol,
                                 const Partition& part, double tol) {
  if (std::abs(part.horizon() - p.horizon) > 1e-12 * p.horizon) {
    throw Error(ErrorCode::kMalformedProblem,
                "partition does not end at the horizon");
  }
  const MeasureFeasibility check = CheckFeasibleMeasure(p, sol, tol);
  if (!check.feasible) {
    throw Error(ErrorCode::kInfeasibleMeasure,
                "measure violates the constraints by " +
                    std::to_string(check.worst_violation) + " at t = " +
                    std::to_string(check.worst_t));
  }
  const int j = p.num_cols();
  const int n = part.size();
  const auto& t = part.breakpoints;
  Vector vars(j * (n + 2));
  vars.head(j) = sol.atom_start;
  for (int i = 1; i <= n; ++i) {
    vars.segment(i * j, j) = MassOn(sol, t[i - 1], t[i]);
  }
  vars.tail(j) = sol.atom_end;
  return PrimalDiscreteSolution(p, part, vars);
}

}  // namespace mclp
