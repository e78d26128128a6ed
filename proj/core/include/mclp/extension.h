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

#ifndef MCLP_EXTENSION_H_
#define MCLP_EXTENSION_H_

#include <vector>

#include "mclp/discretization.h"
#include "mclp/model.h"

namespace mclp {

// f_C(t) = values[i] on [t_i, t_{i+1}); at T the last value.
class StepFunction {
 public:
  StepFunction(std::vector<Vector> values, std::vector<double> breakpoints);

  // Throws Error(kTimeOutOfRange) outside [0, T].
  Vector operator()(double t) const;

  const std::vector<Vector>& values() const { return values_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

 private:
  std::vector<Vector> values_;
  std::vector<double> breakpoints_;
};

// f_L interpolates values[i] at t_i linearly; exact at the breakpoints.
class PiecewiseLinearFunction {
 public:
  PiecewiseLinearFunction(std::vector<Vector> values,
                          std::vector<double> breakpoints);

  // Throws Error(kTimeOutOfRange) outside [0, T].
  Vector operator()(double t) const;

  const std::vector<Vector>& values() const { return values_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

 private:
  std::vector<Vector> values_;
  std::vector<double> breakpoints_;
};

// Throws Error(kLengthMismatch) unless there are N values (N + 1 for the
// linear extension).
StepFunction PiecewiseConstantExtension(std::vector<Vector> values,
                                        const Partition& part);
PiecewiseLinearFunction PiecewiseLinearExtension(std::vector<Vector> values,
                                                 const Partition& part);

// Atoms u^0 and u^N at the ends and density Delta U^n / (t_n - t_{n-1}).
// Dual-side solutions extend over ReversePartition(part). Throws
// Error(kInfeasibleDiscrete) when a variable or slack is below -tol, with tol
// scaled by 1 + the largest slack magnitude.
MeasureSolution ExtendDiscrete(const DiscreteSolution& sol,
                               const Partition& part, double tol = 1e-7);

// Delta U^n is the mass of [t_{n-1}, t_n) outside the atom at 0, so an
// atom at an interior breakpoint t_n belongs to interval n + 1; the atom at T
// stays u^N. Throws Error(kInfeasibleMeasure) when sol violates the
// constraints of p by more than tol.
DiscreteSolution RestrictMeasure(const ProblemData& p,
                                 const MeasureSolution& sol,
                                 const Partition& part, double tol = 1e-7);

}  // namespace mclp

#endif  // MCLP_EXTENSION_H_
