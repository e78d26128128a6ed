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


#ifndef MCLP_SCLP_BRIDGE_H_
#define MCLP_SCLP_BRIDGE_H_

#include "mclp/extension.h"
#include "mclp/lp_core.h"
#include "mclp/model.h"

namespace mclp {

// max  int (gamma + (T - t) c)' u(t) + d' x(t) dt
// s.t. int_0^t G u(s) ds + F x(t) <= alpha + a t,
//      H u(t) <= b,  x(t), u(t) >= 0.
// Block sizes come from the vectors: K1 = |alpha|, J1 = |gamma|,
// J2 = |d|, K2 = |b|. J2 and K2 may be zero.
struct SclpData {
  Matrix G;  // K1 x J1
  Matrix F;  // K1 x J2
  Matrix H;  // K2 x J1
  Vector alpha;
  Vector a;
  Vector b;
  Vector gamma;
  Vector c;
  Vector d;
  double horizon = 1.0;

  int k1() const { return static_cast<int>(alpha.size()); }
  int j1() const { return static_cast<int>(gamma.size()); }
  int k2() const { return static_cast<int>(b.size()); }
  int j2() const { return static_cast<int>(d.size()); }
};

// Throws Error(kDimensionMismatch) on inconsistent blocks and
// Error(kMalformedProblem) on a bad horizon or non-finite data.
void ValidateSclp(const SclpData& s);

struct SclpSolution {
  StepFunction u;              // J1, on the solution's partition
  PiecewiseLinearFunction x;   // J2, continuous
  double objective = 0.0;
};

// M-CLP data over U = [U_*; U_s; U+; U-] with
//   A = [ G  0  F -F ;  0  0 -I  I ;  H  I  0  0 ; -H -I  0  0 ],
//   beta* = (alpha, 0, 0, 0),  b* = (a, 0, b, -b),
//   gamma* = (gamma, 0, 0, 0), c* = (c, 0, d, -d).
// The x term enters through c*: int d' x dt = int (T - t) d' dx.
ProblemData SclpToMclp(const SclpData& s);

// u = density of the U_* block, x = U+ - U-. The SCLP objective is
// evaluated directly from u and x. Throws Error(kAtomsPresent) when the U_*
// or U_s blocks carry an atom, or x jumps at an interior atom, of mass above
// tol * (1 + total mass of sol).
SclpSolution MclpSolutionToSclp(const SclpData& s, const MeasureSolution& sol,
                                double tol = 1e-7);

}  // namespace mclp

#endif  // MCLP_SCLP_BRIDGE_H_
