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


#include "mclp/sclp_bridge.h"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "mclp/error.h"

namespace mclp {
namespace {

void Require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) throw Error(code, what);
}

double LargestAtom(const Vector& mass, int begin, int size) {
  if (size == 0) return 0.0;
  return mass.segment(begin, size).cwiseAbs().maxCoeff();
}

}  // namespace

void ValidateSclp(const SclpData& s) {
  const ErrorCode bad = ErrorCode::kDimensionMismatch;
  const int k1 = s.k1(), j1 = s.j1(), k2 = s.k2(), j2 = s.j2();
  Require(k1 >= 1 && j1 >= 1, bad, "alpha and gamma must be non-empty");
  Require(s.G.rows() == k1 && s.G.cols() == j1, bad, "G must be K1 x J1");
  Require(s.F.rows() == k1 && s.F.cols() == j2, bad, "F must be K1 x J2");
  Require(s.H.rows() == k2 && s.H.cols() == j1, bad, "H must be K2 x J1");
  Require(s.a.size() == k1, bad, "a length must equal K1");
  Require(s.c.size() == j1, bad, "c length must equal J1");
  Require(std::isfinite(s.horizon) && s.horizon > 0.0,
          ErrorCode::kMalformedProblem, "horizon must be positive and finite");
  Require(s.G.allFinite() && s.F.allFinite() && s.H.allFinite() &&
              s.alpha.allFinite() && s.a.allFinite() && s.b.allFinite() &&
              s.gamma.allFinite() && s.c.allFinite() && s.d.allFinite(),
          ErrorCode::kMalformedProblem, "SCLP data must be finite");
}

ProblemData SclpToMclp(const SclpData& s) {
  ValidateSclp(s);
  const int k1 = s.k1(), j1 = s.j1(), k2 = s.k2(), j2 = s.j2();
  const int rows = k1 + j2 + 2 * k2;
  const int cols = j1 + k2 + 2 * j2;
  // Column offsets of U_*, U_s, U+, U-.
  const int cs = j1, cp = j1 + k2, cm = j1 + k2 + j2;
  // Row offsets of the four blocks.
  const int r1 = k1, r2 = k1 + j2, r3 = k1 + j2 + k2;

  ProblemData p;
  p.A = Matrix::Zero(rows, cols);
  p.A.block(0, 0, k1, j1) = s.G;
  p.A.block(0, cp, k1, j2) = s.F;
  p.A.block(0, cm, k1, j2) = -s.F;
  p.A.block(r1, cp, j2, j2) = -Matrix::Identity(j2, j2);
  p.A.block(r1, cm, j2, j2) = Matrix::Identity(j2, j2);
  p.A.block(r2, 0, k2, j1) = s.H;
  p.A.block(r2, cs, k2, k2) = Matrix::Identity(k2, k2);
  p.A.block(r3, 0, k2, j1) = -s.H;
  p.A.block(r3, cs, k2, k2) = -Matrix::Identity(k2, k2);

  p.beta = Vector::Zero(rows);
  p.beta.head(k1) = s.alpha;
  p.b = Vector::Zero(rows);
  p.b.head(k1) = s.a;
  p.b.segment(r2, k2) = s.b;
  p.b.segment(r3, k2) = -s.b;

  p.gamma = Vector::Zero(cols);
  p.gamma.head(j1) = s.gamma;
  p.c = Vector::Zero(cols);
  p.c.head(j1) = s.c;
  p.c.segment(cp, j2) = s.d;
  p.c.segment(cm, j2) = -s.d;
  p.horizon = s.horizon;
  return p;
}

SclpSolution MclpSolutionToSclp(const SclpData& s, const MeasureSolution& sol,
                                double tol) {
  ValidateSclp(s);
  const int j1 = s.j1(), k2 = s.k2(), j2 = s.j2();
  const int dim = j1 + k2 + 2 * j2;
  ValidateMeasure(sol, dim, s.horizon);
  const int cp = j1 + k2, cm = j1 + k2 + j2;

  double total = sol.atom_start.cwiseAbs().sum() + sol.atom_end.cwiseAbs().sum();
  for (int n = 0; n < sol.num_intervals(); ++n) {
    total += (sol.partition[n + 1] - sol.partition[n]) *
             sol.densities[n].cwiseAbs().sum();
  }
  for (const InteriorAtom& atom : sol.interior_atoms) {
    total += atom.mass.cwiseAbs().sum();
  }
  const double limit = tol * (1.0 + total);

  auto check = [&](const Vector& mass, const char* where) {
    const double u_atom = LargestAtom(mass, 0, j1 + k2);
    Require(u_atom <= limit, ErrorCode::kAtomsPresent,
            std::string("U_* or U_s has an atom at ") + where + " of mass " +
                std::to_string(u_atom));
  };
  check(sol.atom_start, "0");
  check(sol.atom_end, "T");
  for (const InteriorAtom& atom : sol.interior_atoms) {
    check(atom.mass, "an interior time");
    if (j2 == 0) continue;
    const Vector jump = atom.mass.segment(cp, j2) - atom.mass.segment(cm, j2);
    Require(jump.cwiseAbs().maxCoeff() <= limit, ErrorCode::kAtomsPresent,
            "x jumps at t = " + std::to_string(atom.time));
  }

  const int n_int = sol.num_intervals();
  const std::vector<double>& tp = sol.partition;
  std::vector<Vector> u_values;
  u_values.reserve(n_int);
  for (int n = 0; n < n_int; ++n) u_values.push_back(sol.densities[n].head(j1));

  // x at the breakpoints; at T the left limit so that an atom at T, which
  // does not affect the objective, leaves x continuous.
  std::vector<Vector> x_values;
  x_values.reserve(n_int + 1);
  for (int n = 0; n <= n_int; ++n) {
    const Vector cum = n < n_int ? CumulativeAt(sol, tp[n])
                                 : CumulativeBefore(sol, tp[n]);
    x_values.push_back(cum.segment(cp, j2) - cum.segment(cm, j2));
  }

  const double horizon = s.horizon;
  double objective = 0.0;
  for (int n = 0; n < n_int; ++n) {
    const double len = tp[n + 1] - tp[n];
    const double mid = 0.5 * (tp[n] + tp[n + 1]);
    objective += len * (s.gamma + (horizon - mid) * s.c).dot(u_values[n]);
    if (j2 > 0) {
      objective += 0.5 * len * s.d.dot(x_values[n] + x_values[n + 1]);
    }
  }
  return SclpSolution{StepFunction(std::move(u_values), tp),
                      PiecewiseLinearFunction(std::move(x_values), tp),
                      objective};
}

}  // namespace mclp
