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


#include "testing/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace mclp::testing {
namespace {

struct Standard {
  Matrix m;  // rows x columns, x >= 0
  Vector rhs;
  Vector weight;  // maximize weight' x
};

Standard ToStandard(const LpProblem& lp) {
  const double sense = lp.direction == Direction::kMaximize ? 1.0 : -1.0;
  std::vector<Vector> cols;
  std::vector<double> weights;
  for (int j = 0; j < lp.num_cols(); ++j) {
    const Vector a = lp.constraints.col(j);
    switch (lp.restrictions[j]) {
      case SignRestriction::kZero:
        break;
      case SignRestriction::kNonNegative:
        cols.push_back(a);
        weights.push_back(sense * lp.objective(j));
        break;
      case SignRestriction::kFree:
        cols.push_back(a);
        weights.push_back(sense * lp.objective(j));
        cols.push_back(-a);
        weights.push_back(-sense * lp.objective(j));
        break;
    }
  }
  for (int i = 0; i < lp.num_rows(); ++i) {
    if (lp.relations[i] == Relation::kEqual) continue;
    Vector e = Vector::Zero(lp.num_rows());
    e(i) = lp.relations[i] == Relation::kLessEqual ? 1.0 : -1.0;
    cols.push_back(e);
    weights.push_back(0.0);
  }
  Standard s;
  s.m.resize(lp.num_rows(), static_cast<Eigen::Index>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) s.m.col(c) = cols[c];
  s.rhs = lp.rhs;
  s.weight = Eigen::Map<Vector>(weights.data(), weights.size());
  return s;
}

// Calls visit(x) for every basic feasible solution of {m x = rhs, x >= 0}.
template <typename Visit>
void ForEachVertex(const Matrix& m, const Vector& rhs, Visit visit) {
  const int cols = static_cast<int>(m.cols());
  const double scale = 1.0 + (m.size() ? m.cwiseAbs().maxCoeff() : 0.0) +
                       (rhs.size() ? rhs.cwiseAbs().maxCoeff() : 0.0);
  const double tol = 1e-9 * scale;
  if (m.rows() == 0 || cols == 0) {
    if (rhs.size() == 0 || rhs.cwiseAbs().maxCoeff() <= tol) {
      visit(Vector::Zero(cols));
    }
    return;
  }
  const int rank = static_cast<int>(Eigen::FullPivLU<Matrix>(m).rank());
  // The zero vector is the vertex with empty support when rhs = 0.
  if (rhs.cwiseAbs().maxCoeff() <= tol) visit(Vector::Zero(cols));
  for (int size = 1; size <= std::min(rank, cols); ++size) {
    std::vector<bool> pick(cols, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<int> idx;
      for (int c = 0; c < cols; ++c) {
        if (pick[c]) idx.push_back(c);
      }
      Matrix sub(m.rows(), size);
      for (int k = 0; k < size; ++k) sub.col(k) = m.col(idx[k]);
      Eigen::ColPivHouseholderQR<Matrix> qr(sub);
      if (qr.rank() < size) continue;
      const Vector xs = qr.solve(rhs);
      if ((sub * xs - rhs).cwiseAbs().maxCoeff() > tol) continue;
      if (xs.minCoeff() < -tol) continue;
      Vector x = Vector::Zero(cols);
      for (int k = 0; k < size; ++k) x(idx[k]) = std::max(xs(k), 0.0);
      visit(x);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
}

}  // namespace

BruteForceResult BruteForceLp(const LpProblem& lp) {
  const Standard s = ToStandard(lp);
  const double sense = lp.direction == Direction::kMaximize ? 1.0 : -1.0;
  BruteForceResult result;
  double best = -std::numeric_limits<double>::infinity();
  ForEachVertex(s.m, s.rhs, [&](const Vector& x) {
    best = std::max(best, s.weight.dot(x));
  });
  if (!std::isfinite(best)) return result;  // no vertex: infeasible

  const int cols = static_cast<int>(s.m.cols());
  Matrix rays(s.m.rows() + 1, cols);
  rays.topRows(s.m.rows()) = s.m;
  rays.row(s.m.rows()) = Vector::Ones(cols).transpose();
  Vector ray_rhs = Vector::Zero(s.m.rows() + 1);
  ray_rhs(s.m.rows()) = 1.0;
  bool unbounded = false;
  const double wscale = 1.0 + (cols ? s.weight.cwiseAbs().maxCoeff() : 0.0);
  ForEachVertex(rays, ray_rhs, [&](const Vector& d) {
    if (s.weight.dot(d) > 1e-9 * wscale) unbounded = true;
  });
  result.status = unbounded ? LpStatus::kUnbounded : LpStatus::kOptimal;
  result.value = sense * best;
  return result;
}

ProblemData CappedSclpExtension(const SclpData& s, double w) {
  const ProblemData p = SclpToMclp(s);
  const int k = p.num_rows();
  const int j = p.num_cols();
  const int j1 = s.j1();
  ProblemData out = p;
  out.A = Matrix::Zero(k + 2 * j1, j + j1);
  out.A.topLeftCorner(k, j) = p.A;
  const Matrix eye = Matrix::Identity(j1, j1);
  out.A.block(k, 0, j1, j1) = eye;
  out.A.block(k, j, j1, j1) = eye;
  out.A.block(k + j1, 0, j1, j1) = -eye;
  out.A.block(k + j1, j, j1, j1) = -eye;
  out.beta = Vector::Zero(k + 2 * j1);
  out.beta.head(k) = p.beta;
  out.b = Vector::Zero(k + 2 * j1);
  out.b.head(k) = p.b;
  out.b.segment(k, j1).setConstant(w);
  out.b.tail(j1).setConstant(-w);
  out.gamma = Vector::Zero(j + j1);
  out.gamma.head(j) = p.gamma;
  out.c = Vector::Zero(j + j1);
  out.c.head(j) = p.c;
  return out;
}

MeasureSolution DropCapSlack(const SclpData& s, const MeasureSolution& sol) {
  const int j = static_cast<int>(sol.atom_start.size()) - s.j1();
  MeasureSolution out = sol;
  out.atom_start = sol.atom_start.head(j);
  out.atom_end = sol.atom_end.head(j);
  for (Vector& v : out.densities) v = Vector(v.head(j));
  for (auto& atom : out.interior_atoms) atom.mass = Vector(atom.mass.head(j));
  return out;
}

double GridSearchAtomPlusDensity(const ProblemData& p, double step,
                                 double max, int time_points) {
  const int j = p.num_cols();
  const int steps = static_cast<int>(std::lround(max / step));
  const double horizon = p.horizon;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> digits(2 * j, 0);
  while (true) {
    Vector a(j), d(j);
    for (int i = 0; i < j; ++i) {
      a(i) = digits[i] * step;
      d(i) = digits[j + i] * step;
    }
    bool feasible = true;
    for (int n = 0; n < time_points && feasible; ++n) {
      const double t = horizon * n / (time_points - 1);
      const Vector x = p.beta + t * p.b - p.A * (a + t * d);
      feasible = x.minCoeff() >= -1e-12;
    }
    if (feasible) {
      const double value =
          (p.gamma + horizon * p.c).dot(a) +
          Simpson([&](double t) { return (p.gamma + (horizon - t) * p.c).dot(d); },
                  horizon, 64);
      best = std::max(best, value);
    }
    int pos = 0;
    while (pos < 2 * j && ++digits[pos] > steps) digits[pos++] = 0;
    if (pos == 2 * j) break;
  }
  return best;
}

double Simpson(const std::function<double(double)>& f, double horizon,
               int panels) {
  const int n = 2 * panels;
  const double h = horizon / n;
  double sum = f(0.0) + f(horizon);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return sum * h / 3.0;
}

}  // namespace mclp::testing
