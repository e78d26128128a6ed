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

#include "mclp/lp_core.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mclp/error.h"

namespace mclp {
namespace {

enum class ColumnKind { kStructuralPlus, kStructuralMinus, kSlack, kArtificial };

struct SparseColumn {
  std::vector<int> rows;
  std::vector<double> values;
};

// Standard form max cost' z, M z = b (b >= 0), z >= 0, built from an LpProblem
// by splitting free variables, adding slacks and flipping rows with negative
// right-hand sides.
class DenseRevisedSimplex {
 public:
  DenseRevisedSimplex(const LpProblem& lp, const SimplexOptions& options)
      : lp_(lp), options_(options) {
    BuildStandardForm();
  }

  LpOutcome Run();

 private:
  enum class PhaseResult { kOptimal, kUnbounded };

  void BuildStandardForm();
  PhaseResult RunPhase(int* unbounded_column);
  bool Eligible(int col) const;
  double ReducedCost(int col) const;
  void Ftran(int col, Vector* alpha) const;
  void Pivot(int row, int col, const Vector& alpha, double theta,
             double reduced_cost);
  void Refresh();
  void Reinvert();
  void RecomputeDuals();
  void DriveOutArtificials();
  double PhaseObjective() const;
  LpOutcome MakeOutcome(LpStatus status) const;

  const LpProblem& lp_;
  SimplexOptions options_;

  int m_ = 0;
  std::vector<SparseColumn> columns_;
  std::vector<ColumnKind> kind_;
  std::vector<int> origin_;  // original column, or row for logicals
  std::vector<double> row_sign_;
  Vector b_;
  Vector phase2_cost_;
  Vector cost_;
  bool has_artificials_ = false;

  std::vector<int> basis_;
  std::vector<int> position_;  // -1 when nonbasic
  Matrix inverse_;
  Vector x_basic_;
  Vector duals_;

  double feas_tol_ = 0.0;
  double opt_tol_ = 0.0;
  std::int64_t iterations_ = 0;
  std::int64_t iteration_cap_ = 0;
  int since_refresh_ = 0;
  Vector ray_;
  Vector farkas_;
};

void DenseRevisedSimplex::BuildStandardForm() {
  m_ = lp_.num_rows();
  const int n = lp_.num_cols();
  const double dir = lp_.direction == Direction::kMaximize ? 1.0 : -1.0;

  row_sign_.assign(m_, 1.0);
  b_.resize(m_);
  for (int i = 0; i < m_; ++i) {
    if (lp_.rhs[i] < 0.0) row_sign_[i] = -1.0;
    b_[i] = row_sign_[i] * lp_.rhs[i];
  }

  std::vector<double> costs;
  auto add_column = [&](SparseColumn col, ColumnKind kind, int origin,
                        double cost) {
    columns_.push_back(std::move(col));
    kind_.push_back(kind);
    origin_.push_back(origin);
    costs.push_back(cost);
  };

  for (int j = 0; j < n; ++j) {
    if (lp_.restrictions[j] == SignRestriction::kZero) continue;
    SparseColumn col;
    for (int i = 0; i < m_; ++i) {
      const double v = lp_.constraints(i, j);
      if (v != 0.0) {
        col.rows.push_back(i);
        col.values.push_back(row_sign_[i] * v);
      }
    }
    if (lp_.restrictions[j] == SignRestriction::kFree) {
      SparseColumn neg = col;
      for (double& v : neg.values) v = -v;
      add_column(col, ColumnKind::kStructuralPlus, j, dir * lp_.objective[j]);
      add_column(std::move(neg), ColumnKind::kStructuralMinus, j,
                 -dir * lp_.objective[j]);
    } else {
      add_column(std::move(col), ColumnKind::kStructuralPlus, j,
                 dir * lp_.objective[j]);
    }
  }

  basis_.assign(m_, -1);
  for (int i = 0; i < m_; ++i) {
    if (lp_.relations[i] == Relation::kEqual) continue;
    const double coeff =
        row_sign_[i] * (lp_.relations[i] == Relation::kLessEqual ? 1.0 : -1.0);
    add_column(SparseColumn{{i}, {coeff}}, ColumnKind::kSlack, i, 0.0);
    if (coeff > 0.0) basis_[i] = static_cast<int>(columns_.size()) - 1;
  }
  for (int i = 0; i < m_; ++i) {
    if (basis_[i] >= 0) continue;
    add_column(SparseColumn{{i}, {1.0}}, ColumnKind::kArtificial, i, 0.0);
    basis_[i] = static_cast<int>(columns_.size()) - 1;
    has_artificials_ = true;
  }

  const int total = static_cast<int>(columns_.size());
  phase2_cost_ = Eigen::Map<Vector>(costs.data(), total);
  position_.assign(total, -1);
  for (int i = 0; i < m_; ++i) position_[basis_[i]] = i;

  inverse_ = Matrix::Identity(m_, m_);
  x_basic_ = b_;

  const double b_norm = m_ > 0 ? b_.lpNorm<Eigen::Infinity>() : 0.0;
  const double c_norm =
      total > 0 ? phase2_cost_.lpNorm<Eigen::Infinity>() : 0.0;
  feas_tol_ = options_.feasibility_tol * (1.0 + b_norm);
  opt_tol_ = options_.optimality_tol * (1.0 + c_norm);

  iteration_cap_ = options_.max_iterations > 0
                       ? options_.max_iterations
                       : 20000 + 50 * static_cast<std::int64_t>(m_ + total);
}

bool DenseRevisedSimplex::Eligible(int col) const {
  return position_[col] < 0 && kind_[col] != ColumnKind::kArtificial;
}

double DenseRevisedSimplex::ReducedCost(int col) const {
  const SparseColumn& c = columns_[col];
  double d = cost_[col];
  for (size_t k = 0; k < c.rows.size(); ++k) d -= duals_[c.rows[k]] * c.values[k];
  return d;
}

void DenseRevisedSimplex::Ftran(int col, Vector* alpha) const {
  alpha->setZero(m_);
  const SparseColumn& c = columns_[col];
  for (size_t k = 0; k < c.rows.size(); ++k) {
    alpha->noalias() += c.values[k] * inverse_.col(c.rows[k]);
  }
}

void DenseRevisedSimplex::RecomputeDuals() {
  Vector basic_cost(m_);
  for (int i = 0; i < m_; ++i) basic_cost[i] = cost_[basis_[i]];
  duals_.noalias() = inverse_.transpose() * basic_cost;
}

double DenseRevisedSimplex::PhaseObjective() const {
  double z = 0.0;
  for (int i = 0; i < m_; ++i) z += cost_[basis_[i]] * x_basic_[i];
  return z;
}

void DenseRevisedSimplex::Pivot(int row, int col, const Vector& alpha,
                                double theta, double reduced_cost) {
  const double pivot = alpha[row];
  const Eigen::RowVectorXd rho = inverse_.row(row);

  x_basic_.noalias() -= theta * alpha;
  x_basic_[row] = theta;

  Vector w = alpha;
  w[row] -= 1.0;
  inverse_.noalias() -= w * (rho / pivot);
  duals_.noalias() += (reduced_cost / pivot) * rho.transpose();

  position_[basis_[row]] = -1;
  basis_[row] = col;
  position_[col] = row;
  ++since_refresh_;
}

void DenseRevisedSimplex::Reinvert() {
  if (m_ == 0) return;
  Matrix basis_matrix = Matrix::Zero(m_, m_);
  for (int i = 0; i < m_; ++i) {
    const SparseColumn& c = columns_[basis_[i]];
    for (size_t k = 0; k < c.rows.size(); ++k) {
      basis_matrix(c.rows[k], i) = c.values[k];
    }
  }
  Eigen::PartialPivLU<Matrix> lu(basis_matrix);
  const auto diag = lu.matrixLU().diagonal().cwiseAbs();
  if (diag.minCoeff() <= 1e-13 * std::max(1.0, diag.maxCoeff())) {
    throw Error(ErrorCode::kNumericalFailure,
                "basis matrix is singular beyond the pivot tolerance");
  }
  inverse_ = lu.inverse();
  x_basic_.noalias() = inverse_ * b_;
  RecomputeDuals();
}

// Recomputes the basic solution and duals from the current inverse and falls
// back to a full reinversion when the inverse no longer reproduces b.
void DenseRevisedSimplex::Refresh() {
  since_refresh_ = 0;
  if (m_ == 0) return;
  x_basic_.noalias() = inverse_ * b_;
  Vector residual = b_;
  for (int i = 0; i < m_; ++i) {
    const SparseColumn& c = columns_[basis_[i]];
    for (size_t k = 0; k < c.rows.size(); ++k) {
      residual[c.rows[k]] -= c.values[k] * x_basic_[i];
    }
  }
  if (residual.lpNorm<Eigen::Infinity>() > 1e-2 * feas_tol_) {
    Reinvert();
  } else {
    RecomputeDuals();
  }
}

DenseRevisedSimplex::PhaseResult DenseRevisedSimplex::RunPhase(
    int* unbounded_column) {
  const int total = static_cast<int>(columns_.size());
  const std::int64_t degenerate_limit =
      static_cast<std::int64_t>(options_.degenerate_pivot_factor) *
      (m_ + lp_.num_cols());
  std::int64_t degenerate_run = 0;
  bool verified = false;
  Vector alpha(m_);

  for (;;) {
    if (iterations_ >= iteration_cap_) {
      throw Error(ErrorCode::kNumericalFailure,
                  "simplex iteration cap exceeded (" +
                      std::to_string(iteration_cap_) + ")");
    }
    if (since_refresh_ >= options_.refactor_period) Refresh();

    const bool bland = degenerate_run >= degenerate_limit;
    int entering = -1;
    double best = opt_tol_;
    double entering_cost = 0.0;
    for (int j = 0; j < total; ++j) {
      if (!Eligible(j)) continue;
      const double d = ReducedCost(j);
      if (d > best) {
        entering = j;
        entering_cost = d;
        if (bland) break;
        best = d;
      }
    }

    if (entering < 0) {
      if (since_refresh_ > 0 && !verified) {
        Refresh();
        verified = true;
        continue;
      }
      return PhaseResult::kOptimal;
    }
    verified = false;

    Ftran(entering, &alpha);

    int leaving = -1;
    if (bland) {
      double min_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        if (alpha[i] <= options_.pivot_tol) continue;
        const double ratio = std::max(x_basic_[i], 0.0) / alpha[i];
        if (ratio < min_ratio) min_ratio = ratio;
      }
      const double tie = 1e-12 * (1.0 + min_ratio);
      for (int i = 0; i < m_; ++i) {
        if (alpha[i] <= options_.pivot_tol) continue;
        const double ratio = std::max(x_basic_[i], 0.0) / alpha[i];
        if (ratio <= min_ratio + tie &&
            (leaving < 0 || basis_[i] < basis_[leaving])) {
          leaving = i;
        }
      }
    } else {
      // Harris two-pass ratio test.
      double bound = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        if (alpha[i] <= options_.pivot_tol) continue;
        bound = std::min(bound, (x_basic_[i] + feas_tol_) / alpha[i]);
      }
      double largest = 0.0;
      for (int i = 0; i < m_; ++i) {
        if (alpha[i] <= options_.pivot_tol) continue;
        if (x_basic_[i] / alpha[i] <= bound && alpha[i] > largest) {
          largest = alpha[i];
          leaving = i;
        }
      }
    }

    if (leaving < 0) {
      *unbounded_column = entering;
      ray_ = alpha;
      return PhaseResult::kUnbounded;
    }

    const double theta = std::max(x_basic_[leaving], 0.0) / alpha[leaving];
    if (theta <= 1e-12) {
      ++degenerate_run;
    } else {
      degenerate_run = 0;
    }
    Pivot(leaving, entering, alpha, theta, entering_cost);
    ++iterations_;
  }
}

void DenseRevisedSimplex::DriveOutArtificials() {
  const int total = static_cast<int>(columns_.size());
  Vector alpha(m_);
  for (int r = 0; r < m_; ++r) {
    if (kind_[basis_[r]] != ColumnKind::kArtificial) continue;
    const Eigen::RowVectorXd rho = inverse_.row(r);
    int best_col = -1;
    double best_abs = 1e-7;
    for (int j = 0; j < total; ++j) {
      if (!Eligible(j)) continue;
      const SparseColumn& c = columns_[j];
      double v = 0.0;
      for (size_t k = 0; k < c.rows.size(); ++k) v += rho[c.rows[k]] * c.values[k];
      if (std::abs(v) > best_abs) {
        best_abs = std::abs(v);
        best_col = j;
      }
    }
    // A row without such a column is redundant; its artificial stays basic
    // at zero and can never move.
    if (best_col < 0) continue;
    Ftran(best_col, &alpha);
    Pivot(r, best_col, alpha, 0.0, 0.0);
  }
  Refresh();
}

LpOutcome DenseRevisedSimplex::MakeOutcome(LpStatus status) const {
  const int n = lp_.num_cols();
  LpOutcome out;
  out.status = status;
  out.iterations = iterations_;

  if (status == LpStatus::kInfeasible) {
    out.certificate = farkas_;
    return out;
  }

  const int total = static_cast<int>(columns_.size());
  Vector z = Vector::Zero(total);
  for (int i = 0; i < m_; ++i) z[basis_[i]] = std::max(x_basic_[i], 0.0);

  out.primal = Vector::Zero(n);
  for (int k = 0; k < total; ++k) {
    if (kind_[k] == ColumnKind::kStructuralPlus) out.primal[origin_[k]] += z[k];
    if (kind_[k] == ColumnKind::kStructuralMinus) out.primal[origin_[k]] -= z[k];
  }
  out.objective_value = LpObjective(lp_, out.primal);

  if (status == LpStatus::kUnbounded) {
    out.certificate = ray_;
    return out;
  }

  const double dir = lp_.direction == Direction::kMaximize ? 1.0 : -1.0;
  out.dual.resize(m_);
  for (int i = 0; i < m_; ++i) out.dual[i] = dir * row_sign_[i] * duals_[i];

  out.basis.reserve(m_);
  for (int i = 0; i < m_; ++i) {
    const int k = basis_[i];
    if (kind_[k] == ColumnKind::kSlack || kind_[k] == ColumnKind::kArtificial) {
      out.basis.push_back(n + origin_[k]);
    } else {
      out.basis.push_back(origin_[k]);
    }
  }
  return out;
}

LpOutcome DenseRevisedSimplex::Run() {
  int unbounded_column = -1;
  if (has_artificials_) {
    cost_ = Vector::Zero(columns_.size());
    for (size_t k = 0; k < columns_.size(); ++k) {
      if (kind_[k] == ColumnKind::kArtificial) cost_[k] = -1.0;
    }
    RecomputeDuals();
    // Phase one is bounded above by zero.
    RunPhase(&unbounded_column);
    const double infeasibility = -PhaseObjective();
    if (infeasibility > feas_tol_) {
      RecomputeDuals();
      farkas_.resize(m_);
      for (int i = 0; i < m_; ++i) {
        farkas_[i] = row_sign_[i] * duals_[i] / infeasibility;
      }
      return MakeOutcome(LpStatus::kInfeasible);
    }
    DriveOutArtificials();
  }

  cost_ = phase2_cost_;
  RecomputeDuals();
  if (RunPhase(&unbounded_column) == PhaseResult::kUnbounded) {
    // Ray in standard form: +1 on the entering column, -alpha on the basis.
    const int n = lp_.num_cols();
    Vector direction = Vector::Zero(n);
    auto accumulate = [&](int k, double amount) {
      if (kind_[k] == ColumnKind::kStructuralPlus) direction[origin_[k]] += amount;
      if (kind_[k] == ColumnKind::kStructuralMinus) direction[origin_[k]] -= amount;
    };
    accumulate(unbounded_column, 1.0);
    for (int i = 0; i < m_; ++i) accumulate(basis_[i], -ray_[i]);
    ray_ = direction;
    return MakeOutcome(LpStatus::kUnbounded);
  }
  return MakeOutcome(LpStatus::kOptimal);
}

bool SignCompatible(SignRestriction restriction, double value, double tol) {
  switch (restriction) {
    case SignRestriction::kZero: return true;
    case SignRestriction::kNonNegative: return value >= -tol;
    case SignRestriction::kFree: return std::abs(value) <= tol;
  }
  return false;
}

}  // namespace

std::string_view LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "Optimal";
    case LpStatus::kInfeasible: return "Infeasible";
    case LpStatus::kUnbounded: return "Unbounded";
  }
  return "Unknown";
}

void ValidateLp(const LpProblem& lp) {
  const auto m = lp.constraints.rows();
  const auto n = lp.constraints.cols();
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kMalformedProblem, what);
  };
  if (lp.objective.size() != n) fail("objective length != number of columns");
  if (lp.rhs.size() != m) fail("rhs length != number of rows");
  if (static_cast<Eigen::Index>(lp.relations.size()) != m) {
    fail("relations length != number of rows");
  }
  if (static_cast<Eigen::Index>(lp.restrictions.size()) != n) {
    fail("restrictions length != number of columns");
  }
  if (!lp.constraints.allFinite() || !lp.objective.allFinite() ||
      !lp.rhs.allFinite()) {
    fail("non-finite data");
  }
}

LpOutcome SolveLp(const LpProblem& lp, const SimplexOptions& options) {
  ValidateLp(lp);
  DenseRevisedSimplex simplex(lp, options);
  return simplex.Run();
}

double LpObjective(const LpProblem& lp, const Vector& x) {
  return lp.objective.dot(x);
}

double MaxConstraintViolation(const LpProblem& lp, const Vector& x) {
  double worst = 0.0;
  const Vector ax = lp.constraints * x;
  for (int i = 0; i < lp.num_rows(); ++i) {
    const double diff = ax[i] - lp.rhs[i];
    switch (lp.relations[i]) {
      case Relation::kLessEqual: worst = std::max(worst, diff); break;
      case Relation::kGreaterEqual: worst = std::max(worst, -diff); break;
      case Relation::kEqual: worst = std::max(worst, std::abs(diff)); break;
    }
  }
  for (int j = 0; j < lp.num_cols(); ++j) {
    switch (lp.restrictions[j]) {
      case SignRestriction::kZero: worst = std::max(worst, std::abs(x[j])); break;
      case SignRestriction::kNonNegative: worst = std::max(worst, -x[j]); break;
      case SignRestriction::kFree: break;
    }
  }
  return worst;
}

bool IsFarkasCertificate(const LpProblem& lp, const Vector& y, double tol) {
  if (y.size() != lp.num_rows()) return false;
  for (int i = 0; i < lp.num_rows(); ++i) {
    if (lp.relations[i] == Relation::kLessEqual && y[i] < -tol) return false;
    if (lp.relations[i] == Relation::kGreaterEqual && y[i] > tol) return false;
  }
  const Vector ya = lp.constraints.transpose() * y;
  for (int j = 0; j < lp.num_cols(); ++j) {
    if (!SignCompatible(lp.restrictions[j], ya[j], tol)) return false;
  }
  return y.dot(lp.rhs) < -tol;
}

bool IsImprovingRay(const LpProblem& lp, const Vector& d, double tol) {
  if (d.size() != lp.num_cols()) return false;
  const Vector ad = lp.constraints * d;
  for (int i = 0; i < lp.num_rows(); ++i) {
    switch (lp.relations[i]) {
      case Relation::kLessEqual:
        if (ad[i] > tol) return false;
        break;
      case Relation::kGreaterEqual:
        if (ad[i] < -tol) return false;
        break;
      case Relation::kEqual:
        if (std::abs(ad[i]) > tol) return false;
        break;
    }
  }
  for (int j = 0; j < lp.num_cols(); ++j) {
    if (lp.restrictions[j] == SignRestriction::kZero && std::abs(d[j]) > tol) {
      return false;
    }
    if (lp.restrictions[j] == SignRestriction::kNonNegative && d[j] < -tol) {
      return false;
    }
  }
  const double gain = lp.objective.dot(d);
  return lp.direction == Direction::kMaximize ? gain > tol : gain < -tol;
}

}  // namespace mclp
