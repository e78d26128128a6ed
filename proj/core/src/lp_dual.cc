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

#include <cmath>
#include <vector>

#include "mclp/error.h"
#include "mclp/lp_core.h"

namespace mclp {
namespace {

LpProblem SelectRowsCols(const LpProblem& lp, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
  LpProblem out;
  out.direction = lp.direction;
  out.constraints.resize(static_cast<Eigen::Index>(rows.size()),
                         static_cast<Eigen::Index>(cols.size()));
  out.rhs.resize(static_cast<Eigen::Index>(rows.size()));
  out.objective.resize(static_cast<Eigen::Index>(cols.size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    out.rhs[r] = lp.rhs[rows[r]];
    out.relations.push_back(lp.relations[rows[r]]);
    for (size_t c = 0; c < cols.size(); ++c) {
      out.constraints(r, c) = lp.constraints(rows[r], cols[c]);
    }
  }
  for (size_t c = 0; c < cols.size(); ++c) {
    out.objective[c] = lp.objective[cols[c]];
    out.restrictions.push_back(lp.restrictions[cols[c]]);
  }
  return out;
}

// One pass of the reductions described on CanonicalizeLp. Returns true when
// anything changed.
bool ReduceOnce(LpProblem* lp) {
  const int m = lp->num_rows();
  const int n = lp->num_cols();
  std::vector<bool> keep_row(m, true);
  std::vector<bool> keep_col(n, true);
  bool changed = false;

  for (int j = 0; j < n; ++j) {
    if (lp->restrictions[j] == SignRestriction::kZero) {
      keep_col[j] = false;
      changed = true;
    }
  }

  // Unit slack columns of equality rows.
  std::vector<bool> row_touched(m, false);
  for (int j = 0; j < n; ++j) {
    if (!keep_col[j] || lp->objective[j] != 0.0) continue;
    int nonzero_row = -1;
    int count = 0;
    for (int i = 0; i < m; ++i) {
      if (lp->constraints(i, j) != 0.0) {
        nonzero_row = i;
        ++count;
      }
    }
    if (count != 1) continue;
    const int i = nonzero_row;
    if (lp->relations[i] != Relation::kEqual || row_touched[i]) continue;
    const double coeff = lp->constraints(i, j);
    if (lp->restrictions[j] == SignRestriction::kNonNegative) {
      lp->relations[i] =
          coeff > 0.0 ? Relation::kLessEqual : Relation::kGreaterEqual;
    } else {
      keep_row[i] = false;
    }
    row_touched[i] = true;
    keep_col[j] = false;
    changed = true;
  }

  // Singleton rows with zero right-hand side define a sign.
  for (int i = 0; i < m; ++i) {
    if (!keep_row[i] || row_touched[i] || lp->rhs[i] != 0.0) continue;
    int col = -1;
    int count = 0;
    for (int j = 0; j < n; ++j) {
      if (keep_col[j] && lp->constraints(i, j) != 0.0) {
        col = j;
        ++count;
      }
    }
    if (count != 1) continue;
    const double a = lp->constraints(i, col);
    const Relation rel = lp->relations[i];
    const bool fixes_zero = rel == Relation::kEqual;
    const bool implies_nonneg = (rel == Relation::kLessEqual && a < 0.0) ||
                                (rel == Relation::kGreaterEqual && a > 0.0);
    if (fixes_zero) {
      keep_row[i] = false;
      keep_col[col] = false;
      changed = true;
    } else if (implies_nonneg) {
      if (lp->restrictions[col] == SignRestriction::kFree) {
        lp->restrictions[col] = SignRestriction::kNonNegative;
      }
      keep_row[i] = false;
      changed = true;
    }
  }

  if (!changed) return false;
  std::vector<int> rows;
  std::vector<int> cols;
  for (int i = 0; i < m; ++i) {
    if (keep_row[i]) rows.push_back(i);
  }
  for (int j = 0; j < n; ++j) {
    if (keep_col[j]) cols.push_back(j);
  }
  *lp = SelectRowsCols(*lp, rows, cols);
  return true;
}

}  // namespace

LpProblem LpDual(const LpProblem& lp) {
  ValidateLp(lp);
  const bool maximize = lp.direction == Direction::kMaximize;
  const int m = lp.num_rows();
  const int n = lp.num_cols();

  // A primal row whose dual variable would be sign-opposite to its natural
  // orientation is negated so that every dual variable is P or U.
  std::vector<double> factor(m, 1.0);
  LpProblem dual;
  dual.direction = maximize ? Direction::kMinimize : Direction::kMaximize;
  dual.objective.resize(m);
  for (int i = 0; i < m; ++i) {
    const Relation rel = lp.relations[i];
    if ((maximize && rel == Relation::kGreaterEqual) ||
        (!maximize && rel == Relation::kLessEqual)) {
      factor[i] = -1.0;
    }
    dual.objective[i] = factor[i] * lp.rhs[i];
    dual.restrictions.push_back(rel == Relation::kEqual
                                    ? SignRestriction::kFree
                                    : SignRestriction::kNonNegative);
  }

  std::vector<int> dual_rows;
  for (int j = 0; j < n; ++j) {
    if (lp.restrictions[j] != SignRestriction::kZero) dual_rows.push_back(j);
  }
  dual.constraints.resize(static_cast<Eigen::Index>(dual_rows.size()), m);
  dual.rhs.resize(static_cast<Eigen::Index>(dual_rows.size()));
  for (size_t r = 0; r < dual_rows.size(); ++r) {
    const int j = dual_rows[r];
    for (int i = 0; i < m; ++i) {
      dual.constraints(r, i) = factor[i] * lp.constraints(i, j);
    }
    dual.rhs[r] = lp.objective[j];
    if (lp.restrictions[j] == SignRestriction::kFree) {
      dual.relations.push_back(Relation::kEqual);
    } else {
      dual.relations.push_back(maximize ? Relation::kGreaterEqual
                                        : Relation::kLessEqual);
    }
  }
  return dual;
}

LpProblem CanonicalizeLp(const LpProblem& lp) {
  ValidateLp(lp);
  LpProblem out = lp;
  while (ReduceOnce(&out)) {
  }
  const Relation wrong = out.direction == Direction::kMaximize
                             ? Relation::kGreaterEqual
                             : Relation::kLessEqual;
  for (int i = 0; i < out.num_rows(); ++i) {
    if (out.relations[i] != wrong) continue;
    out.constraints.row(i) *= -1.0;
    out.rhs[i] = -out.rhs[i];
    out.relations[i] = out.direction == Direction::kMaximize
                           ? Relation::kLessEqual
                           : Relation::kGreaterEqual;
  }
  // Normalize -0.0 so that comparisons are purely numeric.
  out.constraints = out.constraints.unaryExpr(
      [](double v) { return v == 0.0 ? 0.0 : v; });
  return out;
}

bool LpStructurallyEqual(const LpProblem& a, const LpProblem& b,
                         const std::vector<int>& row_of,
                         const std::vector<int>& col_of, double tol) {
  const int m = a.num_rows();
  const int n = a.num_cols();
  if (a.direction != b.direction || m != b.num_rows() || n != b.num_cols()) {
    return false;
  }
  auto row = [&](int i) { return row_of.empty() ? i : row_of[i]; };
  auto col = [&](int j) { return col_of.empty() ? j : col_of[j]; };
  if (!row_of.empty() && static_cast<int>(row_of.size()) != m) return false;
  if (!col_of.empty() && static_cast<int>(col_of.size()) != n) return false;

  for (int i = 0; i < m; ++i) {
    if (a.relations[i] != b.relations[row(i)]) return false;
    if (std::abs(a.rhs[i] - b.rhs[row(i)]) > tol) return false;
    for (int j = 0; j < n; ++j) {
      if (std::abs(a.constraints(i, j) - b.constraints(row(i), col(j))) > tol) {
        return false;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (a.restrictions[j] != b.restrictions[col(j)]) return false;
    if (std::abs(a.objective[j] - b.objective[col(j)]) > tol) return false;
  }
  return true;
}

}  // namespace mclp
