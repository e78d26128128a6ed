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

#include "mclp/structure.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "mclp/error.h"

namespace mclp {
namespace {

double InfNorm(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
}

struct Group {
  double lo = 0.0;
  double hi = 0.0;
  Vector u;
  Vector p;
  int cells = 0;
};

class RateComparator {
 public:
  explicit RateComparator(double tol) : tol_(tol) {}

  double Threshold(const Vector& a, const Vector& b) const {
    return std::max(1e-8, tol_ * (1.0 + std::max(InfNorm(a), InfNorm(b))));
  }

  bool Agree(const Vector& a, const Vector& b) const {
    return InfNorm(a - b) <= Threshold(a, b);
  }

  // When x = (1 - s) a + s b for some s in [0, 1] within tolerance, returns
  // true and stores s (0.5 when a and b agree).
  bool OnSegment(const Vector& x, const Vector& a, const Vector& b,
                 double* s) const {
    const Vector d = b - a;
    if (InfNorm(d) <= Threshold(a, b)) {
      *s = 0.5;
      return Agree(x, a);
    }
    const double t = std::clamp((x - a).dot(d) / d.squaredNorm(), 0.0, 1.0);
    *s = t;
    return InfNorm(a + t * d - x) <= Threshold(a, b);
  }

 private:
  double tol_;
};

void MergeInto(Group* into, const Group& from) {
  const double w1 = into->hi - into->lo;
  const double w2 = from.hi - from.lo;
  into->u = (w1 * into->u + w2 * from.u) / (w1 + w2);
  into->p = (w1 * into->p + w2 * from.p) / (w1 + w2);
  into->lo = std::min(into->lo, from.lo);
  into->hi = std::max(into->hi, from.hi);
  into->cells += from.cells;
}

std::vector<Group> MergeAgreeing(const std::vector<Group>& groups,
                                 const RateComparator& cmp) {
  std::vector<Group> out;
  for (const Group& g : groups) {
    if (!out.empty() && cmp.Agree(out.back().u, g.u) &&
        cmp.Agree(out.back().p, g.p)) {
      MergeInto(&out.back(), g);
    } else {
      out.push_back(g);
    }
  }
  return out;
}

std::vector<Group> AbsorbTransitions(std::vector<Group> groups,
                                     const RateComparator& cmp) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 1; i + 1 < groups.size(); ++i) {
      Group& left = groups[i - 1];
      const Group& mid = groups[i];
      Group& right = groups[i + 1];
      if (mid.cells != 1) continue;
      double su = 0.0;
      double sp = 0.0;
      if (!cmp.OnSegment(mid.u, left.u, right.u, &su) ||
          !cmp.OnSegment(mid.p, left.p, right.p, &sp)) {
        continue;
      }
      const bool u_moves = !cmp.Agree(left.u, right.u);
      const double share_right = u_moves ? su : sp;
      const double cut = mid.hi - share_right * (mid.hi - mid.lo);
      left.hi = cut;
      right.lo = cut;
      groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(i));
      groups = MergeAgreeing(groups, cmp);
      changed = true;
      break;
    }
  }
  return groups;
}

RateInterval ToInterval(const ProblemData& p, const Group& g) {
  RateInterval r;
  r.t_lo = g.lo;
  r.t_hi = g.hi;
  r.u_rate = g.u;
  r.p_rate = g.p;
  r.support = ComputeSupport(g.u, g.p);
  r.objective_slope = p.c.dot(g.u);
  return r;
}

// A single cell at either end is either a short regime of its own or a
// boundary layer carrying smeared endpoint atom mass of the primal or the
// dual. It is kept when its rates solve their rates LP pair and its slope
// fits the non-increasing order, and folded into its neighbour otherwise.
std::vector<Group> AbsorbEndCells(const ProblemData& p,
                                  std::vector<Group> groups, double tol) {
  auto is_regime = [&](const Group& cell, const Group& neighbour,
                       bool front) {
    const double slope = p.c.dot(cell.u);
    const double other = p.c.dot(neighbour.u);
    const double allowed = 10.0 * tol * (1.0 + std::abs(other));
    const bool ordered =
        front ? slope >= other - allowed : slope <= other + allowed;
    return ordered && VerifyRatesPair(p, ToInterval(p, cell)).passed;
  };
  if (groups.size() >= 2 && groups.front().cells == 1 &&
      !is_regime(groups[0], groups[1], true)) {
    groups[1].lo = groups[0].lo;
    groups.erase(groups.begin());
  }
  const size_t n = groups.size();
  if (n >= 2 && groups.back().cells == 1 &&
      !is_regime(groups[n - 1], groups[n - 2], false)) {
    groups[n - 2].hi = groups.back().hi;
    groups.pop_back();
  }
  return groups;
}

void CheckIndices(const std::vector<int>& set, int limit, const char* name) {
  for (int i : set) {
    if (i < 0 || i >= limit) {
      throw Error(ErrorCode::kDimensionMismatch,
                  std::string(name) + " index " + std::to_string(i) +
                      " out of range");
    }
  }
}

bool Contains(const std::vector<int>& set, int i) {
  return std::find(set.begin(), set.end(), i) != set.end();
}

int Rank(const Matrix& m) {
  if (m.cols() == 0) return 0;
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  qr.setThreshold(1e-10);
  return static_cast<int>(qr.rank());
}

// c lies in the span of the selected columns of m.
bool InSpan(const Matrix& m, const std::vector<int>& cols, const Vector& c) {
  Matrix s(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (size_t i = 0; i < cols.size(); ++i) s.col(i) = m.col(cols[i]);
  Matrix sc(m.rows(), s.cols() + 1);
  sc << s, c;
  return Rank(sc) == Rank(s);
}

}  // namespace

SupportSets ComputeSupport(const Vector& u_rate, const Vector& p_rate) {
  SupportSets s;
  auto classify = [](const Vector& rate, std::vector<int>* set,
                     std::vector<int>* borderline) {
    const double threshold = 1e-7 * (1.0 + InfNorm(rate));
    for (int i = 0; i < rate.size(); ++i) {
      if (rate[i] > threshold) set->push_back(i);
      if (rate[i] > 0.1 * threshold && rate[i] < 10.0 * threshold) {
        borderline->push_back(i);
      }
    }
  };
  classify(u_rate, &s.j_set, &s.borderline_j);
  classify(p_rate, &s.k_set, &s.borderline_k);
  return s;
}

std::vector<RateInterval> DetectRateIntervals(
    const ProblemData& p, const MeasureSolution& primal,
    const MeasureSolution& dual, const RateDetectionOptions& options) {
  const double T = p.horizon;
  ValidateMeasure(primal, p.num_cols(), T);
  ValidateMeasure(dual, p.num_rows(), T);

  std::vector<double> cuts(primal.partition);
  for (double tau : dual.partition) cuts.push_back(std::clamp(T - tau, 0.0, T));
  std::sort(cuts.begin(), cuts.end());
  const double min_len = 1e-12 * T;

  std::vector<Group> cells;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] <= min_len) continue;
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    cells.push_back(
        {cuts[i], cuts[i + 1], DensityAt(primal, mid), DensityAt(dual, T - mid), 1});
  }

  const RateComparator cmp(options.tol);
  std::vector<Group> groups = MergeAgreeing(cells, cmp);
  if (options.absorb_transitions) {
    groups = AbsorbTransitions(std::move(groups), cmp);
    groups = AbsorbEndCells(p, std::move(groups), options.tol);
  }

  std::vector<RateInterval> out;
  for (const Group& g : groups) out.push_back(ToInterval(p, g));
  for (size_t i = 1; i < out.size(); ++i) {
    const double prev = out[i - 1].objective_slope;
    const double cur = out[i].objective_slope;
    const double allowed = 10.0 * options.tol * (1.0 + std::abs(prev));
    if (cur > prev + allowed) {
      std::ostringstream os;
      os << "c'u increases from " << prev << " to " << cur << " at t = "
         << out[i].t_lo;
      throw Error(ErrorCode::kNonMonotoneSlope, os.str());
    }
  }
  return out;
}

std::pair<LpProblem, LpProblem> BuildRatesLpPair(const ProblemData& p,
                                                 const SupportSets& support) {
  ValidateProblem(p);
  const int k = p.num_rows();
  const int j = p.num_cols();
  CheckIndices(support.j_set, j, "J-support");
  CheckIndices(support.k_set, k, "K-support");

  LpProblem primal;
  primal.direction = Direction::kMaximize;
  primal.objective = Vector::Zero(j + k);
  primal.objective.head(j) = p.c;
  primal.constraints.resize(k, j + k);
  primal.constraints << p.A, Matrix::Identity(k, k);
  primal.rhs = p.b;
  primal.relations.assign(k, Relation::kEqual);
  for (int i = 0; i < j; ++i) {
    primal.restrictions.push_back(Contains(support.j_set, i)
                                      ? SignRestriction::kNonNegative
                                      : SignRestriction::kZero);
  }
  for (int i = 0; i < k; ++i) {
    primal.restrictions.push_back(Contains(support.k_set, i)
                                      ? SignRestriction::kNonNegative
                                      : SignRestriction::kFree);
  }

  LpProblem dual;
  dual.direction = Direction::kMinimize;
  dual.objective = Vector::Zero(k + j);
  dual.objective.head(k) = p.b;
  dual.constraints.resize(j, k + j);
  dual.constraints << p.A.transpose(), -Matrix::Identity(j, j);
  dual.rhs = p.c;
  dual.relations.assign(j, Relation::kEqual);
  for (int i = 0; i < k; ++i) {
    dual.restrictions.push_back(Contains(support.k_set, i)
                                    ? SignRestriction::kNonNegative
                                    : SignRestriction::kZero);
  }
  for (int i = 0; i < j; ++i) {
    dual.restrictions.push_back(Contains(support.j_set, i)
                                    ? SignRestriction::kNonNegative
                                    : SignRestriction::kFree);
  }

  if (!LpStructurallyEqual(CanonicalizeLp(LpDual(primal)),
                           CanonicalizeLp(dual), {}, {}, 0.0)) {
    throw Error(ErrorCode::kNumericalFailure,
                "Rates-LP* is not the dual of Rates-LP");
  }
  return {std::move(primal), std::move(dual)};
}

RatesVerification VerifyRatesPair(const ProblemData& p,
                                  const RateInterval& interval, double tol) {
  RatesVerification result;
  auto fail = [&](const std::string& what) {
    result.passed = false;
    result.violations.push_back(what);
  };
  const int k = p.num_rows();
  const int j = p.num_cols();
  if (interval.u_rate.size() != j || interval.p_rate.size() != k) {
    fail("rate dimensions do not match the problem");
    return result;
  }
  const Vector& u = interval.u_rate;
  const Vector& pr = interval.p_rate;
  const SupportSets& s = interval.support;
  const double scale = 1.0 + InfNorm(u) + InfNorm(pr) +
                       p.A.cwiseAbs().maxCoeff() + InfNorm(p.b) + InfNorm(p.c);
  const double eps = tol * scale;
  const Vector xdot = p.b - p.A * u;
  const Vector qdot = p.A.transpose() * pr - p.c;

  for (int i = 0; i < j; ++i) {
    if (u[i] < -eps) fail("u_" + std::to_string(i) + " negative");
    if (!Contains(s.j_set, i) && std::abs(u[i]) > eps) {
      fail("u_" + std::to_string(i) + " nonzero off the support");
    }
    if (Contains(s.j_set, i) && qdot[i] < -eps) {
      fail("qdot_" + std::to_string(i) + " negative on the support");
    }
  }
  for (int i = 0; i < k; ++i) {
    if (pr[i] < -eps) fail("p_" + std::to_string(i) + " negative");
    if (!Contains(s.k_set, i) && std::abs(pr[i]) > eps) {
      fail("p_" + std::to_string(i) + " nonzero off the support");
    }
    if (Contains(s.k_set, i) && xdot[i] < -eps) {
      fail("xdot_" + std::to_string(i) + " negative on the support");
    }
  }
  if (std::abs(qdot.dot(u)) > eps * scale) fail("qdot' u != 0");
  if (std::abs(xdot.dot(pr)) > eps * scale) fail("xdot' p != 0");

  const auto [rates, rates_star] = BuildRatesLpPair(p, s);
  const LpOutcome best = SolveLp(rates);
  const LpOutcome best_star = SolveLp(rates_star);
  if (best.status != LpStatus::kOptimal ||
      best_star.status != LpStatus::kOptimal) {
    fail("Rates-LP pair has no optimum for this support");
    return result;
  }
  if (std::abs(p.c.dot(u) - best.objective_value) > eps) {
    std::ostringstream os;
    os << "c'u = " << p.c.dot(u) << " but Rates-LP optimum is "
       << best.objective_value;
    fail(os.str());
  }
  if (std::abs(p.b.dot(pr) - best_star.objective_value) > eps) {
    std::ostringstream os;
    os << "b'p = " << p.b.dot(pr) << " but Rates-LP* optimum is "
       << best_star.objective_value;
    fail(os.str());
  }
  return result;
}

bool CheckNondegeneracy(const Matrix& A, const Vector& c) {
  const int k = static_cast<int>(A.rows());
  const int j = static_cast<int>(A.cols());
  if (c.size() != j) {
    throw Error(ErrorCode::kDimensionMismatch,
                "c must have one entry per column of A");
  }
  Matrix m(j, k + j);
  m << A.transpose(), Matrix::Identity(j, j);
  const int total = k + j;
  const int pick = j - 1;

  std::mt19937 rng(20240611u);
  std::vector<int> all(total);
  for (int i = 0; i < total; ++i) all[i] = i;
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> cols(all.begin(), all.begin() + pick);
    if (InSpan(m, cols, c)) return false;
  }

  std::vector<bool> mask(total, false);
  std::fill(mask.begin(), mask.begin() + pick, true);
  do {
    std::vector<int> cols;
    for (int i = 0; i < total; ++i) {
      if (mask[i]) cols.push_back(i);
    }
    if (InSpan(m, cols, c)) return false;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return true;
}

MeasureSolution PiecewiseLinearize(const ProblemData& p,
                                   const MeasureSolution& sol,
                                   const std::vector<double>& breakpoints,
                                   double tol) {
  const double T = p.horizon;
  ValidateMeasure(sol, p.num_cols(), T);
  const int n = static_cast<int>(breakpoints.size()) - 1;
  if (n < 1 || breakpoints.front() != 0.0 ||
      std::abs(breakpoints.back() - T) > 1e-12 * T) {
    throw Error(ErrorCode::kMalformedProblem,
                "breakpoints must start at 0 and end at T");
  }
  for (int i = 0; i < n; ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      throw Error(ErrorCode::kMalformedProblem,
                  "breakpoints must increase strictly");
    }
  }

  MeasureSolution out;
  out.atom_start = sol.atom_start;
  out.partition = breakpoints;
  out.partition.back() = sol.horizon();
  Vector previous = CumulativeAt(sol, 0.0);
  for (int i = 1; i <= n; ++i) {
    const Vector next = i < n ? CumulativeAt(sol, breakpoints[i])
                              : CumulativeBefore(sol, sol.horizon());
    out.densities.push_back((next - previous) /
                            (out.partition[i] - out.partition[i - 1]));
    previous = next;
  }
  out.atom_end = sol.atom_end;

  const double scale = 1.0 + InfNorm(p.beta) + InfNorm(p.b) * T;
  const MeasureFeasibility check = CheckFeasibleMeasure(p, out, tol * scale);
  if (!check.feasible) {
    std::ostringstream os;
    os << "linearized solution violates the constraints by "
       << check.worst_violation << " at t = " << check.worst_t;
    throw Error(ErrorCode::kInfeasibleResult, os.str());
  }
  return out;
}

double InteriorAtomMass(const MeasureSolution& sol) {
  double worst = 0.0;
  for (const InteriorAtom& atom : sol.interior_atoms) {
    worst = std::max(worst, InfNorm(atom.mass));
  }
  const int n = sol.num_intervals();
  for (int i = 1; i + 1 < n; ++i) {
    const double len = sol.partition[i + 1] - sol.partition[i];
    const Vector neighbours =
        sol.densities[i - 1].cwiseMax(sol.densities[i + 1]);
    const Vector excess = (sol.densities[i] - neighbours).cwiseMax(0.0);
    worst = std::max(worst, len * InfNorm(excess));
  }
  return worst;
}

}  // namespace mclp
