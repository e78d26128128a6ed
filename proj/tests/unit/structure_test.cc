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

#include <cmath>

#include "gtest/gtest.h"
#include "mclp/discretization.h"
#include "mclp/error.h"
#include "mclp/extension.h"
#include "mclp/solver_driver.h"
#include "testing/random_instances.h"

namespace mclp {
namespace {

using ::mclp::testing::Rng;

ProblemData Scalar(double a, double beta, double b, double gamma, double c,
                   double horizon = 1.0) {
  ProblemData p;
  p.A = Matrix::Constant(1, 1, a);
  p.beta = Vector::Constant(1, beta);
  p.b = Vector::Constant(1, b);
  p.gamma = Vector::Constant(1, gamma);
  p.c = Vector::Constant(1, c);
  p.horizon = horizon;
  return p;
}

ProblemData P1() { return Scalar(1, 1, 0, 1, 0); }
ProblemData P2() { return Scalar(1, 1, 1, 0, 1); }

struct Pair {
  MeasureSolution primal;
  MeasureSolution dual;
};

// Extended dCLP1 / dCLP2 optima on the equidistant partition of size n.
Pair OptimaAt(const ProblemData& p, int n) {
  const Partition part = EquidistantPartition(p.horizon, n);
  const LpOutcome a = SolveLp(BuildDclp1(p, part));
  const LpOutcome b = SolveLp(BuildDclp2(p, part));
  EXPECT_EQ(a.status, LpStatus::kOptimal);
  EXPECT_EQ(b.status, LpStatus::kOptimal);
  return {ExtendDiscrete(PrimalDiscreteSolution(p, part, a.primal), part),
          ExtendDiscrete(DualDiscreteSolution(p, part, b.primal),
                         ReversePartition(part))};
}

TEST(ComputeSupportTest, Thresholds) {
  Vector u(3), p(2);
  u << 1.0, 0.0, 1e-8;
  p << 0.0, 2.0;
  const SupportSets s = ComputeSupport(u, p);
  EXPECT_EQ(s.j_set, std::vector<int>({0}));
  EXPECT_EQ(s.k_set, std::vector<int>({1}));
}

TEST(DetectRateIntervalsTest, P2) {
  const SolveReport r = Solve(P2());
  const auto intervals = DetectRateIntervals(P2(), r.primal, r.dual);
  ASSERT_EQ(intervals.size(), 1u);
  EXPECT_EQ(intervals[0].t_lo, 0.0);
  EXPECT_EQ(intervals[0].t_hi, 1.0);
  EXPECT_NEAR(intervals[0].u_rate(0), 1.0, 1e-12);
  EXPECT_NEAR(intervals[0].p_rate(0), 1.0, 1e-12);
  EXPECT_NEAR(intervals[0].objective_slope, 1.0, 1e-12);
}

TEST(DetectRateIntervalsTest, P1) {
  const SolveReport r = Solve(P1());
  const auto intervals = DetectRateIntervals(P1(), r.primal, r.dual);
  ASSERT_EQ(intervals.size(), 1u);
  EXPECT_NEAR(intervals[0].u_rate(0), 0.0, 1e-12);
  EXPECT_NEAR(intervals[0].p_rate(0), 0.0, 1e-12);
  EXPECT_NEAR(intervals[0].objective_slope, 0.0, 1e-12);
}

TEST(DetectRateIntervalsTest, MergesFineDiscretization) {
  const Pair pair = OptimaAt(P2(), 16);
  const auto intervals = DetectRateIntervals(P2(), pair.primal, pair.dual);
  ASSERT_EQ(intervals.size(), 1u);
  EXPECT_NEAR(intervals[0].u_rate(0), 1.0, 1e-9);
}

TEST(DetectRateIntervalsTest, SelfConsistentAcrossRefinement) {
  const ProblemData p = Scalar(1, 1, 1, 0, 1, 2.0);
  const Pair coarse = OptimaAt(p, 256);
  const Pair fine = OptimaAt(p, 512);
  const auto a = DetectRateIntervals(p, coarse.primal, coarse.dual);
  const auto b = DetectRateIntervals(p, fine.primal, fine.dual);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a[i].objective_slope, b[i].objective_slope, 1e-6);
    EXPECT_TRUE(VerifyRatesPair(p, a[i]).passed);
  }
}

TEST(DetectRateIntervalsTest, RejectsIncreasingSlope) {
  // Densities 0 then 1 on P2: c'u increases.
  MeasureSolution primal = ZeroMeasure(1, 1.0);
  primal.partition = {0.0, 0.25, 0.5, 0.75, 1.0};
  primal.densities = {Vector::Zero(1), Vector::Zero(1), Vector::Ones(1),
                      Vector::Ones(1)};
  MeasureSolution dual = ZeroMeasure(1, 1.0);
  dual.partition = primal.partition;
  dual.densities = primal.densities;
  dual.densities[0].setOnes();
  dual.densities[1].setOnes();
  try {
    DetectRateIntervals(P2(), primal, dual);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonMonotoneSlope);
  }
}

TEST(RatesLpPairTest, P2) {
  SupportSets s;
  s.j_set = {0};
  s.k_set = {0};
  auto [primal, dual] = BuildRatesLpPair(P2(), s);
  const LpOutcome a = SolveLp(primal);
  const LpOutcome b = SolveLp(dual);
  ASSERT_EQ(a.status, LpStatus::kOptimal);
  ASSERT_EQ(b.status, LpStatus::kOptimal);
  EXPECT_NEAR(a.objective_value, 1.0, 1e-12);
  EXPECT_NEAR(a.primal(0), 1.0, 1e-12);
  EXPECT_NEAR(b.primal(0), 1.0, 1e-12);
}

TEST(RatesLpPairTest, EmptySupports) {
  Rng rng(20);
  const ProblemData p = testing::RandomProblem(rng, 3, 2);
  auto [primal, dual] = BuildRatesLpPair(p, SupportSets{});
  const LpOutcome a = SolveLp(primal);
  ASSERT_EQ(a.status, LpStatus::kOptimal);
  EXPECT_NEAR(a.objective_value, 0.0, 1e-12);
  const LpOutcome b = SolveLp(dual);
  ASSERT_EQ(b.status, LpStatus::kOptimal);
  EXPECT_NEAR(b.objective_value, 0.0, 1e-12);
  // qdot = -c.
  EXPECT_TRUE(b.primal.tail(2).isApprox(-p.c, 1e-12));
}

TEST(RatesLpPairTest, OutOfRange) {
  SupportSets s;
  s.j_set = {1};
  try {
    BuildRatesLpPair(P2(), s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

RateInterval Interval(double u, double p) {
  RateInterval iv;
  iv.t_lo = 0.0;
  iv.t_hi = 1.0;
  iv.u_rate = Vector::Constant(1, u);
  iv.p_rate = Vector::Constant(1, p);
  iv.support = ComputeSupport(iv.u_rate, iv.p_rate);
  iv.objective_slope = u;
  return iv;
}

TEST(VerifyRatesPairTest, Examples) {
  EXPECT_TRUE(VerifyRatesPair(P2(), Interval(1.0, 1.0)).passed);
  const RatesVerification bad = VerifyRatesPair(P2(), Interval(0.5, 1.0));
  EXPECT_FALSE(bad.passed);
  EXPECT_FALSE(bad.violations.empty());
  EXPECT_TRUE(VerifyRatesPair(P1(), Interval(0.0, 0.0)).passed);
}

TEST(NondegeneracyTest, Examples) {
  EXPECT_TRUE(CheckNondegeneracy(Matrix::Ones(1, 1), Vector::Ones(1)));
  EXPECT_FALSE(CheckNondegeneracy(Matrix::Ones(1, 1), Vector::Zero(1)));
  EXPECT_TRUE(CheckNondegeneracy(Matrix::Identity(2, 2), Vector::Ones(2)));
  // c parallel to a column of A'.
  Matrix a(2, 2);
  a << 1, 2, 0, 1;
  Vector c(2);
  c << 2, 4;
  EXPECT_FALSE(CheckNondegeneracy(a, c));
  EXPECT_THROW(CheckNondegeneracy(a, Vector::Ones(3)), Error);
}

TEST(PiecewiseLinearizeTest, P2Unchanged) {
  const SolveReport r = Solve(P2());
  const MeasureSolution lin = PiecewiseLinearize(P2(), r.primal, {0.0, 1.0});
  EXPECT_EQ(lin.partition.size(), 2u);
  EXPECT_NEAR(lin.densities[0](0), 1.0, 1e-12);
  EXPECT_NEAR(lin.atom_start(0), 1.0, 1e-12);
}

TEST(PiecewiseLinearizeTest, MergesEqualSlopes) {
  MeasureSolution sol = ZeroMeasure(1, 1.0);
  sol.partition = {0.0, 0.25, 1.0};
  sol.densities = {Vector::Constant(1, 0.5), Vector::Constant(1, 0.5)};
  const MeasureSolution lin = PiecewiseLinearize(P2(), sol, {0.0, 1.0});
  ASSERT_EQ(lin.num_intervals(), 1);
  EXPECT_DOUBLE_EQ(lin.densities[0](0), 0.5);
  EXPECT_DOUBLE_EQ(EvaluateObjective(P2(), lin), EvaluateObjective(P2(), sol));
}

TEST(PiecewiseLinearizeTest, DiscreteOptimumOfP2) {
  const Pair pair = OptimaAt(P2(), 8);
  const MeasureSolution lin = PiecewiseLinearize(P2(), pair.primal, {0.0, 1.0});
  ASSERT_EQ(lin.num_intervals(), 1);
  EXPECT_NEAR(EvaluateObjective(P2(), lin), 1.5, 1e-9);
}

TEST(PiecewiseLinearizeTest, InfeasibleInput) {
  MeasureSolution sol = ZeroMeasure(1, 1.0);
  sol.atom_start(0) = 2.0;
  try {
    PiecewiseLinearize(P2(), sol, {0.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleResult);
  }
}

TEST(InteriorAtomMassTest, CountsAtomsAndSpikes) {
  MeasureSolution sol = ZeroMeasure(1, 1.0);
  EXPECT_EQ(InteriorAtomMass(sol), 0.0);
  sol.interior_atoms.push_back({0.5, Vector::Constant(1, 0.25)});
  EXPECT_DOUBLE_EQ(InteriorAtomMass(sol), 0.25);
}

TEST(StructureTest, RandomNondegenerateIntervalsVerify) {
  Rng rng(21);
  int checked = 0;
  while (checked < 5) {
    const ProblemData p = testing::RandomSlaterProblem(rng, 0.1);
    if (!CheckNondegeneracy(p.A, p.c)) continue;
    SolveOptions options;
    options.tol = 1e-4;
    const SolveReport r = Solve(p, options);
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    const auto intervals = DetectRateIntervals(p, r.primal, r.dual);
    ASSERT_FALSE(intervals.empty());
    EXPECT_EQ(intervals.front().t_lo, 0.0);
    EXPECT_EQ(intervals.back().t_hi, p.horizon);
    for (size_t i = 1; i < intervals.size(); ++i) {
      EXPECT_EQ(intervals[i].t_lo, intervals[i - 1].t_hi);
      EXPECT_LE(intervals[i].objective_slope,
                intervals[i - 1].objective_slope + 1e-5);
    }
    ++checked;
  }
}

}  // namespace
}  // namespace mclp
