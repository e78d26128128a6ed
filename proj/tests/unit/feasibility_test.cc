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


#include "mclp/feasibility.h"

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "mclp/discretization.h"
#include "mclp/error.h"
#include "testing/oracles.h"
#include "testing/random_instances.h"

namespace mclp {
namespace {

using ::mclp::testing::BruteForceLp;
using ::mclp::testing::Rng;

ProblemData Scalar(double a, double beta, double b, double gamma, double c) {
  ProblemData p;
  p.A = Matrix::Constant(1, 1, a);
  p.beta = Vector::Constant(1, beta);
  p.b = Vector::Constant(1, b);
  p.gamma = Vector::Constant(1, gamma);
  p.c = Vector::Constant(1, c);
  return p;
}

ProblemData P1() { return Scalar(1, 1, 0, 1, 0); }
ProblemData P2() { return Scalar(1, 1, 1, 0, 1); }
ProblemData P3() { return Scalar(1, -1, 0, 0, 0); }
ProblemData P4() { return Scalar(1, 0, 1, 0, 0); }

TEST(BuildTestLpTest, Shape) {
  const LpProblem lp = BuildTestLp(P2());
  EXPECT_EQ(lp.num_cols(), 2);
  EXPECT_EQ(lp.num_rows(), 2);
  // max u s.t. u <= 1, u + U <= 2.
  EXPECT_EQ(lp.objective(0), 1.0);
  EXPECT_EQ(lp.objective(1), 0.0);
  EXPECT_EQ(lp.rhs(0), 1.0);
  EXPECT_EQ(lp.rhs(1), 2.0);
}

TEST(BuildTestLpTest, Values) {
  for (const ProblemData& p : {P1(), P2()}) {
    const LpProblem lp = BuildTestLp(p);
    const LpOutcome out = SolveLp(lp);
    ASSERT_EQ(out.status, LpStatus::kOptimal);
    EXPECT_NEAR(out.objective_value, 1.0, 1e-12);
    EXPECT_NEAR(out.objective_value, BruteForceLp(lp).value, 1e-12);
  }
  EXPECT_EQ(SolveLp(BuildTestLp(P3())).status, LpStatus::kInfeasible);
}

TEST(CheckFeasibilityTest, Margins) {
  const FeasibilityReport p2 = CheckFeasibility(P2());
  EXPECT_TRUE(p2.feasible);
  EXPECT_NEAR(p2.strict_margin, 1.0, 1e-12);
  EXPECT_TRUE(p2.witness.has_value());

  const FeasibilityReport p4 = CheckFeasibility(P4());
  EXPECT_TRUE(p4.feasible);
  EXPECT_NEAR(p4.strict_margin, 0.0, 1e-12);
  EXPECT_FALSE(p4.strictly_feasible());

  const FeasibilityReport dual = CheckFeasibility(DualProblem(P2()));
  EXPECT_TRUE(dual.feasible);
  EXPECT_EQ(dual.strict_margin, std::numeric_limits<double>::infinity());
}

TEST(CheckFeasibilityTest, InfeasibleHasCertificate) {
  const FeasibilityReport r = CheckFeasibility(P3());
  EXPECT_FALSE(r.feasible);
  EXPECT_LE(r.strict_margin, 0.0);
  EXPECT_FALSE(r.witness.has_value());
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_TRUE(IsFarkasCertificate(BuildTestLp(P3()), *r.certificate, 1e-9));
}

TEST(CheckFeasibilityTest, MarginShiftIdentity) {
  Rng rng(5);
  int checked = 0;
  while (checked < 30) {
    ProblemData p = testing::RandomProblem(rng);
    const FeasibilityReport base = CheckFeasibility(p);
    if (!base.feasible || !std::isfinite(base.strict_margin)) continue;
    const double shift = 0.3;
    p.beta.array() -= shift;
    const FeasibilityReport shifted = CheckFeasibility(p);
    EXPECT_NEAR(shifted.strict_margin, base.strict_margin - shift, 1e-9);
    ++checked;
  }
}

TEST(TestSolutionToMeasureTest, Examples) {
  MeasureSolution p1 = TestSolutionToMeasure(P1(), Vector::Ones(1),
                                             Vector::Zero(1));
  EXPECT_EQ(p1.atom_start(0), 1.0);
  EXPECT_EQ(p1.densities[0](0), 0.0);
  EXPECT_TRUE(CheckFeasibleMeasure(P1(), p1, 1e-12).feasible);
  EXPECT_DOUBLE_EQ(EvaluateObjective(P1(), p1), 1.0);

  MeasureSolution p2 = TestSolutionToMeasure(P2(), Vector::Ones(1),
                                             Vector::Ones(1));
  EXPECT_EQ(p2.atom_start(0), 1.0);
  EXPECT_EQ(p2.densities[0](0), 1.0);
  EXPECT_EQ(p2.atom_end(0), 0.0);
  EXPECT_TRUE(CheckFeasibleMeasure(P2(), p2, 1e-12).feasible);

  MeasureSolution zero = TestSolutionToMeasure(P2(), Vector::Zero(1),
                                               Vector::Zero(1));
  EXPECT_EQ(EvaluateObjective(P2(), zero), 0.0);
}

TEST(TestSolutionToMeasureTest, RejectsInfeasibleWitness) {
  try {
    TestSolutionToMeasure(P1(), Vector::Constant(1, 2.0), Vector::Zero(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleWitness);
  }
}

TEST(TestSolutionToMeasureTest, WitnessesAreFeasible) {
  Rng rng(6);
  int checked = 0;
  while (checked < 50) {
    const ProblemData p = testing::RandomProblem(rng);
    const FeasibilityReport r = CheckFeasibility(p);
    if (!r.feasible) continue;
    const MeasureSolution sol =
        TestSolutionToMeasure(p, r.witness->atom, r.witness->increment);
    EXPECT_TRUE(CheckFeasibleMeasure(p, sol, 1e-8).feasible);
    ++checked;
  }
}

TEST(FeasibilityEquivalenceTest, AgreesWithDiscretization) {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const ProblemData p = testing::RandomProblem(rng);
    const bool feasible = CheckFeasibility(p).feasible;
    for (int n : {1, 4, 16}) {
      const LpOutcome out =
          SolveLp(BuildDclp1(p, EquidistantPartition(p.horizon, n)));
      EXPECT_EQ(out.status != LpStatus::kInfeasible, feasible)
          << "trial " << trial << " N " << n;
    }
  }
}

}  // namespace
}  // namespace mclp
