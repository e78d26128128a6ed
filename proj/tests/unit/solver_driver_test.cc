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


#include "mclp/solver_driver.h"

#include <cmath>

#include "gtest/gtest.h"
#include "mclp/error.h"
#include "mclp/feasibility.h"
#include "testing/random_instances.h"

namespace mclp {
namespace {

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

TEST(SolveTest, P2) {
  const SolveReport r = Solve(P2());
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_EQ(r.n_final, 1);
  EXPECT_NEAR(r.v_low, 1.5, 1e-12);
  EXPECT_NEAR(r.v_high, 1.5, 1e-12);
  EXPECT_NEAR(r.primal.atom_start(0), 1.0, 1e-12);
  EXPECT_NEAR(r.primal.densities[0](0), 1.0, 1e-12);
  EXPECT_NEAR(r.primal.atom_end(0), 0.0, 1e-12);
  EXPECT_NEAR(r.dual.atom_start(0), 0.0, 1e-12);
  EXPECT_NEAR(r.dual.densities[0](0), 1.0, 1e-12);
  EXPECT_NEAR(r.dual.atom_end(0), 0.0, 1e-12);
  EXPECT_NEAR(r.slater_primal, 1.0, 1e-12);
  ASSERT_TRUE(r.coarse_bounds.has_value());
  EXPECT_NEAR(r.coarse_bounds->v_lower, 1.5, 1e-12);
  ASSERT_EQ(r.history.size(), 1u);
  EXPECT_NEAR(r.history[0].upsilon, 0.0, 1e-12);
}

TEST(SolveTest, P1) {
  const SolveReport r = Solve(P1());
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.v_low, 1.0, 1e-12);
  EXPECT_NEAR(r.primal.atom_start(0), 1.0, 1e-12);
  EXPECT_NEAR(r.dual.atom_start(0), 1.0, 1e-12);
}

TEST(SolveTest, P3Infeasible) {
  const SolveReport r = Solve(P3());
  EXPECT_EQ(r.status, SolveStatus::kInfeasible);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_TRUE(IsFarkasCertificate(BuildTestLp(P3()), *r.certificate, 1e-9));
}

TEST(SolveTest, DualInfeasible) {
  // max int dU with U unconstrained above: the dual is infeasible.
  const SolveReport r = Solve(Scalar(-1, 1, 0, 1, 0));
  EXPECT_EQ(r.status, SolveStatus::kDualInfeasible);
  ASSERT_TRUE(r.certificate.has_value());
}

TEST(SolveTest, GapNotCertifiedAtNMax) {
  Rng rng(17);
  SolveOptions options;
  options.tol = 1e-14;
  options.n_max = 2;
  int seen = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const ProblemData p = testing::RandomSlaterProblem(rng, 0.1);
    const SolveReport r = Solve(p, options);
    if (r.status != SolveStatus::kGapNotCertified) continue;
    ++seen;
    EXPECT_LE(r.n_final, 2);
    EXPECT_LE(r.v_low, r.v_high + 1e-9);
    EXPECT_GT(r.certified_gap, 0.0);
  }
  EXPECT_GT(seen, 0);
}

TEST(SolveTest, RandomSlaterInstancesConverge) {
  Rng rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    const ProblemData p = testing::RandomSlaterProblem(rng, 0.1);
    SolveOptions options;
    options.tol = 1e-4;
    options.n_max = 256;
    const SolveReport r = Solve(p, options);
    ASSERT_EQ(r.status, SolveStatus::kOptimal) << "trial " << trial;
    const double scale = 1 + std::abs(r.v_low);
    EXPECT_LE(r.certified_gap, 1e-4 * scale);
    EXPECT_NEAR(EvaluateObjective(p, r.primal), r.v_low, 1e-9 * scale);
    EXPECT_NEAR(-EvaluateObjective(DualProblem(p), r.dual), r.v_high,
                1e-9 * scale);
    EXPECT_TRUE(CheckFeasibleMeasure(p, r.primal, 1e-7).feasible);
    EXPECT_TRUE(CheckFeasibleMeasure(DualProblem(p), r.dual, 1e-7).feasible);
    EXPECT_LE(ComplementarySlacknessResidual(p, r.primal, r.dual),
              r.certified_gap + 1e-9 * scale);
    for (const LevelRecord& level : r.history) {
      EXPECT_LE(level.v_low, level.v_high + 1e-8 * scale);
      EXPECT_LE(level.posterior_gap, level.prior_bound + 1e-8 * scale);
    }
  }
}

TEST(SolveTest, RejectsMalformedProblem) {
  ProblemData p = P2();
  p.horizon = -1.0;
  try {
    Solve(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedProblem);
  }
}

TEST(ValueBracketsTest, Examples) {
  for (const ValueBracket& v : ValueBrackets(P2(), {1, 2, 4})) {
    EXPECT_NEAR(v.v_low, 1.5, 1e-12);
    EXPECT_NEAR(v.v_high, 1.5, 1e-12);
  }
  for (const ValueBracket& v : ValueBrackets(P1(), {1, 2})) {
    EXPECT_NEAR(v.v_low, 1.0, 1e-12);
    EXPECT_NEAR(v.v_high, 1.0, 1e-12);
  }
  EXPECT_THROW(ValueBrackets(P3(), {1}), Error);
}

TEST(ValueBracketsTest, NestWithinCoarseBounds) {
  Rng rng(19);
  for (int trial = 0; trial < 15; ++trial) {
    const ProblemData p = testing::RandomSlaterProblem(rng, 0.05);
    const CoarseBounds cb = ComputeCoarseBounds(p);
    for (const ValueBracket& v : ValueBrackets(p, {1, 2, 4, 8})) {
      const double tol = 1e-8 * (1 + std::abs(v.v_low));
      EXPECT_GE(v.v_low, cb.v_lower - tol);
      EXPECT_LE(v.v_high, cb.v_upper + tol);
      EXPECT_LE(v.v_low, v.v_high + tol);
    }
  }
}

TEST(SolveStatusTest, Names) {
  EXPECT_EQ(SolveStatusName(SolveStatus::kOptimal), "Optimal");
  EXPECT_EQ(SolveStatusName(SolveStatus::kGapNotCertified), "GapNotCertified");
}

}  // namespace
}  // namespace mclp
