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
#include <random>

#include "benchmark/benchmark.h"
#include "mclp/discretization.h"
#include "mclp/feasibility.h"
#include "mclp/lp_core.h"
#include "mclp/solver_driver.h"

namespace mclp {
namespace {

// Two competing controls: u_1 pays 1 - t, u_2 pays 1/3, switch at t = 2/3.
ProblemData TwoRegime() {
  ProblemData p;
  p.A = Matrix::Ones(1, 2);
  p.beta = Vector::Ones(1);
  p.b = Vector::Ones(1);
  p.gamma = Vector(2);
  p.gamma << 0.0, 1.0 / 3.0;
  p.c = Vector(2);
  p.c << 1.0, 0.0;
  return p;
}

// K x J instance with nonnegative A and positive beta, b: always feasible.
ProblemData Dense(int k, int j, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(0.1, 2.0);
  std::uniform_real_distribution<double> cost(-1.0, 1.0);
  ProblemData p;
  p.A = Matrix::NullaryExpr(k, j, [&] { return entry(rng); });
  p.beta = Vector::NullaryExpr(k, [&] { return entry(rng); });
  p.b = Vector::NullaryExpr(k, [&] { return entry(rng); });
  p.gamma = Vector::NullaryExpr(j, [&] { return cost(rng); });
  p.c = Vector::NullaryExpr(j, [&] { return entry(rng); });
  return p;
}

void BM_SolveDclp1(benchmark::State& state) {
  const ProblemData p = Dense(4, 4, 7);
  const LpProblem lp =
      BuildDclp1(p, EquidistantPartition(p.horizon, state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveLp(lp));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveDclp1)->RangeMultiplier(2)->Range(1, 128)->Complexity();

void BM_CheckFeasibility(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const ProblemData p = Dense(size, size, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CheckFeasibility(p));
  }
}
BENCHMARK(BM_CheckFeasibility)->DenseRange(2, 10, 4);

void BM_SolveTwoRegime(benchmark::State& state) {
  const ProblemData p = TwoRegime();
  SolveOptions options;
  options.tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  options.parallel = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(p, options));
  }
}
BENCHMARK(BM_SolveTwoRegime)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SolveDense(benchmark::State& state) {
  const ProblemData p = Dense(3, 3, 5);
  SolveOptions options;
  options.tol = 1e-3;
  options.parallel = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(p, options));
  }
}
BENCHMARK(BM_SolveDense)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mclp

BENCHMARK_MAIN();
