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


// mclp: command-line front end for the M-CLP solver.
//
//   mclp check <file>
//   mclp solve <file> [--tol 1e-6] [--max-n 4096] [-o sol.json]
//   mclp eval <problem> <solution>
//   mclp structure <problem> <solution>
//   mclp convert-sclp <file> [-o mclp.json]
//   mclp trajectory <problem> <solution> [--points 100] [-o out.csv]
//
// Exit codes: 0 success (check: strictly feasible), 1 usage or input error,
// 2 feasible but not strictly, 3 infeasible, 4 gap not certified,
// 5 unbounded. MCLP_LOG sets the log level (trace .. off, default warn).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "mclp/error.h"
#include "mclp/feasibility.h"
#include "mclp/io.h"
#include "mclp/model.h"
#include "mclp/sclp_bridge.h"
#include "mclp/solver_driver.h"
#include "mclp/structure.h"
#include "spdlog/sinks/stdout_sinks.h"
#include "spdlog/spdlog.h"

namespace {

using mclp::FormatDouble;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotStrict = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitGapNotCertified = 4;
constexpr int kExitUnbounded = 5;

void SetUpLogging() {
  auto logger = spdlog::stderr_logger_st("mclp");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("MCLP_LOG")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  spdlog::info("wrote {}", path);
}

// SCLP files are converted to their M-CLP extension.
mclp::ProblemData LoadProblem(const std::string& path) {
  mclp::ProblemInstance inst = mclp::ParseProblem(ReadFile(path));
  if (auto* s = std::get_if<mclp::SclpData>(&inst)) {
    spdlog::info("{}: SCLP instance, using its M-CLP extension", path);
    return mclp::SclpToMclp(*s);
  }
  return std::get<mclp::ProblemData>(inst);
}

int RunCheck(const std::string& file) {
  const mclp::ProblemData p = LoadProblem(file);
  const mclp::FeasibilityReport primal = mclp::CheckFeasibility(p);
  const mclp::FeasibilityReport dual =
      mclp::CheckFeasibility(mclp::DualProblem(p));
  std::cout << "primal_feasible " << (primal.feasible ? "yes" : "no") << "\n"
            << "primal_margin " << FormatDouble(primal.strict_margin) << "\n"
            << "dual_feasible " << (dual.feasible ? "yes" : "no") << "\n"
            << "dual_margin " << FormatDouble(dual.strict_margin) << "\n";
  if (!primal.feasible || !dual.feasible) return kExitInfeasible;
  if (!primal.strictly_feasible() || !dual.strictly_feasible()) {
    return kExitNotStrict;
  }
  return kExitOk;
}

int RunSolve(const std::string& file, double tol, int max_n,
             const std::string& output) {
  const mclp::ProblemData p = LoadProblem(file);
  mclp::SolveOptions options;
  options.tol = tol;
  options.n_max = max_n;
  const mclp::SolveReport report = mclp::Solve(p, options);
  for (const std::string& w : report.warnings) spdlog::warn("{}", w);
  for (const mclp::LevelRecord& level : report.history) {
    spdlog::debug("N={} v_low={} v_high={} gap={}", level.n,
                  FormatDouble(level.v_low), FormatDouble(level.v_high),
                  FormatDouble(level.posterior_gap));
  }

  std::ostream& summary = output.empty() ? std::cerr : std::cout;
  summary << "status " << mclp::SolveStatusName(report.status) << "\n";
  switch (report.status) {
    case mclp::SolveStatus::kInfeasible:
    case mclp::SolveStatus::kDualInfeasible:
      return kExitInfeasible;
    case mclp::SolveStatus::kUnbounded:
      return kExitUnbounded;
    default:
      break;
  }
  summary << "v_low " << FormatDouble(report.v_low) << "\n"
          << "v_high " << FormatDouble(report.v_high) << "\n"
          << "gap " << FormatDouble(report.certified_gap) << "\n"
          << "n_final " << report.n_final << "\n";
  WriteOutput(output,
              mclp::SerializeSolution(mclp::SolutionFileFromReport(report)));
  return report.status == mclp::SolveStatus::kOptimal ? kExitOk
                                                      : kExitGapNotCertified;
}

int RunEval(const std::string& problem, const std::string& solution) {
  const mclp::ProblemData p = LoadProblem(problem);
  const mclp::SolutionFile sol = mclp::ParseSolution(ReadFile(solution));
  const double tol = 1e-7;
  const mclp::MeasureFeasibility feas =
      mclp::CheckFeasibleMeasure(p, sol.primal, tol);
  std::cout << "objective " << FormatDouble(EvaluateObjective(p, sol.primal))
            << "\n"
            << "feasible " << (feas.feasible ? "yes" : "no") << "\n"
            << "worst_violation " << FormatDouble(feas.worst_violation)
            << "\n";
  if (sol.dual) {
    const mclp::ProblemData d = mclp::DualProblem(p);
    const mclp::MeasureFeasibility dfeas =
        mclp::CheckFeasibleMeasure(d, *sol.dual, tol);
    std::cout << "dual_objective "
              << FormatDouble(-EvaluateObjective(d, *sol.dual)) << "\n"
              << "dual_feasible " << (dfeas.feasible ? "yes" : "no") << "\n"
              << "complementary_slackness "
              << FormatDouble(mclp::ComplementarySlacknessResidual(
                     p, sol.primal, *sol.dual))
              << "\n";
  }
  return feas.feasible ? kExitOk : kExitInfeasible;
}

std::string IndexList(const std::vector<int>& idx) {
  std::string out = "{";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(idx[i] + 1);
  }
  return out + "}";
}

int RunStructure(const std::string& problem, const std::string& solution) {
  const mclp::ProblemData p = LoadProblem(problem);
  const mclp::SolutionFile sol = mclp::ParseSolution(ReadFile(solution));
  if (!sol.dual) throw std::runtime_error(solution + ": no dual solution");
  const bool nondegenerate = mclp::CheckNondegeneracy(p.A, p.c);
  std::cout << "nondegenerate " << (nondegenerate ? "yes" : "no") << "\n";
  const auto intervals = mclp::DetectRateIntervals(p, sol.primal, *sol.dual);
  std::cout << "intervals " << intervals.size() << "\n";
  for (const mclp::RateInterval& iv : intervals) {
    const mclp::RatesVerification ver = mclp::VerifyRatesPair(p, iv);
    std::cout << "[" << FormatDouble(iv.t_lo) << ", " << FormatDouble(iv.t_hi)
              << "] J=" << IndexList(iv.support.j_set)
              << " K=" << IndexList(iv.support.k_set)
              << " slope=" << FormatDouble(iv.objective_slope)
              << " rates_lp=" << (ver.passed ? "ok" : "fail") << "\n";
    for (const std::string& v : ver.violations) spdlog::warn("{}", v);
  }
  std::cout << "interior_atom_mass "
            << FormatDouble(mclp::InteriorAtomMass(sol.primal)) << "\n";
  return kExitOk;
}

int RunConvert(const std::string& file, const std::string& output) {
  const mclp::ProblemInstance inst = mclp::ParseProblem(ReadFile(file));
  const auto* s = std::get_if<mclp::SclpData>(&inst);
  if (s == nullptr) throw std::runtime_error(file + ": not an SCLP instance");
  WriteOutput(output, mclp::SerializeProblem(mclp::SclpToMclp(*s)));
  return kExitOk;
}

int RunTrajectory(const std::string& problem, const std::string& solution,
                  int points, const std::string& output) {
  const mclp::ProblemData p = LoadProblem(problem);
  const mclp::SolutionFile sol = mclp::ParseSolution(ReadFile(solution));
  WriteOutput(output, mclp::EmitTrajectory(p, sol.primal, points));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  SetUpLogging();
  CLI::App app{"Solver for continuous linear programs over measures"};
  app.require_subcommand(1);

  std::string file, problem, solution, output;
  double tol = 1e-6;
  int max_n = 4096;
  int points = 100;

  auto* check = app.add_subcommand("check", "Feasibility and Slater margins");
  check->add_option("file", file, "Problem file")->required();

  auto* solve = app.add_subcommand("solve", "Solve to a certified gap");
  solve->add_option("file", file, "Problem file")->required();
  solve->add_option("--tol", tol, "Relative gap tolerance")
      ->check(CLI::PositiveNumber);
  solve->add_option("--max-n", max_n, "Largest partition size")
      ->check(CLI::PositiveNumber);
  solve->add_option("-o,--output", output, "Solution file");

  auto* eval = app.add_subcommand("eval", "Evaluate a solution");
  eval->add_option("problem", problem, "Problem file")->required();
  eval->add_option("solution", solution, "Solution file")->required();

  auto* structure =
      app.add_subcommand("structure", "Rate intervals and non-degeneracy");
  structure->add_option("problem", problem, "Problem file")->required();
  structure->add_option("solution", solution, "Solution file")->required();

  auto* convert =
      app.add_subcommand("convert-sclp", "Write the M-CLP extension of SCLP");
  convert->add_option("file", file, "SCLP problem file")->required();
  convert->add_option("-o,--output", output, "Output file");

  auto* trajectory =
      app.add_subcommand("trajectory", "CSV of U(t) and the slacks x(t)");
  trajectory->add_option("problem", problem, "Problem file")->required();
  trajectory->add_option("solution", solution, "Solution file")->required();
  trajectory->add_option("--points", points, "Grid points")
      ->check(CLI::Range(2, 1000000));
  trajectory->add_option("-o,--output", output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return RunCheck(file);
    if (*solve) return RunSolve(file, tol, max_n, output);
    if (*eval) return RunEval(problem, solution);
    if (*structure) return RunStructure(problem, solution);
    if (*convert) return RunConvert(file, output);
    if (*trajectory) return RunTrajectory(problem, solution, points, output);
  } catch (const mclp::Error& e) {
    spdlog::error("{}: {}", mclp::ErrorCodeName(e.code()), e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
