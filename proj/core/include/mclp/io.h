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


#ifndef MCLP_IO_H_
#define MCLP_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "mclp/model.h"
#include "mclp/sclp_bridge.h"
#include "mclp/solver_driver.h"

namespace mclp {

// A problem file holds either kind of instance.
using ProblemInstance = std::variant<ProblemData, SclpData>;

// Throws Error(kParseError) on malformed JSON or wrong value types and
// Error(kValidationError) on inconsistent data; messages name the field,
// e.g. "A: row 2 length".
ProblemInstance ParseProblem(std::string_view text);

std::string SerializeProblem(const ProblemData& p);
std::string SerializeProblem(const SclpData& s);

struct SolutionFile {
  std::string status = "Optimal";
  MeasureSolution primal;
  std::optional<MeasureSolution> dual;  // dual time
  double objective = 0.0;
  double gap = 0.0;
  int n_final = 0;
  double slater_primal = 0.0;
  double slater_dual = 0.0;
};

SolutionFile SolutionFileFromReport(const SolveReport& report);

// Numbers are written in shortest round-trip form; non-finite numbers as the
// strings "inf", "-inf" and "nan".
std::string SerializeSolution(const SolutionFile& sol);

// Throws Error(kParseError) or Error(kValidationError); the measures are
// checked with ValidateMeasure.
SolutionFile ParseSolution(std::string_view text);

// CSV with header t,U_1..U_J,x_1..x_K. Rows at an even grid of `points`
// times on [0, T] merged with the partition and interior atom times, plus
// left-limit rows "0-", "s-" for each interior atom time s, and "T-". Values
// come from SlackAt and are printed with 17 significant digits. Throws
// Error(kDimensionMismatch) when sol does not match p and
// Error(kValidationError) when points < 2.
std::string EmitTrajectory(const ProblemData& p, const MeasureSolution& sol,
                           int points);

// %.17g formatting, independent of the locale.
std::string FormatDouble(double value);

}  // namespace mclp

#endif  // MCLP_IO_H_
