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

#include "mclp/error.h"

#include <string>

namespace mclp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedProblem: return "MalformedProblem";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kTimeOutOfRange: return "TOutOfRange";
    case ErrorCode::kInfeasibleWitness: return "InfeasibleWitness";
    case ErrorCode::kNotEquidistant: return "NotEquidistant";
    case ErrorCode::kInfeasiblePrimal: return "InfeasiblePrimal";
    case ErrorCode::kInfeasibleDual: return "InfeasibleDual";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kInfeasibleDiscrete: return "InfeasibleDiscrete";
    case ErrorCode::kInfeasibleMeasure: return "InfeasibleMeasure";
    case ErrorCode::kNonMonotoneSlope: return "NonMonotoneSlope";
    case ErrorCode::kInfeasibleResult: return "InfeasibleResult";
    case ErrorCode::kAtomsPresent: return "AtomsPresent";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace mclp
