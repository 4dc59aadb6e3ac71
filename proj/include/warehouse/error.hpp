// Copyright 2026 The Warehouse Solver Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace warehouse {

enum class ErrorCode {
  kNegativeBound,
  kLowerExceedsUpper,
  kWrongVectorLength,
  kWP3ShapeViolation,
  kPeriodOutOfRange,
  kWrongVariant,
  kInfeasible,
  kInvalidInstance,
  kNonIntegralData,
  kTerminalStockMismatch,
  kIndexOutOfRange,
  kDeltaOutOfRange,
  kEpsilonOutOfRange,
  kNoPositiveBounds,
  kNotAPath,
  kEmptyInput,
  kInvalidArgument,
  kParseError,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativeBound: return "NegativeBound";
    case ErrorCode::kLowerExceedsUpper: return "LowerExceedsUpper";
    case ErrorCode::kWrongVectorLength: return "WrongVectorLength";
    case ErrorCode::kWP3ShapeViolation: return "WP3ShapeViolation";
    case ErrorCode::kPeriodOutOfRange: return "PeriodOutOfRange";
    case ErrorCode::kWrongVariant: return "WrongVariant";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kNonIntegralData: return "NonIntegralData";
    case ErrorCode::kTerminalStockMismatch: return "TerminalStockMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::kEpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::kNoPositiveBounds: return "NoPositiveBounds";
    case ErrorCode::kNotAPath: return "NotAPath";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
// `period` is 1-based when the error concerns a specific period, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, int period = 0)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        period_(period) {}

  ErrorCode code() const { return code_; }
  int period() const { return period_; }

 private:
  ErrorCode code_;
  int period_;
};

}  // namespace warehouse
