// Copyright 2026 The chordalm Authors.
//
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

namespace chordalm {

enum class ErrorCode {
  kUnsupportedOrder,
  kDimensionMismatch,
  kZeroVector,
  kInvalidPoint,
  kUnknownLabel,
  kDuplicateLabel,
  kRankZero,
  kDependentContractionSet,
  kFieldMismatch,
  kNonSimpleGraph,
  kDualNotSimple,
  kBudgetExceeded,
  kNotAFlat,
  kNotProjectiveGuts,
  kNotModularGuts,
  kIncompatiblePairing,
  kGutsLeak,
  kPointCollision,
  kMalformedCertificate,
  kInvalidSeparation,
  kPreconditionFailed,
  kNoValidSplit,
  kInfeasibleUniverse,
  kUnknownCheck,
  kParseError,
  kInvalidArgument,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kInvalidPoint: return "InvalidPoint";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kRankZero: return "RankZero";
    case ErrorCode::kDependentContractionSet: return "DependentContractionSet";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kNonSimpleGraph: return "NonSimpleGraph";
    case ErrorCode::kDualNotSimple: return "DualNotSimple";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotAFlat: return "NotAFlat";
    case ErrorCode::kNotProjectiveGuts: return "NotProjectiveGuts";
    case ErrorCode::kNotModularGuts: return "NotModularGuts";
    case ErrorCode::kIncompatiblePairing: return "IncompatiblePairing";
    case ErrorCode::kGutsLeak: return "GutsLeak";
    case ErrorCode::kPointCollision: return "PointCollision";
    case ErrorCode::kMalformedCertificate: return "MalformedCertificate";
    case ErrorCode::kInvalidSeparation: return "InvalidSeparation";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kNoValidSplit: return "NoValidSplit";
    case ErrorCode::kInfeasibleUniverse: return "InfeasibleUniverse";
    case ErrorCode::kUnknownCheck: return "UnknownCheck";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the file reader; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                          ", column " +
                                          std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace chordalm
