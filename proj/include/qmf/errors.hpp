// Copyright 2026 the qmf authors
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

#ifndef QMF_ERRORS_HPP
#define QMF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmf {

enum class ErrorCode {
  IncompatibleBranch,
  NonUnitLeadingCoefficient,
  DivisionByZeroSeries,
  InsufficientTruncation,
  IrrationalIndicialRoots,
  DuplicateRoots,
  ResonantRoot,
  NotAnIndicialRoot,
  CongruentRoots,
  NotTUnitarizableData,
  DivisibilityViolation,
  DuplicateExponents,
  RankDeficient,
  NoDeltaDivisibleCombination,
  DegenerateLeading,
  UnsupportedOrder,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

/// Exception carrying a stable error code; the code maps 1:1 onto the
/// C API status values and onto CLI diagnostics.
class DomainError : public std::runtime_error {
public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw DomainError(code, message);
}

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompatibleBranch: return "IncompatibleBranch";
    case ErrorCode::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorCode::DivisionByZeroSeries: return "DivisionByZeroSeries";
    case ErrorCode::InsufficientTruncation: return "InsufficientTruncation";
    case ErrorCode::IrrationalIndicialRoots: return "IrrationalIndicialRoots";
    case ErrorCode::DuplicateRoots: return "DuplicateRoots";
    case ErrorCode::ResonantRoot: return "ResonantRoot";
    case ErrorCode::NotAnIndicialRoot: return "NotAnIndicialRoot";
    case ErrorCode::CongruentRoots: return "CongruentRoots";
    case ErrorCode::NotTUnitarizableData: return "NotTUnitarizableData";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::DuplicateExponents: return "DuplicateExponents";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NoDeltaDivisibleCombination: return "NoDeltaDivisibleCombination";
    case ErrorCode::DegenerateLeading: return "DegenerateLeading";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace qmf

#endif
