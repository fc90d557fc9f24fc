// Copyright 2026 The phaseshift Authors
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

#ifndef PHASESHIFT_ERRORS_HPP
#define PHASESHIFT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace phaseshift {

/// Specific failure reasons raised by the library.
enum class ErrorCode {
  NotHermitian,
  TraceNotOne,
  NotPSD,
  NotNormalized,
  BadRank,
  TooFewQubits,
  IndexOutOfRange,
  IndicesEqual,
  WrongArity,
  DimensionMismatch,
  ZeroShots,
  SupportClipped,
  BadDimension,
  ParseError,
  VerificationFailed,
};

/// Coarse grouping used for process exit codes and C API status values.
enum class ErrorCategory { Parse = 1, Validation = 2, Range = 3, Verification = 4 };

constexpr ErrorCategory category_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
      return ErrorCategory::Parse;
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::IndicesEqual:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::TooFewQubits:
    case ErrorCode::BadRank:
    case ErrorCode::BadDimension:
    case ErrorCode::ZeroShots:
    case ErrorCode::WrongArity:
      return ErrorCategory::Range;
    case ErrorCode::VerificationFailed:
      return ErrorCategory::Verification;
    default:
      return ErrorCategory::Validation;
  }
}

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace phaseshift

#endif  // PHASESHIFT_ERRORS_HPP
