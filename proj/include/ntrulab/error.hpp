/*
 * Copyright 2026 The ntrulab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ntrulab {

// Every failure the library reports carries one of these codes. The CLI maps
// them to exit statuses and prints the code name in its `error:` line.
enum class ErrorCode {
  kRankMismatch,
  kInvalidRank,
  kInvalidModulus,
  kCoefficientOverflow,
  kShapeTooLarge,
  kNotPrimeN,
  kGcdViolation,
  kDecryptionBoundViolation,
  kDegenerateWeight,
  kWeightTooLarge,
  kUnsupportedModulus,
  kRetriesExhausted,
  kPlaintextOutOfRange,
  kBadBlindingPolynomial,
  kInvalidCiphertext,
  kInvalidKey,
  kInvalidShiftKey,
  kInvalidPermutation,
  kCodecError,
  kParseError,
  kAdversaryContractViolation,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

inline std::ostream& operator<<(std::ostream& os, ErrorCode code) {
  return os << error_code_name(code);
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ntrulab
