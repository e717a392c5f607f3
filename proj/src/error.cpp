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

#include "ntrulab/error.hpp"

namespace ntrulab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRankMismatch: return "RankMismatch";
    case ErrorCode::kInvalidRank: return "InvalidRank";
    case ErrorCode::kInvalidModulus: return "InvalidModulus";
    case ErrorCode::kCoefficientOverflow: return "CoefficientOverflow";
    case ErrorCode::kShapeTooLarge: return "ShapeTooLarge";
    case ErrorCode::kNotPrimeN: return "NotPrimeN";
    case ErrorCode::kGcdViolation: return "GcdViolation";
    case ErrorCode::kDecryptionBoundViolation: return "DecryptionBoundViolation";
    case ErrorCode::kDegenerateWeight: return "DegenerateWeight";
    case ErrorCode::kWeightTooLarge: return "WeightTooLarge";
    case ErrorCode::kUnsupportedModulus: return "UnsupportedModulus";
    case ErrorCode::kRetriesExhausted: return "RetriesExhausted";
    case ErrorCode::kPlaintextOutOfRange: return "PlaintextOutOfRange";
    case ErrorCode::kBadBlindingPolynomial: return "BadBlindingPolynomial";
    case ErrorCode::kInvalidCiphertext: return "InvalidCiphertext";
    case ErrorCode::kInvalidKey: return "InvalidKey";
    case ErrorCode::kInvalidShiftKey: return "InvalidShiftKey";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kCodecError: return "CodecError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kAdversaryContractViolation: return "AdversaryContractViolation";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ntrulab
