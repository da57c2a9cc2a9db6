// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The hyperetf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "hyperetf/error.hpp"

namespace hyperetf {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRejectDegree: return "RejectDegree";
    case ErrorCode::kRejectNotPrimitive: return "RejectNotPrimitive";
    case ErrorCode::kMixedFields: return "MixedFields";
    case ErrorCode::kBadDegreeDivision: return "BadDegreeDivision";
    case ErrorCode::kConductorMismatch: return "ConductorMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kConductorRange: return "ConductorRange";
    case ErrorCode::kNotBibd: return "NotBibd";
    case ErrorCode::kNotHyperoval: return "NotHyperoval";
    case ErrorCode::kOddOrder: return "OddOrder";
    case ErrorCode::kBadRowChoice: return "BadRowChoice";
    case ErrorCode::kNotResolvable: return "NotResolvable";
    case ErrorCode::kNotDecomposedForm: return "NotDecomposedForm";
    case ErrorCode::kNonconstantColumnSum: return "NonconstantColumnSum";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kUnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::kNotAffineForm: return "NotAffineForm";
    case ErrorCode::kBadHadamard: return "BadHadamard";
    case ErrorCode::kConditionViolated: return "ConditionViolated";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kSpecMismatch: return "SpecMismatch";
    case ErrorCode::kDegenerateN: return "DegenerateN";
    case ErrorCode::kNotPlusMinusOne: return "NotPlusMinusOne";
    case ErrorCode::kNotZeroSum: return "NotZeroSum";
    case ErrorCode::kNotDifferenceSet: return "NotDifferenceSet";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hyperetf
