// Copyright 2026 The Authors.
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

#include "spikelab/error.hpp"

namespace spikelab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCompositeModulus: return "CompositeModulus";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kMismatchedModulus: return "MismatchedModulus";
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kZeroEntry: return "ZeroEntry";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kDependentTransversal: return "DependentTransversal";
    case ErrorCode::kNotInSignature: return "NotInSignature";
    case ErrorCode::kNoCircuitHyperplane: return "NoCircuitHyperplane";
    case ErrorCode::kMismatchedShape: return "MismatchedShape";
    case ErrorCode::kNoWitness: return "NoWitness";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInconclusive: return "Inconclusive";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

}  // namespace spikelab
