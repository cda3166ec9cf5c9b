// Copyright 2026 The decolab Authors.
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

#include "decolab/error.h"

namespace decolab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kNonFinite: return "NonFinite";
    case Errc::kNotHermitian: return "NotHermitian";
    case Errc::kNoConvergence: return "NoConvergence";
    case Errc::kNotPsd: return "NotPSD";
    case Errc::kBadIndex: return "BadIndex";
    case Errc::kBadPermutation: return "BadPermutation";
    case Errc::kStepTooLarge: return "StepTooLarge";
    case Errc::kInvariantViolation: return "InvariantViolation";
    case Errc::kNotIsometry: return "NotIsometry";
    case Errc::kDegenerate: return "Degenerate";
    case Errc::kBadConfig: return "BadConfig";
    case Errc::kIoError: return "IoError";
    case Errc::kRankTooHigh: return "RankTooHigh";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace decolab
