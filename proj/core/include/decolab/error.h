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

#ifndef DECOLAB_ERROR_H_
#define DECOLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace decolab {

enum class Errc {
  kInvalidArgument,
  kNonFinite,
  kNotHermitian,
  kNoConvergence,
  kNotPsd,
  kBadIndex,
  kBadPermutation,
  kStepTooLarge,
  kInvariantViolation,
  kNotIsometry,
  kDegenerate,
  kBadConfig,
  kIoError,
  kRankTooHigh,
};

/// Stable name of an error kind, e.g. "StepTooLarge".
std::string_view errc_name(Errc code) noexcept;

/// The single exception type thrown by the library. The kind is carried in
/// `code()`; `what()` is prefixed with the kind name.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace decolab

#endif  // DECOLAB_ERROR_H_
