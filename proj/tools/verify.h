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

// The one-shot acceptance sweep. Each check is independent and reports a
// single pass/fail line; failures carry enough detail to find the culprit.

#ifndef DECOLAB_TOOLS_VERIFY_H_
#define DECOLAB_TOOLS_VERIFY_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "decolab/channels.h"
#include "decolab/linalg.h"

namespace decolab::cli {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Source of the closed-form matrices; swappable so a corrupted formula can
/// be fed through the sweep.
using AnalyticFn = std::function<ComplexMatrix(InitialState, ChannelKind, double)>;

struct VerifyOptions {
  double dt = 1e-3;
  int restarts = 32;
  std::uint64_t seed = 7;
  AnalyticFn analytic = analytic_matrix;
  /// Check ids to run; empty runs all of them.
  std::vector<int> only;
};

inline constexpr int kNumChecks = 13;

std::vector<CheckResult> run_acceptance(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

/// One "PASS"/"FAIL" line per check, followed by an indented detail line.
void print_results(std::ostream& out, const std::vector<CheckResult>& results);

/// Smallest kt in [lo, hi] where f changes sign, by bisection on a bracket.
double bisect_root(const std::function<double(double)>& f, double lo, double hi);

}  // namespace decolab::cli

#endif  // DECOLAB_TOOLS_VERIFY_H_
