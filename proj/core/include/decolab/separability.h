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

#ifndef DECOLAB_SEPARABILITY_H_
#define DECOLAB_SEPARABILITY_H_

#include <array>

#include "decolab/qsys.h"

namespace decolab {

/// Minimum partial-transpose eigenvalues below -kNptTol count as negative.
inline constexpr double kNptTol = 1e-10;

/// Positive-partial-transpose diagnostics over the three single-qubit cuts.
/// A negative partial transpose certifies entanglement; a positive one
/// proves nothing for the 2x4 cuts, so no separability verdict is offered.
struct PptReport {
  /// Index q-1 holds the smallest eigenvalue of rho^{T_q}.
  std::array<double, 3> per_cut_min_eigenvalue{};
  bool npt = false;

  double min_eigenvalue() const;
};

PptReport ppt_report(const DensityMatrix& rho);

}  // namespace decolab

#endif  // DECOLAB_SEPARABILITY_H_
