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

#include "decolab/separability.h"

#include <algorithm>

#include "decolab/linalg.h"

namespace decolab {

double PptReport::min_eigenvalue() const {
  return *std::min_element(per_cut_min_eigenvalue.begin(), per_cut_min_eigenvalue.end());
}

PptReport ppt_report(const DensityMatrix& rho) {
  PptReport report;
  for (int q = 1; q <= 3; ++q) {
    const ComplexMatrix pt = hermitian_part(partial_transpose(rho, q));
    report.per_cut_min_eigenvalue[q - 1] = hermitian_eigen(pt).eigenvalues.back();
  }
  report.npt = report.min_eigenvalue() < -kNptTol;
  return report;
}

}  // namespace decolab
