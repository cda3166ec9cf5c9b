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

// Numerical convex roof of the pure-state three-qubit concurrence.
//
// Every pure-state decomposition of rho with m members arises from an m x r
// isometry V acting on the r nonzero eigenpairs (mu_j, e_j) of rho:
//   |phi_i> = sum_j V_ij sqrt(mu_j) |e_j>,   p_i = <phi_i|phi_i>.
// The optimizer searches over V with Givens rotations on pairs of rows,
// which keep V an isometry exactly, so every intermediate ensemble is a
// valid decomposition of rho.

#ifndef DECOLAB_CONVEXROOF_H_
#define DECOLAB_CONVEXROOF_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "decolab/linalg.h"
#include "decolab/measures.h"
#include "decolab/qsys.h"

namespace decolab {

inline constexpr double kIsometryTol = 1e-8;
/// Ensemble members with smaller weight are dropped.
inline constexpr double kDropProbability = 1e-14;

/// Rectangular complex matrix, row-major.
struct Isometry {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> data;

  Isometry() = default;
  Isometry(std::size_t rows_in, std::size_t cols_in)
      : rows(rows_in), cols(cols_in), data(rows_in * cols_in) {}

  Complex& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  /// The first `cols` columns of the identity.
  static Isometry identity(std::size_t rows, std::size_t cols);
  /// ||V^dagger V - I||_F.
  double isometry_error() const;
};

struct EnsembleMember {
  double probability;
  PureState state;
};

struct Ensemble {
  std::vector<EnsembleMember> members;

  std::size_t cardinality() const noexcept { return members.size(); }
  double total_probability() const;
  /// sum_i p_i |psi_i><psi_i|.
  ComplexMatrix reconstruct() const;
  /// sum_i p_i pure_c3(psi_i).
  double average_c3() const;
};

/// The nonzero eigenpairs of rho (numerical_rank's default tolerance),
/// descending.
struct Support {
  std::vector<double> weights;
  std::vector<Amplitudes> vectors;

  std::size_t rank() const noexcept { return weights.size(); }
};

Support support_of(const DensityMatrix& rho);

/// Throws kInvalidArgument if v.cols differs from the rank of rho or
/// v.rows < v.cols, and kNotIsometry if ||V^dagger V - I||_F > 1e-8.
Ensemble ensemble_from_isometry(const DensityMatrix& rho, const Isometry& v);

struct DescentStep {
  int restart;
  double value;
  const Isometry& isometry;
};

struct RoofOptions {
  /// Ensemble size; defaults to rank^2.
  std::optional<std::size_t> cardinality;
  int restarts = 32;
  std::uint64_t seed = 0;
  /// Worker threads for restarts (0 = DECOLAB_THREADS / auto).
  unsigned threads = 0;
  /// Stop a restart after this many sweeps without reaching the minimum
  /// step size.
  int max_sweeps = 20000;
  /// Called after every accepted rotation. May be invoked concurrently from
  /// different restarts unless threads == 1.
  std::function<void(const DescentStep&)> on_accept;
};

struct RoofResult {
  double value_raw = 0.0;
  double value_normalized = 0.0;
  Ensemble best_ensemble;
  Isometry best_isometry;
  int restarts_used = 0;
  int best_restart = 0;
  bool converged = false;
};

/// Minimizes sum_i p_i pure_c3(psi_i) over decompositions of rho from
/// `restarts` random isometries, seeded by (seed, restart index). The best
/// restart wins; ties go to the lowest index. Throws kDegenerate for a
/// rank-0 input and kInvalidArgument for cardinality < rank or restarts < 1.
RoofResult roof_minimize(const DensityMatrix& rho, Family family, const RoofOptions& options = {});

}  // namespace decolab

#endif  // DECOLAB_CONVEXROOF_H_
