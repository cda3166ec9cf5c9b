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

// Three-qubit states and subsystem operations.
//
// Basis convention used everywhere in decolab: |q1 q2 q3> has index
// 4*q1 + 2*q2 + q3, i.e. qubit 1 is the most significant bit. Qubits are
// numbered 1..3 in every public interface.

#ifndef DECOLAB_QSYS_H_
#define DECOLAB_QSYS_H_

#include <array>
#include <cstddef>
#include <string_view>

#include "decolab/linalg.h"

namespace decolab {

inline constexpr std::size_t kNumQubits = 3;
inline constexpr std::size_t kStateDim = 8;
/// Tolerance for the DensityMatrix invariants (Hermitian, unit trace, PSD).
inline constexpr double kDensityTol = 1e-10;
inline constexpr double kPureNormTol = 1e-12;

using Amplitudes = std::array<Complex, kStateDim>;

/// New qubit j (1-based) is old qubit perm[j-1].
using QubitPermutation = std::array<int, kNumQubits>;

class PureState {
 public:
  /// Throws kInvalidArgument unless the squared norm is 1 within 1e-12.
  explicit PureState(const Amplitudes& amplitudes);

  static PureState basis(std::size_t index);

  const Amplitudes& amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t index) const { return amps_[index]; }
  double norm() const;
  /// |psi><psi|.
  ComplexMatrix projector() const;

 private:
  Amplitudes amps_;
};

/// <a|b>.
Complex inner(const PureState& a, const PureState& b);

/// (|000> + |111>) / sqrt(2).
PureState make_ghz();
/// (sqrt(2)|001> + |010> + |100>) / 2. Note the sqrt(2) weight on |001>.
PureState make_w();

/// An 8x8 Hermitian, unit-trace, positive semidefinite matrix. The
/// invariants are checked on construction, so any DensityMatrix value in the
/// program is known to be valid.
class DensityMatrix {
 public:
  /// Throws kInvariantViolation if `m` is not 8x8 or violates an invariant by
  /// more than `tol`.
  explicit DensityMatrix(ComplexMatrix m, double tol = kDensityTol);

  static DensityMatrix from_pure(const PureState& psi);
  /// I / 8.
  static DensityMatrix maximally_mixed();

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
  friend DensityMatrix permute_qubits(const DensityMatrix& rho, const QubitPermutation& perm);

  ComplexMatrix m_;
};

/// Reduced 2x2 matrix of qubit `keep` (1..3) of an 8x8 operator.
ComplexMatrix partial_trace(const ComplexMatrix& m, int keep);
ComplexMatrix partial_trace(const DensityMatrix& rho, int keep);

/// Transpose on the indices of `qubit` (1..3) only. The result is Hermitian
/// with unit trace but need not be PSD.
ComplexMatrix partial_transpose(const ComplexMatrix& m, int qubit);
ComplexMatrix partial_transpose(const DensityMatrix& rho, int qubit);

bool is_permutation(const QubitPermutation& perm) noexcept;
QubitPermutation inverse(const QubitPermutation& perm);

/// Relabels |q1 q2 q3> -> |q_perm(1) q_perm(2) q_perm(3)>. Throws
/// kBadPermutation if `perm` is not a bijection on {1,2,3}.
DensityMatrix permute_qubits(const DensityMatrix& rho, const QubitPermutation& perm);
ComplexMatrix permute_qubits(const ComplexMatrix& m, const QubitPermutation& perm);

enum class CutKind { k12_3, k13_2, k23_1 };

inline constexpr std::array<CutKind, 3> kAllCuts = {CutKind::k12_3, CutKind::k13_2,
                                                    CutKind::k23_1};

/// A pair|single grouping of the three qubits together with the permutation
/// that moves the paired qubits into the leading four-dimensional factor.
struct BipartiteCut {
  CutKind kind;
  QubitPermutation permutation;

  static BipartiteCut of(CutKind kind);
};

std::string_view cut_name(CutKind kind);

}  // namespace decolab

#endif  // DECOLAB_QSYS_H_
