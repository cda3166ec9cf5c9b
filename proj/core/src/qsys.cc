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

#include "decolab/qsys.h"

#include <cmath>
#include <string>

#include "decolab/error.h"

namespace decolab {
namespace {

constexpr unsigned bit_shift(int qubit) { return static_cast<unsigned>(kNumQubits) - qubit; }

void require_qubit(int qubit) {
  if (qubit < 1 || qubit > static_cast<int>(kNumQubits)) {
    throw Error(Errc::kBadIndex, "qubit index " + std::to_string(qubit) + " not in 1..3");
  }
}

void require_dim8(const ComplexMatrix& m) {
  if (m.dim() != kStateDim) {
    throw Error(Errc::kInvalidArgument, "expected an 8x8 matrix, got dim " + std::to_string(m.dim()));
  }
}

std::size_t permuted_index(std::size_t index, const QubitPermutation& perm) {
  std::size_t out = 0;
  for (int j = 1; j <= static_cast<int>(kNumQubits); ++j) {
    const std::size_t bit = (index >> bit_shift(perm[j - 1])) & 1U;
    out |= bit << bit_shift(j);
  }
  return out;
}

}  // namespace

PureState::PureState(const Amplitudes& amplitudes) : amps_(amplitudes) {
  double norm2 = 0.0;
  for (const auto& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(Errc::kNonFinite, "pure state has non-finite amplitudes");
    }
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > kPureNormTol) {
    throw Error(Errc::kInvalidArgument, "pure state squared norm is " + std::to_string(norm2));
  }
}

PureState PureState::basis(std::size_t index) {
  if (index >= kStateDim) throw Error(Errc::kBadIndex, "basis index out of range");
  Amplitudes a{};
  a[index] = 1.0;
  return PureState(a);
}

double PureState::norm() const {
  double norm2 = 0.0;
  for (const auto& a : amps_) norm2 += std::norm(a);
  return std::sqrt(norm2);
}

ComplexMatrix PureState::projector() const {
  ComplexMatrix m(kStateDim);
  for (std::size_t i = 0; i < kStateDim; ++i) {
    for (std::size_t j = 0; j < kStateDim; ++j) m(i, j) = amps_[i] * std::conj(amps_[j]);
  }
  return m;
}

Complex inner(const PureState& a, const PureState& b) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < kStateDim; ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

PureState make_ghz() {
  Amplitudes a{};
  a[0] = a[7] = 1.0 / std::sqrt(2.0);
  return PureState(a);
}

PureState make_w() {
  Amplitudes a{};
  a[1] = std::sqrt(2.0) / 2.0;
  a[2] = 0.5;
  a[4] = 0.5;
  return PureState(a);
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
  if (m_.dim() != kStateDim) {
    throw Error(Errc::kInvariantViolation,
                "density matrix must be 8x8, got dim " + std::to_string(m_.dim()));
  }
  if (!m_.all_finite()) throw Error(Errc::kInvariantViolation, "density matrix is not finite");
  const double herm = hermiticity_error(m_);
  if (herm > tol) {
    throw Error(Errc::kInvariantViolation, "density matrix not Hermitian: " + std::to_string(herm));
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw Error(Errc::kInvariantViolation, "density matrix trace is " + std::to_string(tr.real()));
  }
  const double min_eig = hermitian_eigen(hermitian_part(m_)).eigenvalues.back();
  if (min_eig < -tol) {
    throw Error(Errc::kInvariantViolation,
                "density matrix not PSD: min eigenvalue " + std::to_string(min_eig));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) { return DensityMatrix(psi.projector()); }

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(ComplexMatrix::identity(kStateDim) * Complex(1.0 / kStateDim));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int keep) {
  require_qubit(keep);
  require_dim8(m);
  const unsigned shift = bit_shift(keep);
  ComplexMatrix out(2);
  for (std::size_t i = 0; i < kStateDim; ++i) {
    for (std::size_t j = 0; j < kStateDim; ++j) {
      // The traced-out qubits must agree between row and column.
      const std::size_t mask = ~(std::size_t{1} << shift) & (kStateDim - 1);
      if ((i & mask) != (j & mask)) continue;
      out((i >> shift) & 1U, (j >> shift) & 1U) += m(i, j);
    }
  }
  return out;
}

ComplexMatrix partial_trace(const DensityMatrix& rho, int keep) {
  return partial_trace(rho.matrix(), keep);
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int qubit) {
  require_qubit(qubit);
  require_dim8(m);
  const std::size_t bit = std::size_t{1} << bit_shift(qubit);
  ComplexMatrix out(kStateDim);
  for (std::size_t i = 0; i < kStateDim; ++i) {
    for (std::size_t j = 0; j < kStateDim; ++j) {
      const std::size_t ti = (i & ~bit) | (j & bit);
      const std::size_t tj = (j & ~bit) | (i & bit);
      out(ti, tj) = m(i, j);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, int qubit) {
  return partial_transpose(rho.matrix(), qubit);
}

bool is_permutation(const QubitPermutation& perm) noexcept {
  std::array<bool, kNumQubits> seen{};
  for (int q : perm) {
    if (q < 1 || q > static_cast<int>(kNumQubits) || seen[q - 1]) return false;
    seen[q - 1] = true;
  }
  return true;
}

QubitPermutation inverse(const QubitPermutation& perm) {
  if (!is_permutation(perm)) throw Error(Errc::kBadPermutation, "not a bijection on {1,2,3}");
  QubitPermutation inv{};
  for (int j = 1; j <= static_cast<int>(kNumQubits); ++j) inv[perm[j - 1] - 1] = j;
  return inv;
}

ComplexMatrix permute_qubits(const ComplexMatrix& m, const QubitPermutation& perm) {
  if (!is_permutation(perm)) throw Error(Errc::kBadPermutation, "not a bijection on {1,2,3}");
  require_dim8(m);
  std::array<std::size_t, kStateDim> map{};
  for (std::size_t i = 0; i < kStateDim; ++i) map[i] = permuted_index(i, perm);
  ComplexMatrix out(kStateDim);
  for (std::size_t i = 0; i < kStateDim; ++i) {
    for (std::size_t j = 0; j < kStateDim; ++j) out(map[i], map[j]) = m(i, j);
  }
  return out;
}

DensityMatrix permute_qubits(const DensityMatrix& rho, const QubitPermutation& perm) {
  // A basis relabeling is a unitary similarity, so the invariants carry over.
  return DensityMatrix(permute_qubits(rho.matrix(), perm), DensityMatrix::Unchecked{});
}

BipartiteCut BipartiteCut::of(CutKind kind) {
  switch (kind) {
    case CutKind::k12_3: return {kind, {1, 2, 3}};
    case CutKind::k13_2: return {kind, {1, 3, 2}};
    case CutKind::k23_1: return {kind, {2, 3, 1}};
  }
  throw Error(Errc::kInvalidArgument, "unknown cut");
}

std::string_view cut_name(CutKind kind) {
  switch (kind) {
    case CutKind::k12_3: return "12|3";
    case CutKind::k13_2: return "13|2";
    case CutKind::k23_1: return "23|1";
  }
  return "?";
}

}  // namespace decolab
