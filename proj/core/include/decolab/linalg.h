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

// Dense complex linear algebra sized for few-qubit operators (dimension 2, 4
// or 8). Matrices are stored row-major; all operations are value-semantic.

#ifndef DECOLAB_LINALG_H_
#define DECOLAB_LINALG_H_

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace decolab {

using Complex = std::complex<double>;

/// Tolerance on ||m - m^dagger||_F accepted as Hermitian.
inline constexpr double kHermitianTol = 1e-10;
/// Eigenvalues in [-kPsdClampTol, 0) are treated as exact zeros.
inline constexpr double kPsdClampTol = 1e-10;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major entries; throws kInvalidArgument on a size mismatch and
  /// kNonFinite if any entry is NaN or infinite.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Kronecker product; entry (i*b.dim+k, j*b.dim+l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||m - m^dagger||_F.
double hermiticity_error(const ComplexMatrix& m);

/// (m + m^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

struct EigenDecomposition {
  /// Descending; ties keep their original diagonal order.
  std::vector<double> eigenvalues;
  /// Column j is the eigenvector of eigenvalues[j].
  ComplexMatrix eigenvectors;
  int sweeps = 0;
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws kNotHermitian if ||m - m^dagger||_F > kHermitianTol and
/// kNoConvergence if the off-diagonal mass does not vanish within the sweep
/// cap.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m);

/// V diag(values) V^dagger.
ComplexMatrix reconstruct(const EigenDecomposition& eig);

/// Hermitian PSD square root. Eigenvalues in [-kPsdClampTol, 0) are clamped
/// to zero; anything more negative throws kNotPsd.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Number of eigenvalues with |lambda| > tol. The default tolerance is
/// 1e-10 * max|lambda|.
int numerical_rank(const ComplexMatrix& m, std::optional<double> tol = std::nullopt);

}  // namespace decolab

#endif  // DECOLAB_LINALG_H_
