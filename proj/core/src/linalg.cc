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

#include "decolab/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "decolab/error.h"

namespace decolab {
namespace {

constexpr int kMaxJacobiSweeps = 100;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::kInvalidArgument, "dimension mismatch: " + std::to_string(a.dim()) +
                                            " vs " + std::to_string(b.dim()));
  }
}

double off_diagonal_mass(const ComplexMatrix& a) {
  double off = 0.0;
  for (std::size_t p = 0; p < a.dim(); ++p) {
    for (std::size_t q = p + 1; q < a.dim(); ++q) off += std::norm(a(p, q));
  }
  return off;
}

// Zeroes a(p,q) with the unitary U = D(p,q) * R(p,q), where D removes the
// phase of a(p,q) and R is the real Jacobi rotation of the resulting real
// symmetric 2x2 block.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex e = std::conj(apq) / mag;  // e^{-i phi}
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * e * akq;
    a(k, q) = s * akp + c * e * akq;
  }
  const Complex ce = std::conj(e);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * ce * aqk;
    a(q, k) = s * apk + c * ce * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * e * vkq;
    v(k, q) = s * vkp + c * e * vkq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim * dim) {
    throw Error(Errc::kInvalidArgument, "expected " + std::to_string(dim * dim) +
                                            " entries, got " + std::to_string(data_.size()));
  }
  if (!all_finite()) throw Error(Errc::kNonFinite, "matrix has NaN or infinite entries");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex tr = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) tr += (*this)(i, i);
  return tr;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

double hermiticity_error(const ComplexMatrix& m) { return frobenius_distance(m, m.adjoint()); }

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
  const double herm_err = hermiticity_error(m);
  if (herm_err > kHermitianTol) {
    throw Error(Errc::kNotHermitian,
                "||m - m^dagger||_F = " + std::to_string(herm_err) + " exceeds tolerance");
  }
  const std::size_t n = m.dim();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();
  const double target = std::numeric_limits<double>::epsilon() * scale;

  int sweep = 0;
  for (;; ++sweep) {
    const double off = std::sqrt(off_diagonal_mass(a));
    if (off <= target) break;
    if (sweep == kMaxJacobiSweeps) {
      throw Error(Errc::kNoConvergence, "Jacobi iteration did not converge after " +
                                            std::to_string(sweep) + " sweeps");
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.eigenvalues.reserve(n);
  out.eigenvectors = ComplexMatrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues.push_back(a(src, src).real());
    for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, col) = v(row, src);
  }
  return out;
}

ComplexMatrix reconstruct(const EigenDecomposition& eig) {
  const std::size_t n = eig.eigenvectors.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = lambda * eig.eigenvectors(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.eigenvectors(j, k));
    }
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  EigenDecomposition eig = hermitian_eigen(m);
  double max_abs = 0.0;
  for (double lambda : eig.eigenvalues) max_abs = std::max(max_abs, std::abs(lambda));
  // Below this an eigenvalue is indistinguishable from roundoff, and its
  // square root would be far larger than the noise it came from.
  const double noise =
      static_cast<double>(m.dim()) * std::numeric_limits<double>::epsilon() * max_abs;
  for (double& lambda : eig.eigenvalues) {
    if (lambda < -kPsdClampTol) {
      throw Error(Errc::kNotPsd, "eigenvalue " + std::to_string(lambda) + " is negative");
    }
    lambda = lambda <= noise ? 0.0 : std::sqrt(lambda);
  }
  return hermitian_part(reconstruct(eig));
}

int numerical_rank(const ComplexMatrix& m, std::optional<double> tol) {
  const std::vector<double> values = hermitian_eigen(m).eigenvalues;
  double max_abs = 0.0;
  for (double v : values) max_abs = std::max(max_abs, std::abs(v));
  const double cutoff = tol.value_or(1e-10 * max_abs);
  return static_cast<int>(
      std::count_if(values.begin(), values.end(), [&](double v) { return std::abs(v) > cutoff; }));
}

}  // namespace decolab
