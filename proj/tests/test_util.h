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

// Shared helpers for the unit tests: seeded random matrices and states.

#ifndef DECOLAB_TESTS_TEST_UTIL_H_
#define DECOLAB_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <random>

#include <gtest/gtest.h>

#include "decolab/error.h"
#include "decolab/linalg.h"
#include "decolab/qsys.h"

// Expects `stmt` to throw decolab::Error carrying `errc`.
#define EXPECT_ERRC(stmt, errc)                                           \
  do {                                                                    \
    try {                                                                 \
      stmt;                                                               \
      ADD_FAILURE() << "no exception from " #stmt;                        \
    } catch (const ::decolab::Error& e_) {                                \
      EXPECT_EQ(e_.code(), errc) << e_.what();                            \
    }                                                                     \
  } while (0)

namespace decolab::testing {

inline Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

inline ComplexMatrix random_matrix(std::size_t dim, std::mt19937_64& rng) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = gaussian(rng);
  }
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  return hermitian_part(random_matrix(dim, rng));
}

// Unitary from Gram-Schmidt on a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  ComplexMatrix m = random_matrix(dim, rng);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      Complex dot = 0.0;
      for (std::size_t r = 0; r < dim; ++r) dot += std::conj(m(r, p)) * m(r, c);
      for (std::size_t r = 0; r < dim; ++r) m(r, c) -= dot * m(r, p);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(m(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) m(r, c) /= norm;
  }
  return m;
}

/// G G^dagger / Tr, optionally rank-limited by using `rank` columns of G.
inline DensityMatrix random_density(std::mt19937_64& rng, std::size_t rank = kStateDim) {
  ComplexMatrix g(kStateDim);
  for (std::size_t i = 0; i < kStateDim; ++i) {
    for (std::size_t j = 0; j < rank; ++j) g(i, j) = gaussian(rng);
  }
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return DensityMatrix(hermitian_part(rho));
}

inline PureState random_pure(std::mt19937_64& rng) {
  Amplitudes a;
  double norm = 0.0;
  for (auto& x : a) {
    x = gaussian(rng);
    norm += std::norm(x);
  }
  for (auto& x : a) x /= std::sqrt(norm);
  return PureState(a);
}

inline ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
inline ComplexMatrix pauli_y() {
  return ComplexMatrix(2, {0.0, Complex(0, -1), Complex(0, 1), 0.0});
}
inline ComplexMatrix pauli_z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

}  // namespace decolab::testing

#endif  // DECOLAB_TESTS_TEST_UTIL_H_
