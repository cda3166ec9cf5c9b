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

// Three-qubit concurrence: the pure-state value built from single-qubit
// marginal purities, and the computable lower bound tau3 assembled from
// bipartite concurrences over the three pair|single cuts.

#ifndef DECOLAB_MEASURES_H_
#define DECOLAB_MEASURES_H_

#include <array>
#include <span>
#include <utility>

#include "decolab/linalg.h"
#include "decolab/qsys.h"

namespace decolab {

/// sqrt((3 - Tr rho_1^2 - Tr rho_2^2 - Tr rho_3^2) / 3), unrenormalized.
double pure_c3(const PureState& psi);

/// ||phi||^2 * pure_c3(phi / ||phi||) for an unnormalized vector; zero for
/// the zero vector. This is the contribution of one ensemble member to the
/// average concurrence, without forming the normalized state.
double weighted_c3(std::span<const Complex, kStateDim> phi);

/// The SO(2) generator (sigma_y) and the six SO(4) generators
/// (L_kl)_mn = -i eps_klmn, enumerated (1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
struct GeneratorSet {
  ComplexMatrix l0;
  std::array<ComplexMatrix, 6> l12;
  std::array<std::pair<int, int>, 6> index_pairs;
};

const GeneratorSet& generators();

/// S_i = l12[i-1] (x) l0, a real symmetric 8x8 matrix of rank 4. i in 1..6.
const ComplexMatrix& spin_flip_operator(int i);

/// S_i rho'^* S_i where rho' is rho reordered so the paired qubits of `cut`
/// come first.
ComplexMatrix tilde_rho(const DensityMatrix& rho, CutKind cut, int i);

/// Eigenvalues of the product below this are treated as vanishing.
inline constexpr double kVanishingEigenvalue = 1e-12;

struct CutBreakdown {
  CutKind cut = CutKind::k12_3;
  /// max{0, l1 - l2 - l3 - l4} per generator.
  std::array<double, 6> terms{};
  /// The four largest square-rooted eigenvalues per generator, descending.
  std::array<std::array<double, 4>, 6> lambdas{};

  double sum_of_squares() const;
};

/// Per-generator bipartite concurrences for one cut. The spectrum of
/// rho * tilde_rho is taken from the Hermitian similar matrix
/// sqrt(rho) tilde_rho sqrt(rho).
CutBreakdown cut_terms(const DensityMatrix& rho, CutKind cut);

/// Which pure initial state sets the normalization scale.
enum class Family { kGhz, kW, kNone };

/// Raw tau3 and pure_c3 of the family's pure state, as evaluated by the
/// generator construction and by marginal purities respectively.
inline constexpr double kGhzRawTau3 = 1.0;
inline constexpr double kWRawTau3 = 0.91287092917527685576;  // sqrt(5/6)
inline constexpr double kGhzPureC3 = 0.70710678118654752440;  // 1/sqrt(2)
inline constexpr double kWPureC3 = 0.64549722436790281420;   // sqrt(5/12)

/// Factor that maps the family's pure-state raw tau3 to 1 (1 for kNone).
double tau3_normalization(Family family);
/// Factor that maps the family's pure-state pure_c3 to 1 (1 for kNone).
double c3_normalization(Family family);

struct Tau3Result {
  double raw = 0.0;
  double normalized = 0.0;
  double normalization_factor = 1.0;
  std::array<CutBreakdown, 3> per_cut{};
};

/// raw = sqrt(sum over cuts and generators of C^2 / 3); normalized =
/// raw * tau3_normalization(family).
Tau3Result tau3(const DensityMatrix& rho, Family family);

}  // namespace decolab

#endif  // DECOLAB_MEASURES_H_
