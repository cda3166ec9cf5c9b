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

#include "decolab/measures.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "decolab/error.h"

namespace decolab {
namespace {

// Sum of Tr(rho_k^2) over the three single-qubit marginals of |phi><phi|,
// for an unnormalized phi.
double marginal_purity_sum(std::span<const Complex, kStateDim> phi) {
  double total = 0.0;
  for (unsigned shift = 0; shift < kNumQubits; ++shift) {
    const std::size_t bit = std::size_t{1} << shift;
    double p0 = 0.0;
    double p1 = 0.0;
    Complex c01 = 0.0;
    for (std::size_t i = 0; i < kStateDim; ++i) {
      if (i & bit) continue;
      const Complex a0 = phi[i];
      const Complex a1 = phi[i | bit];
      p0 += std::norm(a0);
      p1 += std::norm(a1);
      c01 += a0 * std::conj(a1);
    }
    total += p0 * p0 + p1 * p1 + 2.0 * std::norm(c01);
  }
  return total;
}

int levi_civita(int a, int b, int c, int d) {
  const std::array<int, 4> idx = {a, b, c, d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
    }
  }
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) inversions += idx[i] > idx[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

GeneratorSet build_generators() {
  GeneratorSet g;
  g.l0 = ComplexMatrix(2);
  g.l0(0, 1) = Complex(0.0, -1.0);
  g.l0(1, 0) = Complex(0.0, 1.0);
  g.index_pairs = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [k, l] = g.index_pairs[i];
    ComplexMatrix lkl(4);
    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; n <= 4; ++n) {
        lkl(m - 1, n - 1) = Complex(0.0, -levi_civita(k, l, m, n));
      }
    }
    g.l12[i] = lkl;
  }
  return g;
}

void require_generator_index(int i) {
  if (i < 1 || i > 6) throw Error(Errc::kBadIndex, "generator index " + std::to_string(i));
}

}  // namespace

double weighted_c3(std::span<const Complex, kStateDim> phi) {
  double p = 0.0;
  for (const auto& a : phi) p += std::norm(a);
  if (p == 0.0) return 0.0;
  const double arg = (3.0 * p * p - marginal_purity_sum(phi)) / 3.0;
  return std::sqrt(std::max(arg, 0.0));
}

double pure_c3(const PureState& psi) { return weighted_c3(psi.amplitudes()); }

const GeneratorSet& generators() {
  static const GeneratorSet set = build_generators();
  return set;
}

const ComplexMatrix& spin_flip_operator(int i) {
  require_generator_index(i);
  static const std::array<ComplexMatrix, 6> ops = [] {
    std::array<ComplexMatrix, 6> out;
    const GeneratorSet& g = generators();
    for (std::size_t j = 0; j < 6; ++j) out[j] = kron(g.l12[j], g.l0);
    return out;
  }();
  return ops[i - 1];
}

ComplexMatrix tilde_rho(const DensityMatrix& rho, CutKind cut, int i) {
  const ComplexMatrix& s = spin_flip_operator(i);
  const DensityMatrix reordered = permute_qubits(rho, BipartiteCut::of(cut).permutation);
  return s * reordered.matrix().conj() * s;
}

double CutBreakdown::sum_of_squares() const {
  double sum = 0.0;
  for (double c : terms) sum += c * c;
  return sum;
}

CutBreakdown cut_terms(const DensityMatrix& rho, CutKind cut) {
  const ComplexMatrix reordered = permute_qubits(rho, BipartiteCut::of(cut).permutation).matrix();
  const ComplexMatrix root = psd_sqrt(reordered);
  const ComplexMatrix conj = reordered.conj();

  CutBreakdown out;
  out.cut = cut;
  for (int i = 1; i <= 6; ++i) {
    const ComplexMatrix& s = spin_flip_operator(i);
    const ComplexMatrix product = hermitian_part(root * (s * conj * s) * root);
    std::vector<double> mu = hermitian_eigen(product).eigenvalues;
    std::array<double, 4> lambda{};
    for (std::size_t k = 0; k < 4; ++k) {
      lambda[k] = mu[k] < kVanishingEigenvalue ? 0.0 : std::sqrt(mu[k]);
    }
    out.lambdas[i - 1] = lambda;
    out.terms[i - 1] = std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
  }
  return out;
}

double tau3_normalization(Family family) {
  switch (family) {
    case Family::kGhz: return 1.0 / kGhzRawTau3;
    case Family::kW: return 1.0 / kWRawTau3;
    case Family::kNone: return 1.0;
  }
  return 1.0;
}

double c3_normalization(Family family) {
  switch (family) {
    case Family::kGhz: return 1.0 / kGhzPureC3;
    case Family::kW: return 1.0 / kWPureC3;
    case Family::kNone: return 1.0;
  }
  return 1.0;
}

Tau3Result tau3(const DensityMatrix& rho, Family family) {
  Tau3Result out;
  double sum = 0.0;
  for (std::size_t c = 0; c < kAllCuts.size(); ++c) {
    out.per_cut[c] = cut_terms(rho, kAllCuts[c]);
    sum += out.per_cut[c].sum_of_squares();
  }
  out.raw = std::sqrt(sum / 3.0);
  out.normalization_factor = tau3_normalization(family);
  out.normalized = out.raw * out.normalization_factor;
  return out;
}

}  // namespace decolab
