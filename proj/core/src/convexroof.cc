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

#include "decolab/convexroof.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "decolab/error.h"
#include "decolab/parallel.h"

namespace decolab {
namespace {

constexpr double kInitialStep = 0.25;
constexpr double kMinStep = 1e-6;
// Strict-improvement margin; guards against accepting roundoff.
constexpr double kAcceptMargin = 1e-15;

struct RestartOutcome {
  double value = 0.0;
  Isometry v;
  bool converged = false;
};

Isometry random_isometry(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Isometry v(rows, cols);
  for (auto& z : v.data) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = Complex(re, im);
  }
  // Modified Gram-Schmidt, applied twice for orthogonality to roundoff.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        Complex dot = 0.0;
        for (std::size_t r = 0; r < rows; ++r) dot += std::conj(v(r, prev)) * v(r, c);
        for (std::size_t r = 0; r < rows; ++r) v(r, c) -= dot * v(r, prev);
      }
      double norm2 = 0.0;
      for (std::size_t r = 0; r < rows; ++r) norm2 += std::norm(v(r, c));
      const double inv = 1.0 / std::sqrt(norm2);
      for (std::size_t r = 0; r < rows; ++r) v(r, c) *= inv;
    }
  }
  return v;
}

// Rows of Phi = V * basis, where basis_j = sqrt(mu_j) e_j.
std::vector<Amplitudes> member_vectors(const Isometry& v, const std::vector<Amplitudes>& basis) {
  std::vector<Amplitudes> phi(v.rows);
  for (std::size_t i = 0; i < v.rows; ++i) {
    Amplitudes row{};
    for (std::size_t j = 0; j < v.cols; ++j) {
      const Complex vij = v(i, j);
      for (std::size_t k = 0; k < kStateDim; ++k) row[k] += vij * basis[j][k];
    }
    phi[i] = row;
  }
  return phi;
}

std::vector<Amplitudes> scaled_basis(const Support& support) {
  std::vector<Amplitudes> basis(support.rank());
  for (std::size_t j = 0; j < support.rank(); ++j) {
    const double scale = std::sqrt(support.weights[j]);
    for (std::size_t k = 0; k < kStateDim; ++k) basis[j][k] = scale * support.vectors[j][k];
  }
  return basis;
}

// The two one-parameter rotation families on a row pair:
//   kind 0: [[c, -s], [s, c]]       kind 1: [[c, -i s], [-i s, c]]
template <typename Row>
void rotate_pair(Row& a, Row& b, int kind, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex off = kind == 0 ? Complex(s, 0.0) : Complex(0.0, -s);
  const Complex off_upper = kind == 0 ? Complex(-s, 0.0) : Complex(0.0, -s);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Complex x = a[k];
    const Complex y = b[k];
    a[k] = c * x + off_upper * y;
    b[k] = off * x + c * y;
  }
}

class Descent {
 public:
  Descent(const std::vector<Amplitudes>& basis, Isometry v, int restart,
          const std::function<void(const DescentStep&)>& on_accept)
      : v_(std::move(v)), phi_(member_vectors(v_, basis)), cost_(phi_.size()),
        restart_(restart), on_accept_(on_accept) {
    for (std::size_t i = 0; i < phi_.size(); ++i) cost_[i] = weighted_c3(phi_[i]);
    value_ = total();
  }

  RestartOutcome run(int max_sweeps) {
    RestartOutcome out;
    const std::size_t m = phi_.size();
    double step = kInitialStep;
    for (int sweep = 0; sweep < max_sweeps && m > 1; ++sweep) {
      bool improved = false;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          for (int kind = 0; kind < 2; ++kind) improved |= line_search(i, j, kind, step);
        }
      }
      value_ = total();
      if (!improved) {
        step *= 0.5;
        if (step < kMinStep) {
          out.converged = true;
          break;
        }
      }
    }
    if (m <= 1) out.converged = true;
    out.value = total();
    out.v = std::move(v_);
    return out;
  }

 private:
  double total() const {
    double sum = 0.0;
    for (double c : cost_) sum += c;
    return sum;
  }

  // Tries +step then -step; while a direction improves the objective, keeps
  // going with a doubled step.
  bool line_search(std::size_t i, std::size_t j, int kind, double step) {
    for (double dir : {1.0, -1.0}) {
      double theta = dir * step;
      bool any = false;
      while (try_rotation(i, j, kind, theta)) {
        any = true;
        theta *= 2.0;
        if (std::abs(theta) > 1.0) break;
      }
      if (any) return true;
    }
    return false;
  }

  bool try_rotation(std::size_t i, std::size_t j, int kind, double theta) {
    Amplitudes a = phi_[i];
    Amplitudes b = phi_[j];
    rotate_pair(a, b, kind, theta);
    const double ca = weighted_c3(a);
    const double cb = weighted_c3(b);
    const double before = cost_[i] + cost_[j];
    if (!(ca + cb < before - kAcceptMargin)) return false;

    phi_[i] = a;
    phi_[j] = b;
    cost_[i] = ca;
    cost_[j] = cb;
    std::vector<Complex> vi(v_.cols);
    std::vector<Complex> vj(v_.cols);
    for (std::size_t c = 0; c < v_.cols; ++c) {
      vi[c] = v_(i, c);
      vj[c] = v_(j, c);
    }
    rotate_pair(vi, vj, kind, theta);
    for (std::size_t c = 0; c < v_.cols; ++c) {
      v_(i, c) = vi[c];
      v_(j, c) = vj[c];
    }
    value_ += ca + cb - before;
    if (on_accept_) on_accept_(DescentStep{restart_, value_, v_});
    return true;
  }

  Isometry v_;
  std::vector<Amplitudes> phi_;
  std::vector<double> cost_;
  double value_ = 0.0;
  int restart_;
  const std::function<void(const DescentStep&)>& on_accept_;
};

}  // namespace

Isometry Isometry::identity(std::size_t rows, std::size_t cols) {
  Isometry v(rows, cols);
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) v(k, k) = 1.0;
  return v;
}

double Isometry::isometry_error() const {
  double err = 0.0;
  for (std::size_t a = 0; a < cols; ++a) {
    for (std::size_t b = 0; b < cols; ++b) {
      Complex dot = 0.0;
      for (std::size_t r = 0; r < rows; ++r) dot += std::conj((*this)(r, a)) * (*this)(r, b);
      if (a == b) dot -= 1.0;
      err += std::norm(dot);
    }
  }
  return std::sqrt(err);
}

double Ensemble::total_probability() const {
  double sum = 0.0;
  for (const auto& m : members) sum += m.probability;
  return sum;
}

ComplexMatrix Ensemble::reconstruct() const {
  ComplexMatrix out(kStateDim);
  for (const auto& m : members) out += m.state.projector() * Complex(m.probability);
  return out;
}

double Ensemble::average_c3() const {
  double sum = 0.0;
  for (const auto& m : members) sum += m.probability * pure_c3(m.state);
  return sum;
}

Support support_of(const DensityMatrix& rho) {
  const EigenDecomposition eig = hermitian_eigen(rho.matrix());
  double max_abs = 0.0;
  for (double v : eig.eigenvalues) max_abs = std::max(max_abs, std::abs(v));
  const double cutoff = 1e-10 * max_abs;
  Support s;
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    if (eig.eigenvalues[k] <= cutoff) continue;
    s.weights.push_back(eig.eigenvalues[k]);
    Amplitudes vec{};
    for (std::size_t r = 0; r < kStateDim; ++r) vec[r] = eig.eigenvectors(r, k);
    s.vectors.push_back(vec);
  }
  return s;
}

Ensemble ensemble_from_isometry(const DensityMatrix& rho, const Isometry& v) {
  const Support support = support_of(rho);
  if (v.cols != support.rank() || v.rows < v.cols) {
    throw Error(Errc::kInvalidArgument,
                "isometry is " + std::to_string(v.rows) + "x" + std::to_string(v.cols) +
                    " but rho has rank " + std::to_string(support.rank()));
  }
  const double err = v.isometry_error();
  if (err > kIsometryTol) {
    throw Error(Errc::kNotIsometry, "||V^dagger V - I||_F = " + std::to_string(err));
  }
  Ensemble ensemble;
  for (const Amplitudes& phi : member_vectors(v, scaled_basis(support))) {
    double p = 0.0;
    for (const auto& a : phi) p += std::norm(a);
    if (p < kDropProbability) continue;
    Amplitudes psi = phi;
    const double inv = 1.0 / std::sqrt(p);
    for (auto& a : psi) a *= inv;
    ensemble.members.push_back({p, PureState(psi)});
  }
  return ensemble;
}

RoofResult roof_minimize(const DensityMatrix& rho, Family family, const RoofOptions& options) {
  const Support support = support_of(rho);
  const std::size_t rank = support.rank();
  if (rank == 0) throw Error(Errc::kDegenerate, "density matrix has rank 0");
  const std::size_t cardinality = options.cardinality.value_or(rank * rank);
  if (cardinality < rank) {
    throw Error(Errc::kInvalidArgument, "cardinality " + std::to_string(cardinality) +
                                            " is below the rank " + std::to_string(rank));
  }
  if (options.restarts < 1) throw Error(Errc::kInvalidArgument, "restarts must be >= 1");

  const std::vector<Amplitudes> basis = scaled_basis(support);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(options.restarts));
  parallel_for(outcomes.size(), options.threads, [&](std::size_t r) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    Isometry start = random_isometry(cardinality, rank, rng);
    Descent descent(basis, std::move(start), static_cast<int>(r), options.on_accept);
    outcomes[r] = descent.run(options.max_sweeps);
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].value < outcomes[best].value) best = r;
  }

  RoofResult result;
  result.best_isometry = outcomes[best].v;
  result.best_ensemble = ensemble_from_isometry(rho, result.best_isometry);
  result.value_raw = outcomes[best].value;
  result.value_normalized = result.value_raw * c3_normalization(family);
  result.restarts_used = options.restarts;
  result.best_restart = static_cast<int>(best);
  result.converged = outcomes[best].converged;
  return result;
}

}  // namespace decolab
