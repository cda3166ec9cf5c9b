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

#include "decolab/channels.h"

#include <cmath>
#include <string>

#include "decolab/error.h"

namespace decolab {
namespace {

ComplexMatrix pauli(char axis) {
  ComplexMatrix s(2);
  switch (axis) {
    case 'x':
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 'y':
      s(0, 1) = Complex(0.0, -1.0);
      s(1, 0) = Complex(0.0, 1.0);
      break;
    default:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
  }
  return s;
}

// sigma on `qubit` (1..3), identity elsewhere.
ComplexMatrix embed(const ComplexMatrix& sigma, int qubit) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix out = qubit == 1 ? sigma : id;
  for (int q = 2; q <= 3; ++q) out = kron(out, q == qubit ? sigma : id);
  return out;
}

void set_sym(ComplexMatrix& m, std::size_t i, std::size_t j, double value) {
  m(i, j) = value;
  m(j, i) = value;
}

ComplexMatrix ghz_pauli_z(double kt) {
  ComplexMatrix m(kStateDim);
  m(0, 0) = 0.5;
  m(7, 7) = 0.5;
  set_sym(m, 0, 7, 0.5 * std::exp(-6.0 * kt));
  return m;
}

ComplexMatrix ghz_flip(const AnalyticCoefficients& c, bool bit_phase) {
  ComplexMatrix m(kStateDim);
  for (std::size_t i = 0; i < kStateDim; ++i) {
    const bool even = i == 0 || i == 7;
    m(i, i) = even ? c.ghz_flip_even : c.ghz_flip_odd;
    double anti = 0.0;
    if (!bit_phase) {
      anti = m(i, i).real();
    } else {
      anti = even ? c.ghz_y_outer : -c.ghz_y_inner;
    }
    m(i, 7 - i) = anti;
  }
  return m * Complex(1.0 / 8.0);
}

ComplexMatrix ghz_depolarizing(const AnalyticCoefficients& c) {
  ComplexMatrix m(kStateDim);
  for (std::size_t i = 0; i < kStateDim; ++i) {
    m(i, i) = (i == 0 || i == 7) ? c.ghz_dep_even : c.ghz_dep_odd;
  }
  set_sym(m, 0, 7, c.ghz_dep_coherence);
  return m * Complex(1.0 / 8.0);
}

ComplexMatrix w_pauli_z(double kt) {
  const double e = std::exp(-4.0 * kt);
  const double r2 = std::sqrt(2.0);
  ComplexMatrix m(kStateDim);
  m(1, 1) = 2.0;
  m(2, 2) = 1.0;
  m(4, 4) = 1.0;
  set_sym(m, 1, 2, r2 * e);
  set_sym(m, 1, 4, r2 * e);
  set_sym(m, 2, 4, e);
  return m * Complex(1.0 / 4.0);
}

// sign = +1 for bit flip, -1 for bit-phase flip.
ComplexMatrix w_flip(const AnalyticCoefficients& c, double sign) {
  const double r2 = std::sqrt(2.0);
  const auto& a = c.w_flip;
  ComplexMatrix m(kStateDim);
  m(0, 0) = 2.0 * a[1];
  m(1, 1) = 2.0 * a[0];
  m(2, 2) = 2.0 * c.w_flip_pop_plus;
  m(3, 3) = 2.0 * c.w_flip_pop_minus;
  m(4, 4) = 2.0 * c.w_flip_pop_plus;
  m(5, 5) = 2.0 * c.w_flip_pop_minus;
  m(6, 6) = 2.0 * a[3];
  m(7, 7) = 2.0 * a[2];

  set_sym(m, 0, 3, sign * r2 * a[1]);
  set_sym(m, 0, 5, sign * r2 * a[1]);
  set_sym(m, 0, 6, sign * a[1]);

  set_sym(m, 1, 2, r2 * a[0]);
  set_sym(m, 1, 4, r2 * a[0]);
  set_sym(m, 2, 4, a[0]);

  set_sym(m, 1, 7, sign * a[2]);
  set_sym(m, 2, 7, sign * r2 * a[2]);
  set_sym(m, 4, 7, sign * r2 * a[2]);

  set_sym(m, 3, 5, a[3]);
  set_sym(m, 3, 6, r2 * a[3]);
  set_sym(m, 5, 6, r2 * a[3]);
  return m * Complex(1.0 / 16.0);
}

ComplexMatrix w_depolarizing(const AnalyticCoefficients& c) {
  const double r2 = std::sqrt(2.0);
  const auto& a = c.w_dep;
  ComplexMatrix m(kStateDim);
  m(0, 0) = a[1];
  m(1, 1) = a[0];
  m(2, 2) = c.w_dep_pop_plus;
  m(3, 3) = c.w_dep_pop_minus;
  m(4, 4) = c.w_dep_pop_plus;
  m(5, 5) = c.w_dep_pop_minus;
  m(6, 6) = a[3];
  m(7, 7) = a[2];

  set_sym(m, 1, 2, r2 * c.w_dep_coh_plus);
  set_sym(m, 1, 4, r2 * c.w_dep_coh_plus);
  set_sym(m, 2, 4, c.w_dep_coh_plus);

  set_sym(m, 3, 5, c.w_dep_coh_minus);
  set_sym(m, 3, 6, r2 * c.w_dep_coh_minus);
  set_sym(m, 5, 6, r2 * c.w_dep_coh_minus);
  return m * Complex(1.0 / 8.0);
}

// {1 + a + b + c, 1 + a - b - c, 1 - a - b + c, 1 - a + b - c}
std::array<double, 4> four_sign_pattern(double a, double b, double c) {
  return {1.0 + a + b + c, 1.0 + a - b - c, 1.0 - a - b + c, 1.0 - a + b - c};
}

void require_kt(double kt) {
  if (!(kt >= 0.0) || !std::isfinite(kt)) {
    throw Error(Errc::kInvalidArgument, "kt must be finite and >= 0, got " + std::to_string(kt));
  }
}

}  // namespace

std::string_view channel_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kPauliZ: return "pauli-z";
    case ChannelKind::kPauliX: return "pauli-x";
    case ChannelKind::kPauliY: return "pauli-y";
    case ChannelKind::kDepolarizing: return "depolarizing";
  }
  return "?";
}

std::optional<ChannelKind> parse_channel(std::string_view name) {
  for (ChannelKind kind : kAllChannels) {
    if (channel_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view state_name(InitialState state) {
  return state == InitialState::kGhz ? "ghz" : "w";
}

std::optional<InitialState> parse_state(std::string_view name) {
  if (name == "ghz") return InitialState::kGhz;
  if (name == "w") return InitialState::kW;
  return std::nullopt;
}

PureState initial_pure_state(InitialState state) {
  return state == InitialState::kGhz ? make_ghz() : make_w();
}

ChannelSpec::ChannelSpec(ChannelKind kind_in, double k_in) : kind(kind_in), k(k_in) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(Errc::kInvalidArgument, "coupling k must be positive, got " + std::to_string(k));
  }
}

LindbladSet lindblad_ops(const ChannelSpec& spec) {
  std::string axes;
  switch (spec.kind) {
    case ChannelKind::kPauliZ: axes = "z"; break;
    case ChannelKind::kPauliX: axes = "x"; break;
    case ChannelKind::kPauliY: axes = "y"; break;
    case ChannelKind::kDepolarizing: axes = "xyz"; break;
  }
  const Complex scale = std::sqrt(spec.k);
  LindbladSet set;
  for (int qubit = 1; qubit <= 3; ++qubit) {
    for (char axis : axes) set.operators.push_back(embed(pauli(axis), qubit) * scale);
  }
  return set;
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const LindbladSet& ops) {
  ComplexMatrix out(rho.dim());
  for (const ComplexMatrix& l : ops.operators) {
    const ComplexMatrix ldag = l.adjoint();
    const ComplexMatrix ldl = ldag * l;
    out += l * rho * ldag;
    out -= Complex(0.5) * (ldl * rho + rho * ldl);
  }
  return out;
}

ComplexMatrix lindblad_rhs(const DensityMatrix& rho, const LindbladSet& ops) {
  return lindblad_rhs(rho.matrix(), ops);
}

DensityMatrix evolve_numeric(const DensityMatrix& rho0, const ChannelSpec& spec, double t,
                             double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error(Errc::kInvalidArgument, "step dt must be positive, got " + std::to_string(dt));
  }
  if (spec.k * dt > kMaxStepCoupling) {
    throw Error(Errc::kStepTooLarge, "k*dt = " + std::to_string(spec.k * dt) + " exceeds " +
                                         std::to_string(kMaxStepCoupling));
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(Errc::kInvalidArgument, "time t must be >= 0, got " + std::to_string(t));
  }
  if (t == 0.0) return rho0;

  const LindbladSet ops = lindblad_ops(spec);
  const auto step = [&ops](const ComplexMatrix& y, double h) {
    const ComplexMatrix k1 = lindblad_rhs(y, ops);
    const ComplexMatrix k2 = lindblad_rhs(y + Complex(h / 2) * k1, ops);
    const ComplexMatrix k3 = lindblad_rhs(y + Complex(h / 2) * k2, ops);
    const ComplexMatrix k4 = lindblad_rhs(y + Complex(h) * k3, ops);
    return y + Complex(h / 6) * (k1 + Complex(2.0) * k2 + Complex(2.0) * k3 + k4);
  };

  const auto full_steps = static_cast<long>(std::floor(t / dt));
  ComplexMatrix y = rho0.matrix();
  for (long i = 0; i < full_steps; ++i) y = step(y, dt);
  const double rest = t - static_cast<double>(full_steps) * dt;
  if (rest > 1e-12 * dt) y = step(y, rest);

  y = hermitian_part(y);
  EigenDecomposition eig = hermitian_eigen(y);
  if (eig.eigenvalues.back() < 0.0) {
    for (double& lambda : eig.eigenvalues) {
      if (lambda < 0.0 && lambda >= -kPsdClampTol) lambda = 0.0;
    }
    y = hermitian_part(reconstruct(eig));
  }
  return DensityMatrix(std::move(y), kNumericInvariantTol);
}

AnalyticCoefficients analytic_coefficients(double kt) {
  require_kt(kt);
  const auto e = [kt](double n) { return std::exp(-n * kt); };
  AnalyticCoefficients c;
  c.kt = kt;
  c.ghz_flip_even = 1.0 + 3.0 * e(4);
  c.ghz_flip_odd = 1.0 - e(4);
  c.ghz_y_outer = 3.0 * e(2) + e(6);
  c.ghz_y_inner = e(2) - e(6);
  c.ghz_dep_even = 1.0 + 3.0 * e(8);
  c.ghz_dep_odd = 1.0 - e(8);
  c.ghz_dep_coherence = 4.0 * e(12);
  c.w_flip = four_sign_pattern(e(2), e(4), e(6));
  c.w_flip_pop_plus = 1.0 + e(6);
  c.w_flip_pop_minus = 1.0 - e(6);
  c.w_dep = four_sign_pattern(e(4), e(8), e(12));
  c.w_dep_pop_plus = 1.0 + e(12);
  c.w_dep_pop_minus = 1.0 - e(12);
  c.w_dep_coh_plus = e(8) + e(12);
  c.w_dep_coh_minus = e(8) - e(12);
  return c;
}

ComplexMatrix analytic_matrix(InitialState initial, ChannelKind channel, double kt) {
  const AnalyticCoefficients c = analytic_coefficients(kt);
  if (initial == InitialState::kGhz) {
    switch (channel) {
      case ChannelKind::kPauliZ: return ghz_pauli_z(kt);
      case ChannelKind::kPauliX: return ghz_flip(c, false);
      case ChannelKind::kPauliY: return ghz_flip(c, true);
      case ChannelKind::kDepolarizing: return ghz_depolarizing(c);
    }
  } else {
    switch (channel) {
      case ChannelKind::kPauliZ: return w_pauli_z(kt);
      case ChannelKind::kPauliX: return w_flip(c, +1.0);
      case ChannelKind::kPauliY: return w_flip(c, -1.0);
      case ChannelKind::kDepolarizing: return w_depolarizing(c);
    }
  }
  throw Error(Errc::kInvalidArgument, "unknown state/channel pair");
}

DensityMatrix evolve_analytic(InitialState initial, ChannelKind channel, double kt) {
  return DensityMatrix(analytic_matrix(initial, channel, kt));
}

}  // namespace decolab
