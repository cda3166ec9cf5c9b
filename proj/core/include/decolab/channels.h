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

// Noise channels acting independently on each of the three qubits, the
// Markovian master equation they generate, and closed-form solutions of
// that equation for GHZ and W initial states.

#ifndef DECOLAB_CHANNELS_H_
#define DECOLAB_CHANNELS_H_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "decolab/linalg.h"
#include "decolab/qsys.h"

namespace decolab {

enum class ChannelKind { kPauliZ, kPauliX, kPauliY, kDepolarizing };

inline constexpr std::array<ChannelKind, 4> kAllChannels = {
    ChannelKind::kPauliZ, ChannelKind::kPauliX, ChannelKind::kPauliY, ChannelKind::kDepolarizing};

/// "pauli-z", "pauli-x", "pauli-y" or "depolarizing".
std::string_view channel_name(ChannelKind kind);
std::optional<ChannelKind> parse_channel(std::string_view name);

enum class InitialState { kGhz, kW };

inline constexpr std::array<InitialState, 2> kAllInitialStates = {InitialState::kGhz,
                                                                  InitialState::kW};

/// "ghz" or "w".
std::string_view state_name(InitialState state);
std::optional<InitialState> parse_state(std::string_view name);
PureState initial_pure_state(InitialState state);

/// Channel kind plus coupling constant k (inverse time, k > 0).
struct ChannelSpec {
  ChannelKind kind;
  double k;

  /// Throws kInvalidArgument unless k is finite and positive.
  ChannelSpec(ChannelKind kind, double k);
};

/// Jump operators sqrt(k) * sigma embedded on one qubit. Three operators for
/// a Pauli channel; nine (qubit-major, then x, y, z) for depolarizing.
struct LindbladSet {
  std::vector<ComplexMatrix> operators;
};

LindbladSet lindblad_ops(const ChannelSpec& spec);

/// sum_i (L_i rho L_i^dagger - 1/2 {L_i^dagger L_i, rho}). No coherent
/// Hamiltonian term: the channels are purely dissipative.
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const LindbladSet& ops);
ComplexMatrix lindblad_rhs(const DensityMatrix& rho, const LindbladSet& ops);

/// Upper bound on k * dt accepted by evolve_numeric.
inline constexpr double kMaxStepCoupling = 0.1;
/// Tolerance on the invariants of the integrated state.
inline constexpr double kNumericInvariantTol = 1e-6;

/// Fixed-step classical RK4 from time 0 to t (a shorter final step lands
/// exactly on t). The result is re-symmetrized and small negative
/// eigenvalues are clamped. Throws kStepTooLarge if k * dt > 0.1,
/// kInvalidArgument for t < 0 or dt <= 0, and kInvariantViolation if the
/// result is not a density matrix within 1e-6.
DensityMatrix evolve_numeric(const DensityMatrix& rho0, const ChannelSpec& spec, double t,
                             double dt);

/// Time-dependent scalars of the closed-form solutions, as functions of the
/// dimensionless time kt. Each is a signed sum of at most four decaying
/// exponentials with unit weights.
struct AnalyticCoefficients {
  double kt = 0.0;

  // GHZ under bit flip / bit-phase flip: diagonal weights of the even
  // (|000>, |111>) and odd-parity sectors, 1 + 3e^{-4kt} and 1 - e^{-4kt}.
  double ghz_flip_even = 0.0;
  double ghz_flip_odd = 0.0;
  // GHZ under bit-phase flip: the |000><111| coherence 3e^{-2kt} + e^{-6kt}
  // and the odd-sector anti-diagonal magnitude e^{-2kt} - e^{-6kt}.
  double ghz_y_outer = 0.0;
  double ghz_y_inner = 0.0;

  // GHZ under depolarizing noise: 1 + 3e^{-8kt}, 1 - e^{-8kt}, 4e^{-12kt}.
  double ghz_dep_even = 0.0;
  double ghz_dep_odd = 0.0;
  double ghz_dep_coherence = 0.0;

  // W under bit flip / bit-phase flip.
  //   w_flip[0] = 1 + e2 + e4 + e6      w_flip[1] = 1 + e2 - e4 - e6
  //   w_flip[2] = 1 - e2 - e4 + e6      w_flip[3] = 1 - e2 + e4 - e6
  //   w_flip_pop_{plus,minus} = 1 +- e6
  // with en = e^{-n kt}.
  std::array<double, 4> w_flip{};
  double w_flip_pop_plus = 0.0;
  double w_flip_pop_minus = 0.0;

  // W under depolarizing noise: same pattern with e4, e8, e12, plus the
  // coherences w_dep_coh_{plus,minus} = e8 +- e12.
  std::array<double, 4> w_dep{};
  double w_dep_pop_plus = 0.0;
  double w_dep_pop_minus = 0.0;
  double w_dep_coh_plus = 0.0;
  double w_dep_coh_minus = 0.0;
};

AnalyticCoefficients analytic_coefficients(double kt);

/// Closed-form rho(kt) for the given initial state and channel. Throws
/// kInvalidArgument for kt < 0.
DensityMatrix evolve_analytic(InitialState initial, ChannelKind channel, double kt);

/// The raw matrix behind evolve_analytic, without invariant checks.
ComplexMatrix analytic_matrix(InitialState initial, ChannelKind channel, double kt);

}  // namespace decolab

#endif  // DECOLAB_CHANNELS_H_
