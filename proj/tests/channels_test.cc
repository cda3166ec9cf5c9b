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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "decolab/channels.h"
#include "test_util.h"

namespace decolab {
namespace {

using testing::pauli_x;
using testing::pauli_y;
using testing::pauli_z;

ComplexMatrix embed(const ComplexMatrix& sigma, int qubit) {
  const auto id = ComplexMatrix::identity(2);
  switch (qubit) {
    case 1: return kron(kron(sigma, id), id);
    case 2: return kron(kron(id, sigma), id);
    default: return kron(kron(id, id), sigma);
  }
}

struct PairCase {
  InitialState state;
  ChannelKind channel;
};

std::vector<PairCase> all_pairs() {
  std::vector<PairCase> out;
  for (auto s : kAllInitialStates) {
    for (auto c : kAllChannels) out.push_back({s, c});
  }
  return out;
}

std::string pair_name(const PairCase& p) {
  return std::string(state_name(p.state)) + "/" + std::string(channel_name(p.channel));
}

TEST(Names, RoundTrip) {
  for (auto c : kAllChannels) EXPECT_EQ(parse_channel(channel_name(c)), c);
  for (auto s : kAllInitialStates) EXPECT_EQ(parse_state(state_name(s)), s);
  EXPECT_FALSE(parse_channel("amplitude-damping").has_value());
  EXPECT_FALSE(parse_state("cluster").has_value());
}

TEST(ChannelSpec, RejectsNonPositiveCoupling) {
  EXPECT_ERRC(ChannelSpec(ChannelKind::kPauliZ, 0.0), Errc::kInvalidArgument);
  EXPECT_ERRC(ChannelSpec(ChannelKind::kPauliZ, -1.0), Errc::kInvalidArgument);
  EXPECT_ERRC(ChannelSpec(ChannelKind::kPauliZ, std::numeric_limits<double>::quiet_NaN()),
              Errc::kInvalidArgument);
}

TEST(LindbladOps, PauliZ) {
  const auto ops = lindblad_ops(ChannelSpec(ChannelKind::kPauliZ, 1.0)).operators;
  ASSERT_EQ(ops.size(), 3u);
  for (int q = 1; q <= 3; ++q) EXPECT_EQ(ops[q - 1], embed(pauli_z(), q));
}

TEST(LindbladOps, DepolarizingHasNine) {
  const auto ops = lindblad_ops(ChannelSpec(ChannelKind::kDepolarizing, 1.0)).operators;
  ASSERT_EQ(ops.size(), 9u);
  const ComplexMatrix paulis[] = {pauli_x(), pauli_y(), pauli_z()};
  for (int q = 1; q <= 3; ++q) {
    for (int a = 0; a < 3; ++a) EXPECT_EQ(ops[(q - 1) * 3 + a], embed(paulis[a], q));
  }
}

TEST(LindbladOps, ScaledBySqrtK) {
  const auto ops = lindblad_ops(ChannelSpec(ChannelKind::kPauliX, 4.0)).operators;
  ASSERT_EQ(ops.size(), 3u);
  for (int q = 1; q <= 3; ++q) {
    EXPECT_LT(frobenius_distance(ops[q - 1], embed(pauli_x(), q) * Complex(2.0)), 1e-15);
  }
}

TEST(LindbladRhs, MaximallyMixedIsFixed) {
  for (auto c : kAllChannels) {
    const auto d = lindblad_rhs(DensityMatrix::maximally_mixed(), lindblad_ops(ChannelSpec(c, 1.0)));
    EXPECT_LT(d.frobenius_norm(), 1e-15) << channel_name(c);
  }
}

TEST(LindbladRhs, GhzDephasingCoherenceRate) {
  const auto d = lindblad_rhs(DensityMatrix::from_pure(make_ghz()),
                              lindblad_ops(ChannelSpec(ChannelKind::kPauliZ, 1.0)));
  EXPECT_NEAR(d(0, 7).real(), -3.0, 1e-14);
  EXPECT_NEAR(d(0, 7).imag(), 0.0, 1e-14);
}

TEST(LindbladRhs, TracelessAndHermitian) {
  std::mt19937_64 rng(47);
  for (auto c : kAllChannels) {
    const auto d = lindblad_rhs(testing::random_density(rng), lindblad_ops(ChannelSpec(c, 0.7)));
    EXPECT_NEAR(std::abs(d.trace()), 0.0, 1e-14);
    EXPECT_LT(hermiticity_error(d), 1e-14);
  }
}

// The closed forms must solve the master equation: compare a centered
// difference of the analytic matrix with the generator applied to it.
TEST(AnalyticMatrix, SolvesMasterEquation) {
  const double h = 1e-5;
  for (const auto& p : all_pairs()) {
    const auto ops = lindblad_ops(ChannelSpec(p.channel, 1.0));
    for (double kt : {0.05, 0.4, 1.3}) {
      const auto plus = analytic_matrix(p.state, p.channel, kt + h);
      const auto minus = analytic_matrix(p.state, p.channel, kt - h);
      auto derivative = plus - minus;
      derivative *= Complex(1.0 / (2 * h));
      const auto rhs = lindblad_rhs(analytic_matrix(p.state, p.channel, kt), ops);
      EXPECT_LT(frobenius_distance(derivative, rhs), 1e-7) << pair_name(p) << " kt=" << kt;
    }
  }
}

TEST(AnalyticMatrix, InitialConditionIsPureProjector) {
  for (const auto& p : all_pairs()) {
    const auto rho = evolve_analytic(p.state, p.channel, 0.0);
    EXPECT_LT(frobenius_distance(rho.matrix(), initial_pure_state(p.state).projector()), 1e-15)
        << pair_name(p);
  }
}

TEST(AnalyticMatrix, ValidDensityMatricesAcrossTime) {
  for (const auto& p : all_pairs()) {
    for (double kt = 0.0; kt <= 5.0; kt += 0.05) {
      EXPECT_NO_THROW(evolve_analytic(p.state, p.channel, kt)) << pair_name(p) << " kt=" << kt;
    }
  }
}

TEST(AnalyticMatrix, GhzDephasingEntries) {
  const double kt = 0.37;
  const auto m = analytic_matrix(InitialState::kGhz, ChannelKind::kPauliZ, kt);
  EXPECT_DOUBLE_EQ(m(0, 0).real(), 0.5);
  EXPECT_DOUBLE_EQ(m(7, 7).real(), 0.5);
  EXPECT_NEAR(m(0, 7).real(), std::exp(-6 * kt) / 2, 1e-16);
  EXPECT_NEAR(m(7, 0).real(), std::exp(-6 * kt) / 2, 1e-16);
  EXPECT_NEAR(m.frobenius_norm() * m.frobenius_norm(), 0.5 + std::exp(-12 * kt) / 2, 1e-15);
}

TEST(AnalyticMatrix, WDephasingEntry) {
  const double kt = 0.21;
  const auto m = analytic_matrix(InitialState::kW, ChannelKind::kPauliZ, kt);
  EXPECT_NEAR(m(1, 2).real(), std::numbers::sqrt2 * std::exp(-4 * kt) / 4, 1e-16);
  EXPECT_NEAR(m(2, 4).real(), std::exp(-4 * kt) / 4, 1e-16);
}

TEST(AnalyticMatrix, DepolarizedGhzApproachesMaximallyMixed) {
  const auto m = analytic_matrix(InitialState::kGhz, ChannelKind::kDepolarizing, 40.0);
  EXPECT_LT(frobenius_distance(m, DensityMatrix::maximally_mixed().matrix()), 1e-15);
}

TEST(AnalyticMatrix, RejectsNegativeTime) {
  EXPECT_ERRC(analytic_matrix(InitialState::kGhz, ChannelKind::kPauliZ, -0.1),
              Errc::kInvalidArgument);
  EXPECT_ERRC(analytic_coefficients(-1.0), Errc::kInvalidArgument);
}

TEST(AnalyticCoefficients, BoundedForNonNegativeTime) {
  for (double kt = 0.0; kt <= 4.0; kt += 0.01) {
    const auto c = analytic_coefficients(kt);
    std::vector<double> all = {c.ghz_flip_even, c.ghz_flip_odd,   c.ghz_y_outer,
                               c.ghz_y_inner,   c.ghz_dep_even,   c.ghz_dep_odd,
                               c.ghz_dep_coherence, c.w_flip_pop_plus, c.w_flip_pop_minus,
                               c.w_dep_pop_plus, c.w_dep_pop_minus, c.w_dep_coh_plus,
                               c.w_dep_coh_minus};
    all.insert(all.end(), c.w_flip.begin(), c.w_flip.end());
    all.insert(all.end(), c.w_dep.begin(), c.w_dep.end());
    for (double v : all) {
      EXPECT_GE(v, -1e-15) << "kt=" << kt;
      EXPECT_LE(v, 4.0) << "kt=" << kt;
    }
  }
}

TEST(EvolveNumeric, ZeroTimeIsIdentity) {
  const auto rho0 = DensityMatrix::from_pure(make_w());
  const auto out = evolve_numeric(rho0, ChannelSpec(ChannelKind::kPauliY, 1.0), 0.0, 1e-3);
  EXPECT_EQ(out.matrix(), rho0.matrix());
}

TEST(EvolveNumeric, GhzDephasingMatchesClosedForm) {
  const auto out = evolve_numeric(DensityMatrix::from_pure(make_ghz()),
                                  ChannelSpec(ChannelKind::kPauliZ, 1.0), 0.5, 1e-3);
  EXPECT_LT(frobenius_distance(out.matrix(),
                               analytic_matrix(InitialState::kGhz, ChannelKind::kPauliZ, 0.5)),
            1e-8);
}

TEST(EvolveNumeric, WDepolarizingMatchesClosedForm) {
  const auto out = evolve_numeric(DensityMatrix::from_pure(make_w()),
                                  ChannelSpec(ChannelKind::kDepolarizing, 1.0), 0.3, 1e-3);
  EXPECT_LT(frobenius_distance(out.matrix(),
                               analytic_matrix(InitialState::kW, ChannelKind::kDepolarizing, 0.3)),
            1e-8);
}

TEST(EvolveNumeric, CouplingScalesTime) {
  const auto out = evolve_numeric(DensityMatrix::from_pure(make_ghz()),
                                  ChannelSpec(ChannelKind::kPauliY, 2.5), 0.2, 4e-4);
  EXPECT_LT(frobenius_distance(out.matrix(),
                               analytic_matrix(InitialState::kGhz, ChannelKind::kPauliY, 0.5)),
            1e-8);
}

TEST(EvolveNumeric, LandsExactlyOnNonMultipleTime) {
  const double t = 0.3337;
  const auto out = evolve_numeric(DensityMatrix::from_pure(make_w()),
                                  ChannelSpec(ChannelKind::kPauliX, 1.0), t, 5e-3);
  EXPECT_LT(frobenius_distance(out.matrix(),
                               analytic_matrix(InitialState::kW, ChannelKind::kPauliX, t)),
            1e-8);
}

TEST(EvolveNumeric, StepTooLarge) {
  const auto rho0 = DensityMatrix::from_pure(make_ghz());
  EXPECT_ERRC(evolve_numeric(rho0, ChannelSpec(ChannelKind::kPauliZ, 1.0), 1.0, 0.2),
              Errc::kStepTooLarge);
  EXPECT_ERRC(evolve_numeric(rho0, ChannelSpec(ChannelKind::kPauliZ, 4.0), 1.0, 0.03),
              Errc::kStepTooLarge);
  EXPECT_NO_THROW(evolve_numeric(rho0, ChannelSpec(ChannelKind::kPauliZ, 4.0), 0.1, 0.025));
}

TEST(EvolveNumeric, RejectsBadArguments) {
  const auto rho0 = DensityMatrix::from_pure(make_ghz());
  const ChannelSpec spec(ChannelKind::kPauliZ, 1.0);
  EXPECT_ERRC(evolve_numeric(rho0, spec, -1.0, 1e-3), Errc::kInvalidArgument);
  EXPECT_ERRC(evolve_numeric(rho0, spec, 1.0, 0.0), Errc::kInvalidArgument);
  EXPECT_ERRC(evolve_numeric(rho0, spec, 1.0, -1e-3), Errc::kInvalidArgument);
}

TEST(EvolveNumeric, RandomInitialStatesStayValid) {
  std::mt19937_64 rng(53);
  for (auto c : kAllChannels) {
    const auto rho0 = testing::random_density(rng, 2);
    const auto out = evolve_numeric(rho0, ChannelSpec(c, 1.0), 2.0, 1e-2);
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace decolab
