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
#include <functional>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "decolab/channels.h"
#include "decolab/measures.h"
#include "test_util.h"

namespace decolab {
namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((f(mid) > 0.0) == (f(lo) > 0.0) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double ghz_y_closed(double kt) {
  const double x = std::exp(-2 * kt);
  return std::max(0.0, 0.25 * (3 * x + x * x + x * x * x - 1));
}

double ghz_dep_closed(double kt) {
  const double u = std::exp(-4 * kt);
  return std::max(0.0, 0.25 * (4 * u * u * u + u * u - 1));
}

double normalized(InitialState s, ChannelKind c, double kt) {
  return tau3(evolve_analytic(s, c, kt), s == InitialState::kGhz ? Family::kGhz : Family::kW)
      .normalized;
}

TEST(PureC3, Ghz) { EXPECT_NEAR(pure_c3(make_ghz()), 1.0 / std::numbers::sqrt2, 1e-15); }

TEST(PureC3, ProductState) { EXPECT_NEAR(pure_c3(PureState::basis(5)), 0.0, 1e-15); }

TEST(PureC3, WFromMarginalPurities) {
  // Marginals diag(3/4, 1/4), diag(3/4, 1/4), diag(1/2, 1/2): purities
  // 5/8, 5/8, 1/2, so (3 - 7/4) / 3 = 5/12.
  EXPECT_NEAR(pure_c3(make_w()), std::sqrt(5.0 / 12.0), 1e-15);
  EXPECT_NEAR(kWPureC3, std::sqrt(5.0 / 12.0), 1e-16);
}

TEST(WeightedC3, MatchesPureC3AndScalesWithNormSquared) {
  std::mt19937_64 rng(59);
  const PureState psi = testing::random_pure(rng);
  Amplitudes a = psi.amplitudes();
  EXPECT_NEAR(weighted_c3(a), pure_c3(psi), 1e-14);
  for (auto& x : a) x *= 0.5;
  EXPECT_NEAR(weighted_c3(a), 0.25 * pure_c3(psi), 1e-14);
  EXPECT_EQ(weighted_c3(Amplitudes{}), 0.0);
}

TEST(Generators, SigmaY) {
  const auto& l0 = generators().l0;
  EXPECT_EQ(l0(0, 1), Complex(0, -1));
  EXPECT_EQ(l0(1, 0), Complex(0, 1));
  EXPECT_EQ(l0(0, 0), Complex(0, 0));
}

TEST(Generators, L12Entries) {
  const auto& l12 = generators().l12[0];
  EXPECT_EQ(generators().index_pairs[0], (std::pair<int, int>{1, 2}));
  for (std::size_t m = 0; m < 4; ++m) {
    for (std::size_t n = 0; n < 4; ++n) {
      Complex expected = 0.0;
      if (m == 2 && n == 3) expected = Complex(0, -1);
      if (m == 3 && n == 2) expected = Complex(0, 1);
      EXPECT_EQ(l12(m, n), expected) << m << "," << n;
    }
  }
}

TEST(Generators, HermitianImaginaryRankTwo) {
  for (const auto& l : generators().l12) {
    EXPECT_LT(hermiticity_error(l), 1e-16);
    for (Complex z : l.entries()) EXPECT_EQ(z.real(), 0.0);
    EXPECT_EQ(numerical_rank(l), 2);
    const auto sq = l * l;
    for (std::size_t m = 0; m < 4; ++m) {
      for (std::size_t n = 0; n < 4; ++n) {
        if (m != n) {
          EXPECT_EQ(sq(m, n), Complex(0.0, 0.0));
        }
      }
    }
    EXPECT_LT(frobenius_distance(sq * sq, sq), 1e-15);
    EXPECT_NEAR(sq.trace().real(), 2.0, 1e-15);
  }
}

TEST(SpinFlip, RealSymmetricRankFour) {
  for (int i = 1; i <= 6; ++i) {
    const auto& s = spin_flip_operator(i);
    ASSERT_EQ(s.dim(), 8u);
    for (Complex z : s.entries()) EXPECT_EQ(z.imag(), 0.0);
    EXPECT_EQ(s, s.transpose());
    EXPECT_EQ(numerical_rank(s), 4);
  }
  EXPECT_ERRC(spin_flip_operator(0), Errc::kBadIndex);
  EXPECT_ERRC(spin_flip_operator(7), Errc::kBadIndex);
}

TEST(TildeRho, MaximallyMixed) {
  const auto rho = DensityMatrix::maximally_mixed();
  for (CutKind cut : kAllCuts) {
    for (int i = 1; i <= 6; ++i) {
      const auto& s = spin_flip_operator(i);
      auto expected = s * s;
      expected *= Complex(1.0 / 8.0);
      EXPECT_LT(frobenius_distance(tilde_rho(rho, cut, i), expected), 1e-16);
    }
  }
}

TEST(TildeRho, RankAndTraceBounds) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = testing::random_density(rng);
    for (CutKind cut : kAllCuts) {
      for (int i = 1; i <= 6; ++i) {
        const auto t = tilde_rho(rho, cut, i);
        EXPECT_LE(numerical_rank(t), 4);
        EXPECT_GE(t.trace().real(), -1e-15);
        EXPECT_LE(t.trace().real(), 1.0 + 1e-15);
      }
    }
  }
}

TEST(CutTerms, ProductStateVanishes) {
  const auto rho = DensityMatrix::from_pure(PureState::basis(0));
  for (CutKind cut : kAllCuts) {
    for (double t : cut_terms(rho, cut).terms) EXPECT_EQ(t, 0.0);
  }
}

TEST(CutTerms, GhzSumOfSquaresIsOne) {
  const auto rho = DensityMatrix::from_pure(make_ghz());
  for (CutKind cut : kAllCuts) EXPECT_NEAR(cut_terms(rho, cut).sum_of_squares(), 1.0, 1e-12);
}

TEST(CutTerms, DephasedGhzSumOfSquares) {
  for (double kt : {0.1, 0.4, 0.9}) {
    const auto rho = evolve_analytic(InitialState::kGhz, ChannelKind::kPauliZ, kt);
    for (CutKind cut : kAllCuts) {
      EXPECT_NEAR(cut_terms(rho, cut).sum_of_squares(), std::exp(-12 * kt), 1e-12)
          << cut_name(cut) << " kt=" << kt;
    }
  }
}

TEST(CutTerms, LambdasNonNegativeAndDescending) {
  std::mt19937_64 rng(67);
  const auto rho = testing::random_density(rng, 3);
  for (CutKind cut : kAllCuts) {
    const auto b = cut_terms(rho, cut);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_GE(b.lambdas[i][j], 0.0);
        if (j > 0) {
          EXPECT_GE(b.lambdas[i][j - 1], b.lambdas[i][j]);
        }
      }
      const auto& l = b.lambdas[i];
      EXPECT_DOUBLE_EQ(b.terms[i], std::max(0.0, l[0] - l[1] - l[2] - l[3]));
    }
  }
}

TEST(Tau3, PureStateAnchorsMatchHardCodedScales) {
  EXPECT_NEAR(tau3(DensityMatrix::from_pure(make_ghz()), Family::kNone).raw, kGhzRawTau3, 1e-12);
  EXPECT_NEAR(tau3(DensityMatrix::from_pure(make_w()), Family::kNone).raw, kWRawTau3, 1e-12);
  EXPECT_NEAR(tau3(DensityMatrix::from_pure(make_ghz()), Family::kGhz).normalized, 1.0, 1e-12);
  EXPECT_NEAR(tau3(DensityMatrix::from_pure(make_w()), Family::kW).normalized, 1.0, 1e-12);
}

TEST(Tau3, PureStatesScaleWithConcurrence) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState psi = testing::random_pure(rng);
    EXPECT_NEAR(tau3(DensityMatrix::from_pure(psi), Family::kNone).raw,
                std::numbers::sqrt2 * pure_c3(psi), 1e-9);
  }
}

TEST(Tau3, MaximallyMixedIsZero) {
  EXPECT_EQ(tau3(DensityMatrix::maximally_mixed(), Family::kGhz).raw, 0.0);
}

TEST(Tau3, InvariantUnderQubitPermutation) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 4; ++trial) {
    const auto rho = testing::random_density(rng, 2);
    const double base = tau3(rho, Family::kNone).raw;
    for (QubitPermutation p : {QubitPermutation{2, 1, 3}, QubitPermutation{3, 1, 2},
                               QubitPermutation{1, 3, 2}}) {
      EXPECT_NEAR(tau3(permute_qubits(rho, p), Family::kNone).raw, base, 1e-10);
    }
  }
}

TEST(Tau3, ClosedForms) {
  for (double kt = 0.0; kt <= 2.0; kt += 0.0625) {
    EXPECT_NEAR(normalized(InitialState::kGhz, ChannelKind::kPauliZ, kt), std::exp(-6 * kt), 1e-10);
    EXPECT_NEAR(normalized(InitialState::kGhz, ChannelKind::kPauliX, kt), std::exp(-4 * kt), 1e-10);
    EXPECT_NEAR(normalized(InitialState::kGhz, ChannelKind::kPauliY, kt), ghz_y_closed(kt), 1e-9);
    EXPECT_NEAR(normalized(InitialState::kGhz, ChannelKind::kDepolarizing, kt), ghz_dep_closed(kt),
                1e-9);
    EXPECT_NEAR(normalized(InitialState::kW, ChannelKind::kPauliZ, kt), std::exp(-4 * kt), 1e-10);
  }
}

TEST(Tau3, FiniteTimeDeathAtBisectedRoots) {
  const double root_y = bisect([](double kt) { return std::exp(-2 * kt) * 3 + std::exp(-4 * kt) +
                                                      std::exp(-6 * kt) - 1; },
                               0.0, 3.0);
  const double root_d = bisect(
      [](double kt) { return 4 * std::exp(-12 * kt) + std::exp(-8 * kt) - 1; }, 0.0, 3.0);
  EXPECT_NEAR(root_y, 0.6093778634358764, 1e-12);
  EXPECT_NEAR(root_d, 0.1464352968150707, 1e-12);
  EXPECT_GT(normalized(InitialState::kGhz, ChannelKind::kPauliY, root_y * 0.99), 1e-4);
  EXPECT_EQ(normalized(InitialState::kGhz, ChannelKind::kPauliY, root_y * 1.01), 0.0);
  EXPECT_GT(normalized(InitialState::kGhz, ChannelKind::kDepolarizing, root_d * 0.99), 1e-4);
  EXPECT_EQ(normalized(InitialState::kGhz, ChannelKind::kDepolarizing, root_d * 1.01), 0.0);
}

TEST(Tau3, WFlipPairCoincides) {
  for (double kt = 0.0; kt <= 1.5; kt += 0.03) {
    const double x = tau3(evolve_analytic(InitialState::kW, ChannelKind::kPauliX, kt), Family::kW).raw;
    const double y = tau3(evolve_analytic(InitialState::kW, ChannelKind::kPauliY, kt), Family::kW).raw;
    EXPECT_NEAR(x, y, 1e-10) << "kt=" << kt;
  }
}

TEST(Tau3, NonIncreasingForEveryPair) {
  for (auto s : kAllInitialStates) {
    for (auto c : kAllChannels) {
      double prev = normalized(s, c, 0.0);
      EXPECT_NEAR(prev, 1.0, 1e-12);
      for (int i = 1; i < 200; ++i) {
        const double kt = 1.5 * i / 199.0;
        const double v = normalized(s, c, kt);
        EXPECT_LE(v, prev + 1e-12) << state_name(s) << "/" << channel_name(c) << " kt=" << kt;
        EXPECT_GE(v, 0.0);
        prev = v;
      }
    }
  }
}

}  // namespace
}  // namespace decolab
