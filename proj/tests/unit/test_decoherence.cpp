// Copyright 2026 The mirrorstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "mirrorstate/errors.hpp"
#include "mirrorstate/decoherence.hpp"
#include "mirrorstate/metrics.hpp"
#include "mirrorstate/states.hpp"

namespace mirrorstate::decoherence {
namespace {

// Entrywise damping: every qubit whose bit differs between row and column
// contributes gamma e^{+i phi} when the row bit is 0, its conjugate otherwise.
oracle::Mat dephase_oracle(const oracle::Vec& psi, const std::array<double, 4>& g, const std::array<double, 4>& phi) {
  oracle::Mat rho = psi * psi.adjoint();
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      for (int q = 1; q <= 4; ++q) {
        const int rb = oracle::bit_of(static_cast<std::uint64_t>(r), q, 4);
        const int cb = oracle::bit_of(static_cast<std::uint64_t>(c), q, 4);
        if (rb == cb) continue;
        const auto i = static_cast<std::size_t>(q - 1);
        rho(r, c) *= std::polar(g[i], rb == 0 ? phi[i] : -phi[i]);
      }
    }
  }
  return rho;
}

TEST(Dephase, SingleQubitCoherence) {
  const auto plus = DensityMatrix::pure(StateVector::normalized(1, CVector::Ones(2)));
  const auto out = dephase(plus, {{0.4}, {0.3}});
  EXPECT_NEAR(std::abs(out(0, 1) - 0.5 * std::polar(0.4, 0.3)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(out(1, 0) - 0.5 * std::polar(0.4, -0.3)), 0.0, 1e-12);
  EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-12);
}

TEST(Dephase, BellPairNegativity) {
  const auto bell = DensityMatrix::pure(states::bell_state(states::Bell::PhiPlus));
  for (double g : {0.0, 0.25, 0.6, 1.0}) {
    EXPECT_NEAR(metrics::negativity(dephase(bell, {{g, 1.0}, {0, 0}}), {1}).value, g / 2, 1e-9);
    EXPECT_NEAR(metrics::negativity(dephase(bell, DephasingParams::uniform(2, g)), {1}).value, g * g / 2, 1e-9);
  }
}

TEST(Dephase, Validates) {
  const auto rho = DensityMatrix::maximally_mixed(2);
  EXPECT_THROW(dephase(rho, {{0.5}, {0.0}}), InvalidArgument);
  EXPECT_THROW(dephase(rho, {{0.5, 1.5}, {0.0, 0.0}}), InvalidArgument);
  EXPECT_THROW(DephasingParams::uniform(2, -0.1), InvalidArgument);
}

TEST(GammaFromCollisions, MultipliesStrengthsAndAddsPhases) {
  const auto p = gamma_from_collisions({{0.5, 0.5}, {0.9}}, {{0.1, 0.2}, {-1.0}});
  EXPECT_NEAR(p.gamma[0], 0.25, 1e-15);
  EXPECT_NEAR(p.phi[0], 0.3, 1e-15);
  EXPECT_NEAR(p.gamma[1], 0.9, 1e-15);
  EXPECT_THROW(gamma_from_collisions({{1.2}}, {{0.0}}), InvalidArgument);
  EXPECT_THROW(gamma_from_collisions({{0.5}}, {}), InvalidArgument);
}

TEST(Splits, LabelsAndOrder) {
  const auto s = table_splits();
  ASSERT_EQ(s.size(), kSplitCount);
  EXPECT_EQ(split_label(s[0], 4), "(A1)A2A3A4");
  EXPECT_EQ(split_label({1, 4}, 4), "(A1)A2A3(A4)");
  EXPECT_EQ(split_label({1, 2}, 4), "(A1A2)A3A4");
}

TEST(ClosedForms, MatchOracleNegativityOnAGrid) {
  const double grid[] = {0.0, 0.35, 0.8, 1.0};
  const auto splits = table_splits();
  std::array<double, 4> g{};
  const std::array<double, 4> phi{0.3, -1.1, 2.0, 0.7};
  for (double a : grid)
    for (double b : grid)
      for (double c : grid)
        for (double d : grid) {
          g = {a, b, c, d};
          const auto bell = closed_form_bell(g);
          const auto mirror = closed_form_mirror(g);
          const auto rb = dephase_oracle(oracle::rearranged_bell4(), g, phi);
          const auto rm = dephase_oracle(oracle::mirror4(), g, phi);
          for (std::size_t i = 0; i < kSplitCount; ++i) {
            const auto& m = splits[i].members();
            ASSERT_NEAR(bell[i], oracle::negativity(rb, m, 4), 1e-9);
            ASSERT_NEAR(mirror[i], oracle::negativity(rm, m, 4), 1e-9);
          }
        }
}

TEST(NegativityTable, RecognisesFamiliesAndAgrees) {
  const auto params = DephasingParams{{0.9, 0.5, 0.7, 0.2}, {0.1, 0.2, 0.3, 0.4}};
  for (const auto& [state, name] : {std::pair{states::mirror_state(2), "mirror"},
                                    std::pair{states::rearranged_bell(2), "bell-rearranged"}}) {
    const auto t = negativity_table(state, params);
    EXPECT_EQ(t.family, name);
    ASSERT_EQ(t.rows.size(), kSplitCount);
    for (const auto& row : t.rows) {
      ASSERT_TRUE(row.abs_diff.has_value());
      EXPECT_LE(*row.abs_diff, 1e-9) << row.label;
    }
  }
  const auto other = negativity_table(StateVector::basis(4, 3), params);
  EXPECT_EQ(other.family, "other");
  EXPECT_FALSE(other.rows.front().closed_form.has_value());
  EXPECT_THROW(negativity_table(states::mirror_state(3), DephasingParams::uniform(6, 0.5)), InvalidArgument);
}

TEST(NegativityTableProperty, PhaseInvariance) {
  oracle::Rng rng(2718);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> g(4), phi(4), zero(4, 0.0);
    for (int q = 0; q < 4; ++q) {
      g[static_cast<std::size_t>(q)] = rng.uniform();
      phi[static_cast<std::size_t>(q)] = 2 * std::numbers::pi * rng.uniform();
    }
    const auto a = negativity_table(states::mirror_state(2), {g, phi});
    const auto b = negativity_table(states::mirror_state(2), {g, zero});
    for (std::size_t i = 0; i < kSplitCount; ++i) ASSERT_NEAR(a.rows[i].numeric, b.rows[i].numeric, 1e-10);
  }
}

TEST(CriticalGamma, MirrorPairThresholdIsFourthRootScale) {
  const auto c = critical_gamma(states::mirror_state(2), {1, 4});
  EXPECT_FALSE(c.never_distillable);
  EXPECT_NEAR(c.gamma_crit_squared, std::sqrt(2.0) - 1, 1e-6);
  EXPECT_NEAR(c.gamma_crit * c.gamma_crit, c.gamma_crit_squared, 1e-15);
  EXPECT_GT(uniform_negativity(states::mirror_state(2), {1, 4}, c.gamma_crit + 1e-3), 0.0);
  EXPECT_LE(uniform_negativity(states::mirror_state(2), {1, 4}, c.gamma_crit - 1e-3), 1e-10);
}

TEST(CriticalGamma, BellPairSplitNeverDistillable) {
  const auto c = critical_gamma(states::rearranged_bell(2), {1, 4});
  EXPECT_TRUE(c.never_distillable);
  EXPECT_EQ(c.gamma_crit, kNeverDistillable);
  for (int i = 0; i < 100; ++i) EXPECT_LE(uniform_negativity(states::rearranged_bell(2), {1, 4}, i / 99.0), 1e-10);
}

TEST(CriticalGamma, SingleQubitSplitIsEntangledForAnyCoherence) {
  EXPECT_NEAR(critical_gamma(states::mirror_state(2), {1}).gamma_crit, 0.0, 1e-8);
}

}  // namespace
}  // namespace mirrorstate::decoherence
