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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "mirrorstate/errors.hpp"
#include "mirrorstate/qcore.hpp"
#include "mirrorstate/states.hpp"

namespace mirrorstate::states {
namespace {

double diff(const StateVector& a, const oracle::Vec& b) { return (a.amplitudes() - b).cwiseAbs().maxCoeff(); }

TEST(ReflectIndex, ReversesBits) {
  EXPECT_EQ(reflect_index(0b001, 3), 0b100U);
  EXPECT_EQ(reflect_index(0b110, 3), 0b011U);
  EXPECT_EQ(reflect_index(0b1, 1), 0b1U);
  for (std::uint64_t i = 0; i < 32; ++i) EXPECT_EQ(reflect_index(reflect_index(i, 5), 5), i);
}

TEST(MirrorState, GoldenVectors) {
  EXPECT_LE(diff(mirror_state(2), oracle::mirror4()), 1e-12);
  EXPECT_LE(diff(mirror_state(3), oracle::mirror6_grouped()), 1e-12);
  const double r = 1 / std::sqrt(2.0);
  EXPECT_LE(diff(mirror_state(1), oracle::kets({{"00", r}, {"11", -r}})), 1e-12);
  for (int n = 1; n <= kMaxHalfSize; ++n) EXPECT_LE(diff(mirror_state(n), oracle::mirror(n)), 1e-12) << n;
}

TEST(MirrorState, RejectsOutOfRange) {
  EXPECT_THROW(mirror_state(0), InvalidArgument);
  EXPECT_THROW(mirror_state(kMaxHalfSize + 1), InvalidArgument);
  EXPECT_THROW(rearranged_bell(0), InvalidArgument);
  EXPECT_THROW(mirror_circuit(-1), InvalidArgument);
}

TEST(RearrangedBell, GoldenAndSignFree) {
  EXPECT_LE(diff(rearranged_bell(2), oracle::rearranged_bell4()), 1e-12);
  const auto s = rearranged_bell(3);
  for (std::uint64_t i = 0; i < s.dimension(); ++i) EXPECT_GE(s[i].real(), 0.0);
}

TEST(SwapSchedule, Examples) {
  using P = std::vector<std::pair<int, int>>;
  EXPECT_TRUE(swap_schedule(1).pairs.empty());
  EXPECT_EQ(swap_schedule(2).pairs, (P{{2, 4}}));
  EXPECT_EQ(swap_schedule(3).pairs, (P{{2, 6}}));
  EXPECT_EQ(swap_schedule(4).pairs, (P{{2, 8}, {4, 6}}));
}

TEST(SwapScheduleProperty, ProducesReflectedPairing) {
  // Applying the schedule to Bell pairs (2k-1, 2k) must pair qubit j with 2N+1-j.
  for (int n = 1; n <= kMaxHalfSize; ++n) {
    std::vector<int> where(static_cast<std::size_t>(2 * n + 1));
    for (int q = 1; q <= 2 * n; ++q) where[static_cast<std::size_t>(q)] = q;
    for (const auto& [a, b] : swap_schedule(n).pairs) std::swap(where[static_cast<std::size_t>(a)], where[static_cast<std::size_t>(b)]);
    std::set<int> seen;
    for (int k = 1; k <= n; ++k) {
      // logical pair (2k-1, 2k) ends at positions where[2k-1], where[2k]
      const int p = where[static_cast<std::size_t>(2 * k - 1)];
      const int q = where[static_cast<std::size_t>(2 * k)];
      EXPECT_EQ(p + q, 2 * n + 1) << "n=" << n << " k=" << k;
      seen.insert(std::min(p, q));
    }
    EXPECT_EQ(static_cast<int>(seen.size()), n);
  }
}

TEST(MirrorCircuit, EqualsDirectConstruction) {
  for (int n = 1; n <= kMaxHalfSize; ++n) {
    EXPECT_LE((mirror_from_circuit(n).amplitudes() - mirror_state(n).amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(MirrorCircuit, GateCountAndLastStep) {
  const auto c = mirror_circuit(3);
  // 3 H, 3 CNOT, 1 SWAP, 1 CP
  ASSERT_EQ(c.size(), 8U);
  EXPECT_EQ(c.back().targets(), QubitSet({1, 2, 3}));
}

TEST(MirrorCircuit, WithoutPhaseGivesRearrangedBell) {
  for (int n = 1; n <= 4; ++n) {
    auto c = mirror_circuit(n);
    c.pop_back();
    StateVector s = StateVector::basis(2 * n, 0);
    for (const auto& g : c) s = apply_unitary(s, g);
    EXPECT_LE((s.amplitudes() - rearranged_bell(n).amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ClusterState, Examples) {
  const auto c2 = cluster_state(2);
  const double expected[] = {0.5, -0.5, 0.5, 0.5};
  for (std::uint64_t i = 0; i < 4; ++i) EXPECT_NEAR(c2[i].real(), expected[i], 1e-12);
  EXPECT_THROW(cluster_state(0), InvalidArgument);
  EXPECT_NEAR(cluster_state(6).amplitudes().norm(), 1.0, 1e-12);
}

TEST(BellState, AllFourOrthonormal) {
  const Bell all[] = {Bell::PsiPlus, Bell::PsiMinus, Bell::PhiPlus, Bell::PhiMinus};
  for (Bell a : all) {
    for (Bell b : all) {
      EXPECT_NEAR(std::abs(bell_state(a).amplitudes().dot(bell_state(b).amplitudes())), a == b ? 1.0 : 0.0, 1e-12);
    }
  }
}

TEST(MirrorBasis, OrthonormalAndLabelled) {
  for (int n = 1; n <= 3; ++n) {
    const auto basis = mirror_basis(n);
    ASSERT_EQ(basis.states.size(), static_cast<std::size_t>(1) << (2 * n));
    ASSERT_EQ(basis.labels.size(), basis.states.size());
    EXPECT_LE(diff(basis.states[0], mirror_state(n).amplitudes()), 1e-12);
    CMatrix gram(static_cast<Eigen::Index>(basis.states.size()), static_cast<Eigen::Index>(basis.states.size()));
    for (std::size_t i = 0; i < basis.states.size(); ++i)
      for (std::size_t j = 0; j < basis.states.size(); ++j)
        gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = basis.states[i].amplitudes().dot(basis.states[j].amplitudes());
    EXPECT_LE((gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff(), 1e-12);
    for (std::size_t i = 0; i < basis.labels.size(); ++i) EXPECT_EQ(basis.labels[i].index(), i);
  }
}

TEST(Family, ParseAndBuild) {
  EXPECT_EQ(parse_family("mirror"), Family::Mirror);
  EXPECT_EQ(parse_family("bell-rearranged"), Family::BellRearranged);
  EXPECT_EQ(family_name(Family::Cluster), "cluster");
  EXPECT_THROW(parse_family("ghz"), InvalidArgument);
  EXPECT_EQ(family_state(Family::Cluster, 3).num_qubits(), 6);
}

}  // namespace
}  // namespace mirrorstate::states
