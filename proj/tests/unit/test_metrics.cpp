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
#include <vector>

#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "mirrorstate/errors.hpp"
#include "mirrorstate/metrics.hpp"
#include "mirrorstate/qcore.hpp"
#include "mirrorstate/states.hpp"

namespace mirrorstate::metrics {
namespace {

std::vector<int> members_of(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int q = 1; q <= n; ++q) {
    if ((mask >> (q - 1)) & 1U) out.push_back(q);
  }
  return out;
}

TEST(Entropy, Examples) {
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(3)), 3.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::pure(StateVector::basis(2, 1))), 0.0, 1e-12);
  const auto zeta = states::mirror_state(2);
  EXPECT_EQ(entanglement_entropy(zeta, QubitSet{}), 0.0);
  EXPECT_EQ(entanglement_entropy(zeta, {1, 2, 3, 4}), 0.0);
  EXPECT_NEAR(entanglement_entropy(zeta, {1, 2}), 2.0, 1e-9);
  EXPECT_NEAR(entanglement_entropy(zeta, {1, 4}), 1.0, 1e-9);  // rank-two pair state
}

TEST(Entropy, FirstKQubitsOfMirrorStateCarryKBits) {
  for (int n = 2; n <= 4; ++n) {
    const auto zeta = states::mirror_state(n);
    for (int k = 1; k <= n; ++k) EXPECT_NEAR(entanglement_entropy(zeta, QubitSet::range(1, k)), k, 1e-9);
  }
}

TEST(EntropyProperty, MatchesOracleAndIsSymmetric) {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + rng.below(4);
    const StateVector psi(n, rng.state(n));
    const std::uint64_t mask = 1 + rng.below(static_cast<int>(dimension_of(n)) - 2);
    const auto keep = members_of(mask, n);
    const QubitSet k(keep);
    const CMatrix full = psi.amplitudes() * psi.amplitudes().adjoint();
    const double e = entanglement_entropy(psi, k);
    ASSERT_NEAR(e, oracle::entropy_bits(oracle::partial_trace(full, keep, n)), 1e-9);
    ASSERT_NEAR(e, entanglement_entropy(psi, k.complement(n)), 1e-9);
    ASSERT_LE(e, std::min(k.size(), n - k.size()) + 1e-9);
  }
}

TEST(Negativity, Examples) {
  const auto bell = DensityMatrix::pure(states::bell_state(states::Bell::PhiPlus));
  EXPECT_NEAR(negativity(bell, {1}).value, 0.5, 1e-12);
  EXPECT_NEAR(negativity(DensityMatrix::maximally_mixed(2), {1}).value, 0.0, 1e-12);
  EXPECT_EQ(negativity(bell, {2}).split, QubitSet({2}));
  const auto zeta = DensityMatrix::pure(states::mirror_state(2));
  EXPECT_NEAR(negativity(zeta, {1, 2}).value, 1.5, 1e-9);  // (2^2 - 1) / 2
}

TEST(NegativityProperty, MatchesOracle) {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + rng.below(3);
    const StateVector psi(n, rng.state(n));
    const auto sub = members_of(1 + rng.below(static_cast<int>(dimension_of(n)) - 2), n);
    const CMatrix full = psi.amplitudes() * psi.amplitudes().adjoint();
    ASSERT_NEAR(negativity(DensityMatrix::pure(psi), QubitSet(sub)).value, oracle::negativity(full, sub, n), 1e-9);
  }
}

TEST(Concurrence, Examples) {
  EXPECT_NEAR(concurrence(DensityMatrix::pure(states::bell_state(states::Bell::PsiMinus))), 1.0, 1e-9);
  EXPECT_NEAR(concurrence(DensityMatrix::pure(StateVector::basis(2, 2))), 0.0, 1e-9);
  EXPECT_NEAR(concurrence(DensityMatrix::maximally_mixed(2)), 0.0, 1e-9);
  // cos t |00> + sin t |11>: C = sin 2t
  const double t = 0.3;
  CVector v = CVector::Zero(4);
  v[0] = std::cos(t);
  v[3] = std::sin(t);
  EXPECT_NEAR(concurrence(DensityMatrix::pure(StateVector(2, v))), std::sin(2 * t), 1e-8);
  EXPECT_THROW(concurrence(DensityMatrix::maximally_mixed(3)), InvalidArgument);
}

TEST(NumericalRank, Examples) {
  EXPECT_EQ(numerical_rank(DensityMatrix::maximally_mixed(2)), 4);
  EXPECT_EQ(numerical_rank(DensityMatrix::pure(states::mirror_state(2))), 1);
}

TEST(PairDensity, MirrorPairsHaveRankTwo) {
  for (int n = 2; n <= 3; ++n) {
    for (int j = 1; j <= n; ++j) {
      EXPECT_EQ(numerical_rank(reduced_density(states::mirror_state(n), {j, 2 * n - j + 1})), 2) << n << "," << j;
    }
  }
}

TEST(PairDensity, FormulaAgreesWithPartialTrace) {
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      const auto cmp = compare_pair_density(n, j);
      EXPECT_TRUE(cmp.agrees) << n << "," << j << " diff " << cmp.max_abs_diff;
      EXPECT_EQ(cmp.rank, 2);
    }
  }
  EXPECT_THROW(compare_pair_density(2, 3), InvalidArgument);
}

TEST(Connectedness, MirrorPartnersCanBeLeftMaximallyEntangled) {
  const auto zeta = states::mirror_state(2);
  EXPECT_NEAR(connectedness_check(zeta, {1, 4}), 1.0, 1e-9);
  EXPECT_NEAR(connectedness_check(zeta, {4, 1}), 1.0, 1e-9);
  EXPECT_NEAR(connectedness_check(StateVector::basis(3, 0), {1, 3}), 0.0, 1e-9);
}

TEST(Qecc, MirrorStateGivesIdentity) {
  for (int n = 2; n <= 3; ++n) {
    const auto a = qecc_alpha(states::mirror_state(n), QubitSet::range(1, n));
    EXPECT_EQ(a.error_set.size(), dimension_of(2 * n));
    EXPECT_LE(a.identity_defect(), 1e-10);
  }
}

TEST(Qecc, ProductStateIsNotACode) {
  EXPECT_GT(qecc_alpha(StateVector::basis(4, 0), {1, 2}).identity_defect(), 0.5);
}

TEST(Holevo, UniformMirrorBasisEnsembleCarriesTwoNBits) {
  for (int n = 1; n <= 3; ++n) {
    const auto basis = states::mirror_basis(n);
    std::vector<EnsembleMember> ens;
    for (const auto& s : basis.states) ens.push_back({1.0 / static_cast<double>(basis.states.size()), DensityMatrix::pure(s)});
    EXPECT_NEAR(holevo_quantity(ens), 2.0 * n, 1e-9);
  }
}

TEST(Holevo, IdenticalMembersCarryNothingAndBadWeightsThrow) {
  const auto rho = DensityMatrix::pure(StateVector::basis(1, 0));
  const std::vector<EnsembleMember> same{{0.5, rho}, {0.5, rho}};
  EXPECT_NEAR(holevo_quantity(same), 0.0, 1e-12);
  const std::vector<EnsembleMember> bad{{0.7, rho}, {0.7, rho}};
  EXPECT_THROW(holevo_quantity(bad), InvalidArgument);
}

TEST(Splits, FourQubitsGiveSeven) {
  const auto s = nontrivial_splits(4);
  ASSERT_EQ(s.size(), 7U);
  EXPECT_EQ(s.front(), QubitSet({1}));
  EXPECT_EQ(s.back(), QubitSet({1, 4}));
  EXPECT_EQ(nontrivial_splits(6).size(), 6U + 15U + 10U);
  EXPECT_EQ(ppt_all_splits(DensityMatrix::maximally_mixed(4)).size(), 7U);
}

TEST(MaxBipartiteEntropy, MirrorAndCluster) {
  const auto m = max_bipartite_entropy(states::mirror_state(3), 3);
  EXPECT_NEAR(m.entropy, 3.0, 1e-9);
  EXPECT_EQ(m.subset, QubitSet({1, 2, 3}));
  const auto c = max_bipartite_entropy(states::cluster_state(6), 3);
  EXPECT_NEAR(c.entropy, 3.0, 1e-9);
  EXPECT_EQ(c.subset, QubitSet({1, 3, 5}));
  EXPECT_NEAR(entanglement_entropy(states::cluster_state(6), {1, 2, 3}), 1.0, 1e-9);
  EXPECT_THROW(max_bipartite_entropy(states::mirror_state(2), 4), InvalidArgument);
}

TEST(Relabelings, MirrorTwoMatchesFourQubitCluster) {
  EXPECT_EQ(matching_relabelings(states::mirror_state(2), states::cluster_state(4)).size(), 8U);
  EXPECT_EQ(matching_relabelings(states::mirror_state(2), states::mirror_state(2)).size(), 8U);
  EXPECT_TRUE(matching_relabelings(states::mirror_state(2), StateVector::basis(4, 0)).empty());
}

}  // namespace
}  // namespace mirrorstate::metrics
