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

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mirrorstate/qcore/pauli.hpp"
#include "mirrorstate/qcore/qubit_set.hpp"
#include "mirrorstate/qcore/state.hpp"

namespace mirrorstate::metrics {

/// -sum lambda log2 lambda, in bits.
double von_neumann_entropy(const DensityMatrix& rho);
/// Entropy of the reduced state of a pure state on `keep`.
double entanglement_entropy(const StateVector& state, const QubitSet& keep);

struct NegativityReport {
  QubitSet split;  // the transposed party group
  double value = 0;
};

/// Sum of |lambda| over negative eigenvalues of the partial transpose on
/// `split`. Eigenvalues above -kEigenTol count as zero.
NegativityReport negativity(const DensityMatrix& rho, const QubitSet& split);

/// Two-qubit concurrence (Wootters).
double concurrence(const DensityMatrix& rho);

/// Number of eigenvalues above `tol`.
int numerical_rank(const DensityMatrix& rho, double tol = kEigenTol);

/// Closed-form reduced state of a symmetric pair (j, 2n-j+1) of the 2n-qubit
/// mirror state:
///   I/4 + (s3 s3)/4 + (2^(n-1) - 2)/2^(n+1) (s1 s1 - s2 s2).
DensityMatrix pair_density_formula(int n);

struct PairDensityComparison {
  int n = 0;
  int j = 0;
  double max_abs_diff = 0;  // entrywise, formula vs partial trace
  bool agrees = false;      // max_abs_diff <= kAlgebraTol
  int rank = 0;             // numerical rank of the partial trace
};

/// Compares the closed form with the partial trace of mirror_state(n) onto
/// (j, 2n-j+1). Disagreement is reported, never thrown.
PairDensityComparison compare_pair_density(int n, int j);

/// Measures every other qubit in the computational basis and returns the
/// largest concurrence of the residual pair over all outcomes.
double connectedness_check(const StateVector& state, std::pair<int, int> pair);

/// <psi| E_j^dag E_k |psi> over every Pauli word on a qubit subset.
struct QeccAlphaMatrix {
  std::vector<PauliString> error_set;
  CMatrix entries;

  /// max |entries - I|.
  double identity_defect() const;
};

QeccAlphaMatrix qecc_alpha(const StateVector& state, const QubitSet& qubits);

struct EnsembleMember {
  double probability;
  DensityMatrix rho;
};

/// S(sum p_i rho_i) - sum p_i S(rho_i), in bits.
double holevo_quantity(std::span<const EnsembleMember> ensemble);

/// One representative per bipartition {S, complement}: every subset smaller
/// than its complement, plus the half-size subsets containing qubit 1,
/// ordered by size then lexicographically. Four qubits give
/// {1},{2},{3},{4},{1,2},{1,3},{1,4}.
std::vector<QubitSet> nontrivial_splits(int num_qubits);

std::vector<NegativityReport> ppt_all_splits(const DensityMatrix& rho);

struct BipartiteEntropy {
  double entropy = 0;
  QubitSet subset;  // first achieving subset in lexicographic order
};

/// Brute force over all size-k subsets.
BipartiteEntropy max_bipartite_entropy(const StateVector& state, int k);

/// Entropy of every proper nonempty subset, in order of the subset's bitmask
/// (bit q-1 set for qubit q).
std::vector<double> entropy_profile(const StateVector& state);

/// Qubit relabelings `order` (permute_qubits convention) under which the
/// entropy profile of permute_qubits(b, order) equals that of `a` within
/// `tol`.
std::vector<QubitSet> matching_relabelings(const StateVector& a, const StateVector& b, double tol = kEigenTol);

}  // namespace mirrorstate::metrics
