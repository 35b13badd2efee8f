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

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "mirrorstate/qcore/gate.hpp"
#include "mirrorstate/qcore/qubit_set.hpp"
#include "mirrorstate/qcore/state.hpp"

namespace mirrorstate {

StateVector apply_unitary(const StateVector& state, const UnitaryGate& gate);

/// U rho U^dagger.
DensityMatrix apply_channel_to_density(const DensityMatrix& rho, const UnitaryGate& gate);

/// Reduced state on `keep`; the result's qubit order follows `keep`.
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSet& keep);
/// Same as partial_trace(DensityMatrix::pure(state), keep) without forming
/// the full density matrix.
DensityMatrix reduced_density(const StateVector& state, const QubitSet& keep);

/// Transposes the tensor factors listed in `subset`.
CMatrix partial_transpose(const CMatrix& m, int num_qubits, const QubitSet& subset);
CMatrix partial_transpose(const DensityMatrix& rho, const QubitSet& subset);

/// Ascending eigenvalues of a Hermitian matrix (checked to 1e-10).
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

struct Enumerate {};
struct Sample {
  std::uint64_t seed = 0;
};
using MeasureMode = std::variant<Enumerate, Sample>;

struct MeasurementOutcome {
  int index;
  double probability;
  /// Normalized post-measurement state on the unmeasured qubits, ascending.
  StateVector residual;
};

/// Projective measurement of `subset` in the orthonormal `basis` (states on
/// |subset| qubits, ordered like `subset`). Enumerate returns every outcome
/// with probability >= kZeroProbability in basis order; Sample returns one.
std::vector<MeasurementOutcome> measure_in_basis(const StateVector& state, const QubitSet& subset,
                                                 std::span<const StateVector> basis,
                                                 const MeasureMode& mode);

/// (<bra| (x) I)|state>: the unnormalized residual on the complement of
/// `subset` (ascending qubit order).
CVector project(const StateVector& state, const QubitSet& subset, const StateVector& bra);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

/// Reorders tensor factors: qubit i of the result is qubit order[i] of the
/// input. `order` must be a permutation of 1..n.
StateVector permute_qubits(const StateVector& state, const QubitSet& order);

/// Computational basis of `num_qubits` qubits.
std::vector<StateVector> computational_basis(int num_qubits);

}  // namespace mirrorstate
