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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mirrorstate/qcore/gate.hpp"
#include "mirrorstate/qcore/pauli.hpp"
#include "mirrorstate/qcore/state.hpp"

namespace mirrorstate::states {

/// Largest half-size N accepted by the mirror-family constructors.
inline constexpr int kMaxHalfSize = 5;

/// Bit reversal of `index` over `bits` bits: |i1 ... iN> -> |iN ... i1>.
std::uint64_t reflect_index(std::uint64_t index, int bits);

/// 2N-qubit mirror state: uniform superposition of |R(i)>|i> over all N-bit
/// i, with the all-ones ket carrying a minus sign.
StateVector mirror_state(int n);

/// SWAPs that turn N adjacent Bell pairs into the reflected layout.
struct SwapSchedule {
  std::vector<std::pair<int, int>> pairs;
};

/// (2, 2N), (4, 2N-2), ... : floor(N/2) pairs.
SwapSchedule swap_schedule(int n);

/// N Bell pairs permuted by swap_schedule; the mirror state without the
/// all-ones sign flip.
StateVector rearranged_bell(int n);

/// H and CNOT on each pair (2k-1, 2k), then the schedule's SWAPs, then the
/// controlled phase (angle pi) across qubits 1..N.
std::vector<UnitaryGate> mirror_circuit(int n);
StateVector mirror_from_circuit(int n);

/// Linear cluster state on n qubits, prod_a (|0>_a Z_{a+1} + |1>_a) / sqrt 2
/// with Z_{n+1} = 1.
StateVector cluster_state(int n);

/// Two-qubit Bell states, named as psi+- = (|00> +- |11>)/sqrt 2 and
/// phi+- = (|01> +- |10>)/sqrt 2.
enum class Bell { PsiPlus, PsiMinus, PhiPlus, PhiMinus };
StateVector bell_state(Bell which);

/// The 4^N states (P (x) I)|mirror_N> for every Pauli word P on qubits 1..N.
/// states[i] is labelled by labels[i] and labels[i].index() == i.
struct MirrorBasis {
  int n = 0;
  std::vector<StateVector> states;
  std::vector<PauliString> labels;
};

/// Builds and self-checks the basis; throws InternalError if the Gram
/// matrix deviates from the identity by more than kProbabilityTol.
MirrorBasis mirror_basis(int n);

/// Channel families addressable from the command line.
enum class Family { Mirror, BellRearranged, Cluster };

Family parse_family(std::string_view name);
std::string family_name(Family family);

/// 2N-qubit member of `family`; the cluster family gives cluster_state(2N).
StateVector family_state(Family family, int n);

}  // namespace mirrorstate::states
