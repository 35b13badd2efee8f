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

#include <string>

#include "mirrorstate/qcore/qubit_set.hpp"
#include "mirrorstate/qcore/types.hpp"

namespace mirrorstate {

/// A k-qubit unitary bound to an ordered list of target qubits. targets[0]
/// is the most significant qubit of the gate's own 2^k basis.
class UnitaryGate {
 public:
  UnitaryGate(CMatrix matrix, QubitSet targets, std::string name = "U");

  int arity() const { return targets_.size(); }
  const CMatrix& matrix() const { return matrix_; }
  const QubitSet& targets() const { return targets_; }
  const std::string& name() const { return name_; }

  UnitaryGate adjoint() const;

 private:
  CMatrix matrix_;
  QubitSet targets_;
  std::string name_;
};

namespace gates {

UnitaryGate identity(const QubitSet& targets);
UnitaryGate hadamard(int qubit);
UnitaryGate pauli_x(int qubit);
UnitaryGate pauli_y(int qubit);
UnitaryGate pauli_z(int qubit);
UnitaryGate cnot(int control, int target);
UnitaryGate swap(int a, int b);
/// Diagonal gate multiplying |1...1> on `targets` by e^{i angle} and fixing
/// every other basis ket. angle = pi is the multi-controlled Z.
UnitaryGate controlled_phase(const QubitSet& targets, double angle);

}  // namespace gates

}  // namespace mirrorstate
