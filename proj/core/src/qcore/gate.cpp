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

#include "mirrorstate/qcore/gate.hpp"

#include <cmath>
#include <numbers>

#include "mirrorstate/errors.hpp"

namespace mirrorstate {

UnitaryGate::UnitaryGate(CMatrix matrix, QubitSet targets, std::string name)
    : matrix_(std::move(matrix)), targets_(std::move(targets)), name_(std::move(name)) {
  const auto d = static_cast<Eigen::Index>(dimension_of(targets_.size()));
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw InvalidArgument("gate matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                          " but has " + std::to_string(targets_.size()) + " targets");
  }
  const CMatrix defect = matrix_.adjoint() * matrix_ - CMatrix::Identity(d, d);
  if (d > 0 && defect.cwiseAbs().maxCoeff() > kAlgebraTol) {
    throw InvalidArgument("gate matrix '" + name_ + "' is not unitary");
  }
}

UnitaryGate UnitaryGate::adjoint() const {
  return UnitaryGate(matrix_.adjoint(), targets_, name_ + "^dag");
}

namespace gates {

namespace {

CMatrix two_by_two(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

UnitaryGate identity(const QubitSet& targets) {
  const auto d = static_cast<Eigen::Index>(dimension_of(targets.size()));
  return UnitaryGate(CMatrix::Identity(d, d), targets, "I");
}

UnitaryGate hadamard(int qubit) {
  const double s = 1.0 / std::numbers::sqrt2;
  return UnitaryGate(two_by_two(s, s, s, -s), {qubit}, "H");
}

UnitaryGate pauli_x(int qubit) { return UnitaryGate(two_by_two(0, 1, 1, 0), {qubit}, "X"); }

UnitaryGate pauli_y(int qubit) {
  const Complex i(0, 1);
  return UnitaryGate(two_by_two(0, -i, i, 0), {qubit}, "Y");
}

UnitaryGate pauli_z(int qubit) { return UnitaryGate(two_by_two(1, 0, 0, -1), {qubit}, "Z"); }

UnitaryGate cnot(int control, int target) {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1;
  m(2, 3) = m(3, 2) = 1;
  return UnitaryGate(std::move(m), {control, target}, "CNOT");
}

UnitaryGate swap(int a, int b) {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = 1;
  m(1, 2) = m(2, 1) = 1;
  return UnitaryGate(std::move(m), {a, b}, "SWAP");
}

UnitaryGate controlled_phase(const QubitSet& targets, double angle) {
  const auto d = static_cast<Eigen::Index>(dimension_of(targets.size()));
  CMatrix m = CMatrix::Identity(d, d);
  // exact -1 for the common CZ case instead of exp(i*pi) rounding
  m(d - 1, d - 1) = (angle == std::numbers::pi) ? Complex(-1.0) : std::polar(1.0, angle);
  return UnitaryGate(std::move(m), targets, "CP");
}

}  // namespace gates

}  // namespace mirrorstate
