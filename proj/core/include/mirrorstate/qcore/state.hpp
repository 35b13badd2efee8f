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

#include "mirrorstate/qcore/types.hpp"

namespace mirrorstate {

/// Pure state of n qubits. Qubit 1 is the leftmost tensor factor, i.e. the
/// most significant bit of the basis index, so |i1 i2 ... in> has index
/// i1*2^(n-1) + ... + in.
class StateVector {
 public:
  /// Requires amplitudes.size() == 2^n and unit norm within kAlgebraTol.
  StateVector(int num_qubits, CVector amplitudes);

  /// Rescales to unit norm; throws on a (numerically) zero vector.
  static StateVector normalized(int num_qubits, CVector amplitudes);
  static StateVector basis(int num_qubits, std::uint64_t index);
  /// "0110" -> |0110>.
  static StateVector from_bits(std::string_view bits);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return dimension_of(num_qubits_); }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::uint64_t index) const { return amplitudes_[static_cast<Eigen::Index>(index)]; }

  /// |this> (x) |other>; this occupies the leading qubits.
  StateVector tensor(const StateVector& other) const;

  /// Human-readable expansion, e.g. "+0.5|0000> -0.5|1111>".
  std::string to_ket_string(double cutoff = 1e-12) const;

 private:
  int num_qubits_;
  CVector amplitudes_;
};

/// Mixed state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Validates Hermiticity and trace within kAlgebraTol and the smallest
  /// eigenvalue against -kProbabilityTol.
  DensityMatrix(int num_qubits, CMatrix entries);

  static DensityMatrix pure(const StateVector& state);
  static DensityMatrix maximally_mixed(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return dimension_of(num_qubits_); }
  const CMatrix& matrix() const { return entries_; }
  Complex operator()(std::uint64_t row, std::uint64_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  double purity() const;

 private:
  struct Trusted {};
  DensityMatrix(Trusted, int num_qubits, CMatrix entries);

  int num_qubits_;
  CMatrix entries_;
};

}  // namespace mirrorstate
