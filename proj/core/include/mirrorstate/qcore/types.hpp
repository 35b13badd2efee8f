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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace mirrorstate {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Largest register the dense representation accepts.
inline constexpr int kMaxQubits = 12;

/// Algebraic identities (norms, traces, unitarity).
inline constexpr double kAlgebraTol = 1e-12;
/// Probabilities and orthonormality.
inline constexpr double kProbabilityTol = 1e-10;
/// Eigensolver output.
inline constexpr double kEigenTol = 1e-9;
/// Outcomes below this probability are dropped from enumerations.
inline constexpr double kZeroProbability = 1e-14;

inline constexpr std::uint64_t dimension_of(int num_qubits) {
  return std::uint64_t{1} << num_qubits;
}

}  // namespace mirrorstate
