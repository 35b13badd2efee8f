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

#include "mirrorstate/qcore/state.hpp"

#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>

#include "mirrorstate/errors.hpp"

namespace mirrorstate {

namespace {

void check_qubit_count(int num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) {
    throw InvalidArgument("qubit count " + std::to_string(num_qubits) + " outside 0.." + std::to_string(kMaxQubits));
  }
}

}  // namespace

StateVector::StateVector(int num_qubits, CVector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(num_qubits);
  if (static_cast<std::uint64_t>(amplitudes_.size()) != dimension_of(num_qubits)) {
    throw InvalidArgument("amplitude count " + std::to_string(amplitudes_.size()) + " != 2^" +
                          std::to_string(num_qubits));
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kAlgebraTol) {
    throw InvalidArgument("state is not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
  }
}

StateVector StateVector::normalized(int num_qubits, CVector amplitudes) {
  const double n = amplitudes.norm();
  if (n < 1e-150) throw InvalidArgument("cannot normalize a zero vector");
  amplitudes /= n;
  return StateVector(num_qubits, std::move(amplitudes));
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  check_qubit_count(num_qubits);
  if (index >= dimension_of(num_qubits)) throw InvalidArgument("basis index out of range");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dimension_of(num_qubits)));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(num_qubits, std::move(v));
}

StateVector StateVector::from_bits(std::string_view bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("bit string may only contain 0 and 1");
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return basis(static_cast<int>(bits.size()), index);
}

StateVector StateVector::tensor(const StateVector& other) const {
  const int n = num_qubits_ + other.num_qubits_;
  check_qubit_count(n);
  CVector v(static_cast<Eigen::Index>(dimension_of(n)));
  const auto db = other.amplitudes_.size();
  for (Eigen::Index a = 0; a < amplitudes_.size(); ++a) {
    v.segment(a * db, db) = amplitudes_[a] * other.amplitudes_;
  }
  return StateVector(n, std::move(v));
}

std::string StateVector::to_ket_string(double cutoff) const {
  std::string out;
  char buf[96];
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
    const Complex a = amplitudes_[i];
    if (std::abs(a) <= cutoff) continue;
    if (std::abs(a.imag()) <= cutoff) {
      std::snprintf(buf, sizeof buf, "%+.6g", a.real());
    } else if (std::abs(a.real()) <= cutoff) {
      std::snprintf(buf, sizeof buf, "%+.6gi", a.imag());
    } else {
      std::snprintf(buf, sizeof buf, "+(%.6g%+.6gi)", a.real(), a.imag());
    }
    if (!out.empty()) out += ' ';
    out += buf;
    out += '|';
    for (int q = num_qubits_ - 1; q >= 0; --q) out += ((i >> q) & 1) ? '1' : '0';
    out += '>';
  }
  return out;
}

DensityMatrix::DensityMatrix(int num_qubits, CMatrix entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
  check_qubit_count(num_qubits);
  const auto d = static_cast<Eigen::Index>(dimension_of(num_qubits));
  if (entries_.rows() != d || entries_.cols() != d) {
    throw InvalidArgument("density matrix must be 2^n x 2^n");
  }
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol) {
    throw InvalidArgument("density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace() - Complex(1.0)) > kAlgebraTol) {
    throw InvalidArgument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kProbabilityTol) {
    throw InvalidArgument("density matrix has a negative eigenvalue");
  }
}

DensityMatrix::DensityMatrix(Trusted, int num_qubits, CMatrix entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {}

DensityMatrix DensityMatrix::pure(const StateVector& state) {
  return DensityMatrix(Trusted{}, state.num_qubits(), state.amplitudes() * state.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  check_qubit_count(num_qubits);
  const auto d = static_cast<Eigen::Index>(dimension_of(num_qubits));
  return DensityMatrix(Trusted{}, num_qubits, CMatrix::Identity(d, d) / static_cast<double>(d));
}

double DensityMatrix::purity() const {
  return (entries_ * entries_).trace().real();
}

}  // namespace mirrorstate
