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

#include "mirrorstate/states.hpp"

#include <cmath>
#include <numbers>

#include "mirrorstate/errors.hpp"
#include "mirrorstate/qcore/ops.hpp"

namespace mirrorstate::states {

namespace {

void check_half_size(int n) {
  if (n < 1 || n > kMaxHalfSize) {
    throw InvalidArgument("N must lie in 1.." + std::to_string(kMaxHalfSize) + ", got " + std::to_string(n));
  }
}

// Shared by the mirror state and its unsigned sibling.
StateVector reflected_superposition(int n, bool sign_all_ones) {
  check_half_size(n);
  const std::uint64_t half = dimension_of(n);
  const double amp = std::pow(2.0, -0.5 * n);
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dimension_of(2 * n)));
  for (std::uint64_t i = 0; i < half; ++i) {
    const bool flip = sign_all_ones && i == half - 1;
    v[static_cast<Eigen::Index>((reflect_index(i, n) << n) | i)] = flip ? -amp : amp;
  }
  return StateVector(2 * n, std::move(v));
}

}  // namespace

std::uint64_t reflect_index(std::uint64_t index, int bits) {
  if (bits < 0 || bits > 63) throw InvalidArgument("reflect_index: bit count out of range");
  if (index >= dimension_of(bits)) throw InvalidArgument("reflect_index: index exceeds 2^bits");
  std::uint64_t out = 0;
  for (int b = 0; b < bits; ++b) out |= ((index >> b) & 1U) << (bits - 1 - b);
  return out;
}

StateVector mirror_state(int n) { return reflected_superposition(n, true); }

StateVector rearranged_bell(int n) { return reflected_superposition(n, false); }

SwapSchedule swap_schedule(int n) {
  check_half_size(n);
  SwapSchedule s;
  for (int k = 1; k <= n / 2; ++k) s.pairs.emplace_back(2 * k, 2 * n + 2 - 2 * k);
  return s;
}

std::vector<UnitaryGate> mirror_circuit(int n) {
  check_half_size(n);
  std::vector<UnitaryGate> circuit;
  for (int k = 1; k <= n; ++k) {
    circuit.push_back(gates::hadamard(2 * k - 1));
    circuit.push_back(gates::cnot(2 * k - 1, 2 * k));
  }
  for (const auto& [a, b] : swap_schedule(n).pairs) circuit.push_back(gates::swap(a, b));
  circuit.push_back(gates::controlled_phase(QubitSet::range(1, n), std::numbers::pi));
  return circuit;
}

StateVector mirror_from_circuit(int n) {
  StateVector s = StateVector::basis(2 * n, 0);
  for (const auto& g : mirror_circuit(n)) s = apply_unitary(s, g);
  return s;
}

StateVector cluster_state(int n) {
  if (n < 1 || n > kMaxQubits) throw InvalidArgument("cluster_state: qubit count out of range");
  const double amp = std::pow(2.0, -0.5 * n);
  CVector v(static_cast<Eigen::Index>(dimension_of(n)));
  for (std::uint64_t x = 0; x < dimension_of(n); ++x) {
    // Z_{a+1} acts only when qubit a is |0>, giving a sign for each (0, 1) neighbour pair.
    int parity = 0;
    for (int a = 1; a < n; ++a) {
      const auto bit = [&](int q) { return (x >> (n - q)) & 1U; };
      parity ^= static_cast<int>((1U - bit(a)) & bit(a + 1));
    }
    v[static_cast<Eigen::Index>(x)] = parity ? -amp : amp;
  }
  return StateVector(n, std::move(v));
}

StateVector bell_state(Bell which) {
  const double s = 1.0 / std::numbers::sqrt2;
  CVector v = CVector::Zero(4);
  switch (which) {
    case Bell::PsiPlus: v << s, 0, 0, s; break;
    case Bell::PsiMinus: v << s, 0, 0, -s; break;
    case Bell::PhiPlus: v << 0, s, s, 0; break;
    case Bell::PhiMinus: v << 0, s, -s, 0; break;
  }
  return StateVector(2, std::move(v));
}

MirrorBasis mirror_basis(int n) {
  const StateVector zeta = mirror_state(n);
  MirrorBasis basis;
  basis.n = n;
  basis.labels = all_pauli_strings(QubitSet::range(1, n));
  for (const auto& p : basis.labels) basis.states.push_back(apply_unitary(zeta, p.gate()));

  const auto d = static_cast<Eigen::Index>(basis.states.size());
  CMatrix cols(static_cast<Eigen::Index>(zeta.dimension()), d);
  for (Eigen::Index i = 0; i < d; ++i) cols.col(i) = basis.states[static_cast<std::size_t>(i)].amplitudes();
  const double defect = (cols.adjoint() * cols - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > kProbabilityTol) {
    throw InternalError("mirror basis is not orthonormal (Gram defect " + std::to_string(defect) + ")");
  }
  return basis;
}

Family parse_family(std::string_view name) {
  if (name == "mirror") return Family::Mirror;
  if (name == "bell-rearranged") return Family::BellRearranged;
  if (name == "cluster") return Family::Cluster;
  throw InvalidArgument("unknown state family '" + std::string(name) + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Mirror: return "mirror";
    case Family::BellRearranged: return "bell-rearranged";
    case Family::Cluster: return "cluster";
  }
  throw InternalError("unhandled family");
}

StateVector family_state(Family family, int n) {
  switch (family) {
    case Family::Mirror: return mirror_state(n);
    case Family::BellRearranged: return rearranged_bell(n);
    case Family::Cluster:
      check_half_size(n);
      return cluster_state(2 * n);
  }
  throw InternalError("unhandled family");
}

}  // namespace mirrorstate::states
