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

#include "mirrorstate/qcore/ops.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "indexing.hpp"
#include "mirrorstate/errors.hpp"
#include "mirrorstate/qcore/random.hpp"

namespace mirrorstate {

namespace {

using detail::subset_offsets;

void check_gate_fits(const UnitaryGate& gate, int num_qubits) {
  if (gate.arity() > num_qubits) throw InvalidArgument("gate arity exceeds register size");
  gate.targets().validate(num_qubits);
}

// Applies `gate` to the row index of every column of `m` (in place).
void apply_to_rows(CMatrix& m, int num_qubits, const UnitaryGate& gate) {
  const auto target_off = subset_offsets(num_qubits, gate.targets());
  const auto rest_off = subset_offsets(num_qubits, gate.targets().complement(num_qubits));
  const CMatrix& u = gate.matrix();
  const auto k = static_cast<Eigen::Index>(target_off.size());
  CMatrix block(k, m.cols());
  for (std::uint64_t r : rest_off) {
    for (Eigen::Index s = 0; s < k; ++s) block.row(s) = m.row(static_cast<Eigen::Index>(target_off[s] | r));
    block = (u * block).eval();
    for (Eigen::Index s = 0; s < k; ++s) m.row(static_cast<Eigen::Index>(target_off[s] | r)) = block.row(s);
  }
}

// Amplitudes arranged as (subset index) x (complement index).
CMatrix split_amplitudes(const StateVector& state, const QubitSet& subset) {
  const int n = state.num_qubits();
  const auto sub_off = subset_offsets(n, subset);
  const auto rest_off = subset_offsets(n, subset.complement(n));
  CMatrix m(static_cast<Eigen::Index>(sub_off.size()), static_cast<Eigen::Index>(rest_off.size()));
  for (std::size_t a = 0; a < sub_off.size(); ++a) {
    for (std::size_t r = 0; r < rest_off.size(); ++r) {
      m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(r)) = state[sub_off[a] | rest_off[r]];
    }
  }
  return m;
}

}  // namespace

StateVector apply_unitary(const StateVector& state, const UnitaryGate& gate) {
  check_gate_fits(gate, state.num_qubits());
  CMatrix column = state.amplitudes();
  apply_to_rows(column, state.num_qubits(), gate);
  return StateVector(state.num_qubits(), column.col(0));
}

DensityMatrix apply_channel_to_density(const DensityMatrix& rho, const UnitaryGate& gate) {
  check_gate_fits(gate, rho.num_qubits());
  CMatrix m = rho.matrix();
  apply_to_rows(m, rho.num_qubits(), gate);  // U rho
  CMatrix out = m.adjoint();                  // rho U^dag
  apply_to_rows(out, rho.num_qubits(), gate); // U rho U^dag
  return DensityMatrix(rho.num_qubits(), std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSet& keep) {
  const int n = rho.num_qubits();
  if (keep.empty()) throw InvalidArgument("partial_trace: keep set is empty");
  keep.validate(n);
  const auto keep_off = subset_offsets(n, keep);
  const auto rest_off = subset_offsets(n, keep.complement(n));
  const auto dk = static_cast<Eigen::Index>(keep_off.size());
  CMatrix out = CMatrix::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a) {
    for (Eigen::Index b = 0; b < dk; ++b) {
      Complex sum = 0;
      for (std::uint64_t r : rest_off) {
        sum += rho(keep_off[static_cast<std::size_t>(a)] | r, keep_off[static_cast<std::size_t>(b)] | r);
      }
      out(a, b) = sum;
    }
  }
  return DensityMatrix(keep.size(), std::move(out));
}

DensityMatrix reduced_density(const StateVector& state, const QubitSet& keep) {
  if (keep.empty()) throw InvalidArgument("reduced_density: keep set is empty");
  keep.validate(state.num_qubits());
  const CMatrix m = split_amplitudes(state, keep);
  return DensityMatrix(keep.size(), m * m.adjoint());
}

CMatrix partial_transpose(const CMatrix& m, int num_qubits, const QubitSet& subset) {
  subset.validate(num_qubits);
  const auto d = static_cast<Eigen::Index>(dimension_of(num_qubits));
  if (m.rows() != d || m.cols() != d) throw InvalidArgument("partial_transpose: matrix is not 2^n x 2^n");
  const std::uint64_t mask = detail::subset_mask(num_qubits, subset);
  CMatrix out(d, d);
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(d); ++i) {
    for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(d); ++j) {
      const std::uint64_t row = (i & ~mask) | (j & mask);
      const std::uint64_t col = (j & ~mask) | (i & mask);
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
  }
  return out;
}

CMatrix partial_transpose(const DensityMatrix& rho, const QubitSet& subset) {
  return partial_transpose(rho.matrix(), rho.num_qubits(), subset);
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("hermitian_eigenvalues: matrix is not square");
  if (m.size() > 0 && (m - m.adjoint()).cwiseAbs().maxCoeff() > kProbabilityTol) {
    throw InvalidArgument("hermitian_eigenvalues: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

CVector project(const StateVector& state, const QubitSet& subset, const StateVector& bra) {
  subset.validate(state.num_qubits());
  if (bra.num_qubits() != subset.size()) throw InvalidArgument("project: bra size does not match subset");
  const CMatrix m = split_amplitudes(state, subset);
  return (bra.amplitudes().adjoint() * m).transpose();
}

std::vector<MeasurementOutcome> measure_in_basis(const StateVector& state, const QubitSet& subset,
                                                 std::span<const StateVector> basis, const MeasureMode& mode) {
  const int n = state.num_qubits();
  subset.validate(n);
  const int k = subset.size();
  const auto d = static_cast<Eigen::Index>(dimension_of(k));
  if (static_cast<Eigen::Index>(basis.size()) != d) {
    throw InvalidArgument("measurement basis has " + std::to_string(basis.size()) + " states; " +
                          std::to_string(d) + " required for completeness");
  }
  CMatrix b(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const auto& v = basis[static_cast<std::size_t>(i)];
    if (v.num_qubits() != k) throw InvalidArgument("basis state size does not match subset");
    b.col(i) = v.amplitudes();
  }
  if ((b.adjoint() * b - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > kProbabilityTol) {
    throw InvalidArgument("measurement basis is not orthonormal");
  }

  const CMatrix m = split_amplitudes(state, subset);
  const CMatrix residuals = b.adjoint() * m;  // row i: unnormalized residual for outcome i
  const int rest = n - k;

  std::vector<double> probs(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) probs[static_cast<std::size_t>(i)] = residuals.row(i).squaredNorm();

  auto make = [&](Eigen::Index i) {
    const double p = probs[static_cast<std::size_t>(i)];
    CVector r = residuals.row(i).transpose() / std::sqrt(p);
    return MeasurementOutcome{static_cast<int>(i), p, StateVector::normalized(rest, std::move(r))};
  };

  std::vector<MeasurementOutcome> out;
  if (std::holds_alternative<Enumerate>(mode)) {
    for (Eigen::Index i = 0; i < d; ++i) {
      if (probs[static_cast<std::size_t>(i)] >= kZeroProbability) out.push_back(make(i));
    }
    return out;
  }

  std::mt19937_64 rng(std::get<Sample>(mode).seed);
  const double u = unit_draw(rng);
  double acc = 0;
  Eigen::Index chosen = -1;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (probs[static_cast<std::size_t>(i)] < kZeroProbability) continue;
    chosen = i;
    acc += probs[static_cast<std::size_t>(i)];
    if (u < acc) break;
  }
  if (chosen < 0) throw InternalError("measure_in_basis: no outcome with nonzero probability");
  out.push_back(make(chosen));
  return out;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw InvalidArgument("fidelity: qubit counts differ");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

StateVector permute_qubits(const StateVector& state, const QubitSet& order) {
  const int n = state.num_qubits();
  if (order.size() != n) throw InvalidArgument("permute_qubits: order must list every qubit");
  order.validate(n);
  CVector out(static_cast<Eigen::Index>(state.dimension()));
  for (std::uint64_t x = 0; x < state.dimension(); ++x) {
    std::uint64_t y = 0;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = (x >> (n - order[static_cast<std::size_t>(i)])) & 1U;
      y |= bit << (n - 1 - i);
    }
    out[static_cast<Eigen::Index>(y)] = state[x];
  }
  return StateVector(n, std::move(out));
}

std::vector<StateVector> computational_basis(int num_qubits) {
  std::vector<StateVector> out;
  for (std::uint64_t i = 0; i < dimension_of(num_qubits); ++i) out.push_back(StateVector::basis(num_qubits, i));
  return out;
}

}  // namespace mirrorstate
