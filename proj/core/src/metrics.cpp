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

#include "mirrorstate/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "mirrorstate/errors.hpp"
#include "mirrorstate/qcore/ops.hpp"
#include "mirrorstate/states.hpp"

namespace mirrorstate::metrics {

namespace {

double entropy_of_spectrum(const std::vector<double>& eigenvalues) {
  double s = 0;
  for (double l : eigenvalues) {
    if (l > kZeroProbability) s -= l * std::log2(l);
  }
  return std::max(s, 0.0);
}

CMatrix two_site(Pauli a, Pauli b) { return PauliString({a, b}, {1, 2}).matrix(); }

// All size-k subsets of 1..n in lexicographic order.
std::vector<QubitSet> combinations(int n, int k) {
  std::vector<QubitSet> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 1);
  if (k > n) return out;
  while (true) {
    out.emplace_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of_spectrum(hermitian_eigenvalues(rho.matrix()));
}

double entanglement_entropy(const StateVector& state, const QubitSet& keep) {
  if (keep.empty() || keep.size() == state.num_qubits()) {
    keep.validate(state.num_qubits());
    return 0;
  }
  return von_neumann_entropy(reduced_density(state, keep));
}

NegativityReport negativity(const DensityMatrix& rho, const QubitSet& split) {
  double sum = 0;
  for (double l : hermitian_eigenvalues(partial_transpose(rho, split))) {
    if (l < -kEigenTol) sum -= l;
  }
  return {split, sum};
}

double concurrence(const DensityMatrix& rho) {
  if (rho.num_qubits() != 2) throw InvalidArgument("concurrence needs a two-qubit state");
  const CMatrix yy = PauliString::parse("YY", {1, 2}).matrix();
  const CMatrix flipped = yy * rho.matrix().conjugate() * yy;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  const Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const CMatrix sqrt_rho = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
  CMatrix r = sqrt_rho * flipped * sqrt_rho;
  r = (0.5 * (r + r.adjoint())).eval();
  std::vector<double> ev = hermitian_eigenvalues(r);
  for (double& l : ev) l = std::sqrt(std::max(l, 0.0));
  std::sort(ev.rbegin(), ev.rend());
  return std::max(0.0, ev[0] - ev[1] - ev[2] - ev[3]);
}

int numerical_rank(const DensityMatrix& rho, double tol) {
  const auto ev = hermitian_eigenvalues(rho.matrix());
  return static_cast<int>(std::count_if(ev.begin(), ev.end(), [tol](double l) { return l > tol; }));
}

DensityMatrix pair_density_formula(int n) {
  if (n < 1) throw InvalidArgument("pair_density_formula: n must be positive");
  const double c = (std::pow(2.0, n - 1) - 2.0) / std::pow(2.0, n + 1);
  CMatrix m = CMatrix::Identity(4, 4) / 4.0 + two_site(Pauli::Z, Pauli::Z) / 4.0 +
              c * (two_site(Pauli::X, Pauli::X) - two_site(Pauli::Y, Pauli::Y));
  return DensityMatrix(2, std::move(m));
}

PairDensityComparison compare_pair_density(int n, int j) {
  if (j < 1 || j > n) throw InvalidArgument("compare_pair_density: j must lie in 1..n");
  const DensityMatrix traced = reduced_density(states::mirror_state(n), {j, 2 * n - j + 1});
  PairDensityComparison out;
  out.n = n;
  out.j = j;
  out.max_abs_diff = (traced.matrix() - pair_density_formula(n).matrix()).cwiseAbs().maxCoeff();
  out.agrees = out.max_abs_diff <= kAlgebraTol;
  out.rank = numerical_rank(traced);
  return out;
}

double connectedness_check(const StateVector& state, std::pair<int, int> pair) {
  const int n = state.num_qubits();
  const QubitSet kept{pair.first, pair.second};
  kept.validate(n);
  if (n == 2) return concurrence(DensityMatrix::pure(state));
  const QubitSet rest = kept.complement(n);
  const auto outcomes = measure_in_basis(state, rest, computational_basis(rest.size()), Enumerate{});
  double best = 0;
  for (const auto& o : outcomes) {
    // residual qubits are ascending; reorder to (first, second)
    StateVector pair_state = pair.first < pair.second ? o.residual : permute_qubits(o.residual, {2, 1});
    best = std::max(best, concurrence(DensityMatrix::pure(pair_state)));
  }
  return best;
}

double QeccAlphaMatrix::identity_defect() const {
  const auto d = entries.rows();
  return d == 0 ? 0.0 : (entries - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

QeccAlphaMatrix qecc_alpha(const StateVector& state, const QubitSet& qubits) {
  qubits.validate(state.num_qubits());
  QeccAlphaMatrix out;
  out.error_set = all_pauli_strings(qubits);
  std::vector<CVector> images;
  images.reserve(out.error_set.size());
  for (const auto& e : out.error_set) images.push_back(apply_unitary(state, e.gate()).amplitudes());
  const auto d = static_cast<Eigen::Index>(images.size());
  out.entries.resize(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      out.entries(j, k) = images[static_cast<std::size_t>(j)].dot(images[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

double holevo_quantity(std::span<const EnsembleMember> ensemble) {
  if (ensemble.empty()) throw InvalidArgument("holevo_quantity: empty ensemble");
  const int n = ensemble.front().rho.num_qubits();
  const auto d = static_cast<Eigen::Index>(dimension_of(n));
  CMatrix mixture = CMatrix::Zero(d, d);
  double total = 0;
  double average_entropy = 0;
  for (const auto& member : ensemble) {
    if (member.rho.num_qubits() != n) throw InvalidArgument("holevo_quantity: members differ in size");
    if (member.probability < 0) throw InvalidArgument("holevo_quantity: negative probability");
    total += member.probability;
    mixture += member.probability * member.rho.matrix();
    average_entropy += member.probability * von_neumann_entropy(member.rho);
  }
  if (std::abs(total - 1.0) > kProbabilityTol) throw InvalidArgument("holevo_quantity: probabilities do not sum to 1");
  return von_neumann_entropy(DensityMatrix(n, std::move(mixture))) - average_entropy;
}

std::vector<QubitSet> nontrivial_splits(int num_qubits) {
  if (num_qubits < 2) throw InvalidArgument("nontrivial_splits needs at least two qubits");
  std::vector<QubitSet> out;
  for (int k = 1; 2 * k <= num_qubits; ++k) {
    for (auto& s : combinations(num_qubits, k)) {
      if (2 * k < num_qubits || s.contains(1)) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<NegativityReport> ppt_all_splits(const DensityMatrix& rho) {
  std::vector<NegativityReport> out;
  for (const auto& s : nontrivial_splits(rho.num_qubits())) out.push_back(negativity(rho, s));
  return out;
}

BipartiteEntropy max_bipartite_entropy(const StateVector& state, int k) {
  const int n = state.num_qubits();
  if (k < 1 || k >= n) throw InvalidArgument("max_bipartite_entropy: k must lie in 1..n-1");
  BipartiteEntropy best{-1.0, {}};
  // independent subsets; a parallel scan would merge by max with the same tie rule
  for (const auto& s : combinations(n, k)) {
    const double e = entanglement_entropy(state, s);
    if (e > best.entropy + kEigenTol) best = {e, s};
  }
  return best;
}

std::vector<double> entropy_profile(const StateVector& state) {
  const int n = state.num_qubits();
  std::vector<double> out;
  for (std::uint64_t mask = 1; mask + 1 < dimension_of(n); ++mask) {
    std::vector<int> members;
    for (int q = 1; q <= n; ++q) {
      if ((mask >> (q - 1)) & 1U) members.push_back(q);
    }
    out.push_back(entanglement_entropy(state, QubitSet(std::move(members))));
  }
  return out;
}

std::vector<QubitSet> matching_relabelings(const StateVector& a, const StateVector& b, double tol) {
  if (a.num_qubits() != b.num_qubits()) throw InvalidArgument("matching_relabelings: qubit counts differ");
  const auto target = entropy_profile(a);
  std::vector<int> order(static_cast<std::size_t>(a.num_qubits()));
  std::iota(order.begin(), order.end(), 1);
  std::vector<QubitSet> out;
  do {
    const auto profile = entropy_profile(permute_qubits(b, QubitSet(order)));
    bool same = true;
    for (std::size_t i = 0; i < profile.size() && same; ++i) same = std::abs(profile[i] - target[i]) <= tol;
    if (same) out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace mirrorstate::metrics
