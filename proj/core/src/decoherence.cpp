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

#include "mirrorstate/decoherence.hpp"

#include <algorithm>
#include <cmath>

#include "mirrorstate/errors.hpp"
#include "mirrorstate/metrics.hpp"
#include "mirrorstate/qcore/ops.hpp"
#include "mirrorstate/states.hpp"

namespace mirrorstate::decoherence {

namespace {

constexpr int kProfileSamples = 101;

bool same_state(const StateVector& a, const StateVector& b) {
  return a.num_qubits() == b.num_qubits() && (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff() <= kAlgebraTol;
}

// Terms shared by both families.
SplitValues common_terms(const std::array<double, 4>& g) {
  const double g14 = g[0] * g[3];
  const double g23 = g[1] * g[2];
  const double pair = 0.5 * (g[0] * g[1] * g[2] * g[3] + g14 + g23);
  return {0.5 * g14, 0.5 * g23, 0.5 * g23, 0.5 * g14, pair, pair, 0.0};
}

}  // namespace

DephasingParams DephasingParams::uniform(int num_qubits, double gamma) {
  DephasingParams p{std::vector<double>(static_cast<std::size_t>(num_qubits), gamma),
                    std::vector<double>(static_cast<std::size_t>(num_qubits), 0.0)};
  p.validate(num_qubits);
  return p;
}

void DephasingParams::validate(int num_qubits) const {
  if (static_cast<int>(gamma.size()) != num_qubits || static_cast<int>(phi.size()) != num_qubits) {
    throw InvalidArgument("dephasing needs one (gamma, phi) pair per qubit (" + std::to_string(num_qubits) + ")");
  }
  for (double g : gamma) {
    if (!(g >= 0 && g <= 1)) throw InvalidArgument("gamma must lie in [0, 1]");
  }
}

DephasingParams gamma_from_collisions(const std::vector<std::vector<double>>& lambdas,
                                      const std::vector<std::vector<double>>& phis) {
  if (lambdas.size() != phis.size()) throw InvalidArgument("lambda and phi lists cover different qubit counts");
  DephasingParams out;
  for (std::size_t q = 0; q < lambdas.size(); ++q) {
    if (lambdas[q].size() != phis[q].size()) throw InvalidArgument("each collision needs a lambda and a phi");
    double g = 1;
    double p = 0;
    for (std::size_t j = 0; j < lambdas[q].size(); ++j) {
      const double l = lambdas[q][j];
      if (!(l >= 0 && l <= 1)) throw InvalidArgument("collision lambda must lie in [0, 1]");
      g *= l;
      p += phis[q][j];
    }
    out.gamma.push_back(g);
    out.phi.push_back(p);
  }
  return out;
}

DensityMatrix dephase(const DensityMatrix& rho, const DephasingParams& params) {
  const int n = rho.num_qubits();
  params.validate(n);
  std::vector<Complex> up(static_cast<std::size_t>(n));  // factor for row bit 0, column bit 1
  for (int q = 0; q < n; ++q) up[static_cast<std::size_t>(q)] = std::polar(params.gamma[static_cast<std::size_t>(q)], params.phi[static_cast<std::size_t>(q)]);

  CMatrix out = rho.matrix();
  const std::uint64_t d = rho.dimension();
  for (std::uint64_t r = 0; r < d; ++r) {
    for (std::uint64_t c = 0; c < d; ++c) {
      const std::uint64_t diff = r ^ c;
      if (diff == 0) continue;
      Complex f = 1;
      for (int q = 1; q <= n; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << (n - q);
        if (!(diff & bit)) continue;
        const Complex u = up[static_cast<std::size_t>(q - 1)];
        f *= (r & bit) ? std::conj(u) : u;
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *= f;
    }
  }
  return DensityMatrix(n, std::move(out));
}

std::vector<QubitSet> table_splits() { return metrics::nontrivial_splits(4); }

std::string split_label(const QubitSet& split, int num_qubits) {
  split.validate(num_qubits);
  std::string out;
  bool open = false;
  for (int q = 1; q <= num_qubits; ++q) {
    const bool in = split.contains(q);
    if (in && !open) out += '(';
    if (!in && open) out += ')';
    open = in;
    out += "A" + std::to_string(q);
  }
  if (open) out += ')';
  return out;
}

SplitValues closed_form_bell(const std::array<double, 4>& gamma) { return common_terms(gamma); }

SplitValues closed_form_mirror(const std::array<double, 4>& gamma) {
  SplitValues v = common_terms(gamma);
  const double all = gamma[0] * gamma[1] * gamma[2] * gamma[3] + gamma[0] * gamma[3] + gamma[1] * gamma[2];
  v[6] = std::max(0.25 * (all - 1.0), 0.0);
  return v;
}

NegativityTable negativity_table(const StateVector& state, const DephasingParams& params) {
  if (state.num_qubits() != 4) throw InvalidArgument("negativity tables are defined for four qubits");
  const DensityMatrix rho = dephase(DensityMatrix::pure(state), params);

  NegativityTable table;
  std::optional<SplitValues> closed;
  const std::array<double, 4> g{params.gamma[0], params.gamma[1], params.gamma[2], params.gamma[3]};
  if (same_state(state, states::mirror_state(2))) {
    table.family = "mirror";
    closed = closed_form_mirror(g);
  } else if (same_state(state, states::rearranged_bell(2))) {
    table.family = "bell-rearranged";
    closed = closed_form_bell(g);
  } else {
    table.family = "other";
  }

  const auto splits = table_splits();
  for (std::size_t i = 0; i < splits.size(); ++i) {
    NegativityRow row{split_label(splits[i], 4), splits[i], metrics::negativity(rho, splits[i]).value, {}, {}};
    if (closed) {
      row.closed_form = (*closed)[i];
      row.abs_diff = std::abs(row.numeric - (*closed)[i]);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

double uniform_negativity(const StateVector& state, const QubitSet& split, double gamma) {
  const DensityMatrix rho = dephase(DensityMatrix::pure(state), DephasingParams::uniform(state.num_qubits(), gamma));
  return metrics::negativity(rho, split).value;
}

CriticalGamma critical_gamma(const StateVector& state, const QubitSet& split, double tol, double gamma_tol) {
  split.validate(state.num_qubits());
  std::vector<double> profile;
  for (int i = 0; i < kProfileSamples; ++i) {
    profile.push_back(uniform_negativity(state, split, static_cast<double>(i) / (kProfileSamples - 1)));
    if (i > 0 && profile[static_cast<std::size_t>(i)] < profile[static_cast<std::size_t>(i - 1)] - tol) {
      throw InvalidArgument("negativity is not monotone in gamma for split " + split.to_string());
    }
  }

  CriticalGamma out;
  if (profile.back() <= tol) {
    out.never_distillable = true;
    out.gamma_crit = kNeverDistillable;
    out.gamma_crit_squared = kNeverDistillable * kNeverDistillable;
    return out;
  }
  if (profile[1] > tol) return out;  // positive for every sampled gamma > 0

  const auto first = std::find_if(profile.begin(), profile.end(), [tol](double v) { return v > tol; });
  const auto idx = static_cast<int>(first - profile.begin());
  double lo = static_cast<double>(idx - 1) / (kProfileSamples - 1);
  double hi = static_cast<double>(idx) / (kProfileSamples - 1);
  while (hi - lo > gamma_tol) {
    const double mid = 0.5 * (lo + hi);
    (uniform_negativity(state, split, mid) > tol ? hi : lo) = mid;
    ++out.iterations;
  }
  out.gamma_crit = 0.5 * (lo + hi);
  out.gamma_crit_squared = out.gamma_crit * out.gamma_crit;
  return out;
}

}  // namespace mirrorstate::decoherence
