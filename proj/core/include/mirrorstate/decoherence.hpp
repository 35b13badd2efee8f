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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mirrorstate/qcore/qubit_set.hpp"
#include "mirrorstate/qcore/state.hpp"

namespace mirrorstate::decoherence {

/// Per-qubit coherence attenuation gamma in [0, 1] and accumulated phase phi
/// (radians) of the collisional dephasing channel.
struct DephasingParams {
  std::vector<double> gamma;
  std::vector<double> phi;

  static DephasingParams uniform(int num_qubits, double gamma);
  /// Throws unless both lists have `num_qubits` entries and gamma is in [0, 1].
  void validate(int num_qubits) const;
};

/// gamma_i = prod_j lambda_ij and phi_i = sum_j phi_ij over each qubit's
/// collisions. A qubit with no collisions gets (1, 0).
DephasingParams gamma_from_collisions(const std::vector<std::vector<double>>& lambdas,
                                      const std::vector<std::vector<double>>& phis);

/// Multiplies each coherence |..0_i..><..1_i..| by gamma_i e^{+i phi_i} and its
/// conjugate position by gamma_i e^{-i phi_i}, qubit by qubit.
DensityMatrix dephase(const DensityMatrix& rho, const DephasingParams& params);

/// Number of four-qubit splits in a table.
inline constexpr std::size_t kSplitCount = 7;
using SplitValues = std::array<double, kSplitCount>;

/// Splits {1},{2},{3},{4},{1,2},{1,3},{1,4}; the transposed group is the one
/// in parentheses of the label, e.g. "(A1)A2A3(A4)".
std::vector<QubitSet> table_splits();
std::string split_label(const QubitSet& split, int num_qubits);

/// Closed-form negativities of the dephased four-qubit rearranged Bell
/// state, in table_splits() order.
SplitValues closed_form_bell(const std::array<double, 4>& gamma);
/// Same for the four-qubit mirror state.
SplitValues closed_form_mirror(const std::array<double, 4>& gamma);

struct NegativityRow {
  std::string label;
  QubitSet split;
  double numeric = 0;
  std::optional<double> closed_form;  // only for recognised states
  std::optional<double> abs_diff;
};

struct NegativityTable {
  std::string family;  // "mirror", "bell-rearranged" or "other"
  std::vector<NegativityRow> rows;
};

/// Dephases |state><state| and evaluates every split. The closed form is
/// attached when `state` is mirror_state(2) or rearranged_bell(2).
NegativityTable negativity_table(const StateVector& state, const DephasingParams& params);

/// Negativity across `split` after uniform dephasing with `gamma`.
double uniform_negativity(const StateVector& state, const QubitSet& split, double gamma);

struct CriticalGamma {
  /// Smallest uniform gamma with negativity above tol. 0 when the negativity
  /// is positive for every sampled gamma > 0; kNeverDistillable when it
  /// vanishes on all of [0, 1].
  double gamma_crit = 0;
  double gamma_crit_squared = 0;
  int iterations = 0;
  bool never_distillable = false;
};

inline constexpr double kNeverDistillable = 2.0;

/// Samples the uniform-gamma negativity at 101 points of [0, 1] (throwing
/// InvalidArgument if the profile decreases), then bisects the threshold to
/// `gamma_tol`.
CriticalGamma critical_gamma(const StateVector& state, const QubitSet& split, double tol = 1e-10,
                             double gamma_tol = 1e-8);

}  // namespace mirrorstate::decoherence
