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
#include <vector>

#include "mirrorstate/qcore/qubit_set.hpp"

namespace mirrorstate::detail {

/// Offsets of the 2^k sub-indices of `subset` inside an n-qubit basis index.
/// Sub-index bit (k-1-j) maps to qubit subset[j], so subset[0] is the most
/// significant bit of the sub-index.
inline std::vector<std::uint64_t> subset_offsets(int num_qubits, const QubitSet& subset) {
  const int k = subset.size();
  std::vector<std::uint64_t> offsets(std::uint64_t{1} << k);
  for (std::uint64_t s = 0; s < offsets.size(); ++s) {
    std::uint64_t full = 0;
    for (int j = 0; j < k; ++j) {
      if ((s >> (k - 1 - j)) & 1U) full |= std::uint64_t{1} << (num_qubits - subset[static_cast<std::size_t>(j)]);
    }
    offsets[s] = full;
  }
  return offsets;
}

inline std::uint64_t subset_mask(int num_qubits, const QubitSet& subset) {
  std::uint64_t mask = 0;
  for (int q : subset) mask |= std::uint64_t{1} << (num_qubits - q);
  return mask;
}

}  // namespace mirrorstate::detail
