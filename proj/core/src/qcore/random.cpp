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

#include "mirrorstate/qcore/random.hpp"

#include <cmath>
#include <numbers>

namespace mirrorstate {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

StateVector random_state(int num_qubits, std::mt19937_64& rng) {
  CVector v(static_cast<Eigen::Index>(dimension_of(num_qubits)));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double u1 = 1.0 - unit_draw(rng);  // (0, 1], keeps log finite
    const double u2 = unit_draw(rng);
    v[i] = std::polar(std::sqrt(-2.0 * std::log(u1)), 2 * std::numbers::pi * u2);
  }
  return StateVector::normalized(num_qubits, std::move(v));
}

StateVector random_state(int num_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_state(num_qubits, rng);
}

}  // namespace mirrorstate
