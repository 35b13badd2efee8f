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
#include <random>

#include "mirrorstate/qcore/state.hpp"

namespace mirrorstate {

/// Uniform double in [0, 1) from the top 53 bits of one draw. Unlike
/// std::uniform_real_distribution the sequence is fixed across standard
/// libraries.
double unit_draw(std::mt19937_64& rng);

/// Haar-distributed pure state from complex Gaussian amplitudes
/// (Box-Muller on unit_draw).
StateVector random_state(int num_qubits, std::mt19937_64& rng);
StateVector random_state(int num_qubits, std::uint64_t seed);

}  // namespace mirrorstate
