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

#include <filesystem>
#include <string>
#include <string_view>

#include "mirrorstate/qcore/state.hpp"

namespace mirrorstate {

/// Convention tag stored in every state file.
inline constexpr std::string_view kStateConvention = "q1-most-significant";

/// {"num_qubits": n, "convention": "q1-most-significant",
///  "amplitudes": [[re, im], ...]}
std::string state_to_json(const StateVector& state);
StateVector state_from_json(std::string_view text);

StateVector read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const StateVector& state);

}  // namespace mirrorstate
