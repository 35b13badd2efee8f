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
#include <string>

#include <json.hpp>

#include "mirrorstate/mirrorstate.hpp"

// Payload builders shared by the subcommands and reproduce-paper. Every
// builder is a pure function of its arguments.
namespace mirrorstate::cli::reports {

using Json = nlohmann::ordered_json;

Json amplitudes_json(const StateVector& state);

Json golden_states();
Json entropy_table();
Json pair_density();
Json teleport_summary(std::uint64_t seed, int inputs_per_n);
Json reference_outcome_analysis();
Json superdense_summary();
Json qis_summary();
Json qecc_summary();
Json negativity_summary(std::uint64_t seed);
/// Full 5^4 gamma grid for one family as CSV.
std::string negativity_grid_csv(states::Family family);
Json critical_gamma_summary();
Json cluster_summary();

Json negativity_table_json(const decoherence::NegativityTable& table);
std::string negativity_table_csv(const decoherence::NegativityTable& table);
Json critical_gamma_json(const decoherence::CriticalGamma& result, const QubitSet& split);

}  // namespace mirrorstate::cli::reports
