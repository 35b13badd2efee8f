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

#include "mirrorstate/qcore/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mirrorstate/errors.hpp"

namespace mirrorstate {

using nlohmann::json;

std::string state_to_json(const StateVector& state) {
  json amps = json::array();
  for (std::uint64_t i = 0; i < state.dimension(); ++i) amps.push_back({state[i].real(), state[i].imag()});
  json doc;
  doc["num_qubits"] = state.num_qubits();
  doc["convention"] = kStateConvention;
  doc["amplitudes"] = std::move(amps);
  return doc.dump();
}

StateVector state_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("num_qubits") || !doc.contains("amplitudes")) {
    throw InvalidArgument("state file needs 'num_qubits' and 'amplitudes'");
  }
  if (doc.contains("convention") && doc["convention"] != kStateConvention) {
    throw InvalidArgument("unsupported state convention '" + doc["convention"].dump() + "'");
  }
  const int n = doc["num_qubits"].get<int>();
  const auto& amps = doc["amplitudes"];
  if (!amps.is_array()) throw InvalidArgument("'amplitudes' must be an array");
  CVector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const auto& a = amps[i];
    if (!a.is_array() || a.size() != 2) throw InvalidArgument("each amplitude must be [re, im]");
    v[static_cast<Eigen::Index>(i)] = Complex(a[0].get<double>(), a[1].get<double>());
  }
  return StateVector(n, std::move(v));
}

StateVector read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read state file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return state_from_json(buf.str());
}

void write_state_file(const std::filesystem::path& path, const StateVector& state) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write state file " + path.string());
  out << state_to_json(state) << '\n';
}

}  // namespace mirrorstate
