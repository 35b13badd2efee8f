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
#include <string_view>
#include <vector>

#include "mirrorstate/qcore/gate.hpp"
#include "mirrorstate/qcore/qubit_set.hpp"

namespace mirrorstate {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);

/// Tensor product of single-qubit Paulis on an ordered set of targets.
///
/// Words are indexed with two bits per qubit, first target most significant:
/// 00 -> I, 01 -> X, 10 -> Z, 11 -> Y. The same encoding labels superdense
/// messages and mirror-basis outcomes.
class PauliString {
 public:
  PauliString(std::vector<Pauli> ops, QubitSet targets);

  static PauliString identity(const QubitSet& targets);
  /// "XIZ" on the given targets.
  static PauliString parse(std::string_view word, const QubitSet& targets);
  static PauliString from_index(std::uint64_t index, const QubitSet& targets);
  /// Inverse of bits(): a string of 2k characters '0'/'1'.
  static PauliString from_bits(std::string_view bits, const QubitSet& targets);

  const std::vector<Pauli>& ops() const { return ops_; }
  const QubitSet& targets() const { return targets_; }
  int size() const { return targets_.size(); }

  std::uint64_t index() const;
  std::string bits() const;
  std::string word() const;
  int weight() const;

  CMatrix matrix() const;
  UnitaryGate gate() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> ops_;
  QubitSet targets_;
};

/// All 4^k words on `targets`, in index order.
std::vector<PauliString> all_pauli_strings(const QubitSet& targets);

}  // namespace mirrorstate
