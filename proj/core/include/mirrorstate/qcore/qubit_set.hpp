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

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mirrorstate {

/// Ordered set of distinct 1-based qubit indices. Order is significant: it
/// fixes the tensor-factor order of anything built on the subset.
class QubitSet {
 public:
  QubitSet() = default;
  QubitSet(std::initializer_list<int> members);
  explicit QubitSet(std::vector<int> members);

  /// Inclusive range [first, last]; empty when last < first.
  static QubitSet range(int first, int last);
  /// Parses "1,4" or "1 4". Empty text gives the empty set.
  static QubitSet parse(std::string_view text);

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  int operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<int>& members() const { return members_; }

  bool contains(int qubit) const;
  /// Throws InvalidArgument if any member lies outside 1..num_qubits.
  void validate(int num_qubits) const;
  /// Qubits of 1..num_qubits not in this set, ascending.
  QubitSet complement(int num_qubits) const;
  QubitSet sorted() const;
  bool disjoint_from(const QubitSet& other) const;

  std::string to_string() const;

  friend bool operator==(const QubitSet&, const QubitSet&) = default;

 private:
  std::vector<int> members_;
};

}  // namespace mirrorstate
