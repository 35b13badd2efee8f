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

#include "mirrorstate/qcore/qubit_set.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "mirrorstate/errors.hpp"

namespace mirrorstate {

namespace {

void check_members(const std::vector<int>& members) {
  std::unordered_set<int> seen;
  for (int q : members) {
    if (q < 1) throw InvalidArgument("qubit indices are 1-based; got " + std::to_string(q));
    if (!seen.insert(q).second) throw InvalidArgument("duplicate qubit " + std::to_string(q));
  }
}

}  // namespace

QubitSet::QubitSet(std::initializer_list<int> members) : members_(members) {
  check_members(members_);
}

QubitSet::QubitSet(std::vector<int> members) : members_(std::move(members)) {
  check_members(members_);
}

QubitSet QubitSet::range(int first, int last) {
  std::vector<int> m;
  for (int q = first; q <= last; ++q) m.push_back(q);
  return QubitSet(std::move(m));
}

QubitSet QubitSet::parse(std::string_view text) {
  std::vector<int> m;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) ++pos;
    if (pos >= text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw InvalidArgument("cannot parse qubit list '" + std::string(text) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size() && text[pos] != ',' && text[pos] != ' ') {
      throw InvalidArgument("cannot parse qubit list '" + std::string(text) + "'");
    }
    m.push_back(value);
  }
  return QubitSet(std::move(m));
}

bool QubitSet::contains(int qubit) const {
  return std::find(members_.begin(), members_.end(), qubit) != members_.end();
}

void QubitSet::validate(int num_qubits) const {
  for (int q : members_) {
    if (q > num_qubits) {
      throw InvalidArgument("qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits) +
                            "-qubit system");
    }
  }
}

QubitSet QubitSet::complement(int num_qubits) const {
  std::vector<int> out;
  for (int q = 1; q <= num_qubits; ++q) {
    if (!contains(q)) out.push_back(q);
  }
  return QubitSet(std::move(out));
}

QubitSet QubitSet::sorted() const {
  auto m = members_;
  std::sort(m.begin(), m.end());
  return QubitSet(std::move(m));
}

bool QubitSet::disjoint_from(const QubitSet& other) const {
  return std::none_of(members_.begin(), members_.end(), [&](int q) { return other.contains(q); });
}

std::string QubitSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members_[i]);
  }
  return out;
}

}  // namespace mirrorstate
