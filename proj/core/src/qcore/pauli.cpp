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

#include "mirrorstate/qcore/pauli.hpp"

#include "mirrorstate/errors.hpp"

namespace mirrorstate {

namespace {

// Index encoding of single-qubit Paulis: 0 -> I, 1 -> X, 2 -> Z, 3 -> Y.
constexpr Pauli kFromCode[4] = {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y};

unsigned code_of(Pauli p) {
  switch (p) {
    case Pauli::I: return 0;
    case Pauli::X: return 1;
    case Pauli::Z: return 2;
    case Pauli::Y: return 3;
  }
  return 0;
}

CMatrix single(Pauli p) {
  CMatrix m(2, 2);
  const Complex i(0, 1);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::vector<Pauli> ops, QubitSet targets) : ops_(std::move(ops)), targets_(std::move(targets)) {
  if (static_cast<int>(ops_.size()) != targets_.size()) {
    throw InvalidArgument("Pauli word length does not match target count");
  }
}

PauliString PauliString::identity(const QubitSet& targets) {
  return PauliString(std::vector<Pauli>(static_cast<std::size_t>(targets.size()), Pauli::I), targets);
}

PauliString PauliString::parse(std::string_view word, const QubitSet& targets) {
  std::vector<Pauli> ops;
  for (char c : word) {
    switch (c) {
      case 'I': ops.push_back(Pauli::I); break;
      case 'X': ops.push_back(Pauli::X); break;
      case 'Y': ops.push_back(Pauli::Y); break;
      case 'Z': ops.push_back(Pauli::Z); break;
      default: throw InvalidArgument(std::string("invalid Pauli letter '") + c + "'");
    }
  }
  return PauliString(std::move(ops), targets);
}

PauliString PauliString::from_index(std::uint64_t index, const QubitSet& targets) {
  const int k = targets.size();
  if (index >= (std::uint64_t{1} << (2 * k))) throw InvalidArgument("Pauli index out of range");
  std::vector<Pauli> ops(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    ops[static_cast<std::size_t>(j)] = kFromCode[(index >> (2 * (k - 1 - j))) & 3U];
  }
  return PauliString(std::move(ops), targets);
}

PauliString PauliString::from_bits(std::string_view bits, const QubitSet& targets) {
  if (static_cast<int>(bits.size()) != 2 * targets.size()) {
    throw InvalidArgument("expected " + std::to_string(2 * targets.size()) + " bits, got " +
                          std::to_string(bits.size()));
  }
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("message may only contain 0 and 1");
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return from_index(index, targets);
}

std::uint64_t PauliString::index() const {
  std::uint64_t index = 0;
  for (Pauli p : ops_) index = (index << 2) | code_of(p);
  return index;
}

std::string PauliString::bits() const {
  std::string out;
  for (Pauli p : ops_) {
    const unsigned c = code_of(p);
    out += (c & 2U) ? '1' : '0';
    out += (c & 1U) ? '1' : '0';
  }
  return out;
}

std::string PauliString::word() const {
  std::string out;
  for (Pauli p : ops_) out += to_char(p);
  return out;
}

int PauliString::weight() const {
  int w = 0;
  for (Pauli p : ops_) w += (p != Pauli::I);
  return w;
}

CMatrix PauliString::matrix() const {
  CMatrix m = CMatrix::Identity(1, 1);
  for (Pauli p : ops_) m = kron(m, single(p));
  return m;
}

UnitaryGate PauliString::gate() const { return UnitaryGate(matrix(), targets_, word()); }

std::vector<PauliString> all_pauli_strings(const QubitSet& targets) {
  const std::uint64_t count = std::uint64_t{1} << (2 * targets.size());
  std::vector<PauliString> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(PauliString::from_index(i, targets));
  return out;
}

}  // namespace mirrorstate
