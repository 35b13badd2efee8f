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

#include "mirrorstate/qcore/ops.hpp"
#include "mirrorstate/qcore/pauli.hpp"
#include "mirrorstate/qcore/qubit_set.hpp"
#include "mirrorstate/qcore/state.hpp"

namespace mirrorstate::protocols {

enum class Action { Measure, SendClassical, Encode, SendQuantum, ApplyCorrection };

std::string action_name(Action action);

struct TranscriptEvent {
  int branch = 0;
  std::string actor;
  Action action = Action::Measure;
  /// Outcome index, bit string, Pauli word or qubit list, depending on action.
  std::string payload;
  /// Conditional probability of a measurement outcome; 1 for other steps.
  double probability = 1;
  int classical_bits = 0;
  int qubits_sent = 0;
};

struct ProtocolTranscript {
  std::vector<TranscriptEvent> events;

  std::vector<int> branches() const;
  int classical_bits(int branch) const;
  int qubits_sent(int branch) const;
  /// Product of the measurement probabilities along a branch.
  double branch_probability(int branch) const;
  /// Sum of branch_probability over all branches; 1 for a full enumeration.
  double total_probability() const;

  /// One JSON object per event and line.
  std::string to_json_lines() const;
};

/// Controlled phase on all targets (skipped when the angle is 0), then a
/// Pauli word.
struct Correction {
  double phase_angle = 0;
  PauliString pauli;

  StateVector apply(const StateVector& state) const;
  /// "XZI", or "CP(pi/2) XZI" with a phase prefix.
  std::string describe() const;
};

/// Bob's teleport correction for every mirror-basis outcome label.
struct CorrectionTable {
  int n = 0;
  std::vector<Correction> entries;  // indexed by outcome label index
};

/// Solves each outcome's correction from the map the outcome induces on the
/// 2^N computational kets, then validates it on those kets and their uniform
/// superposition. Throws InternalError if an outcome has no solution among
/// {1, controlled-phase(pi)} x Pauli words.
CorrectionTable build_correction_table(int n);

struct TeleportBranch {
  int outcome = 0;
  std::string label;  // Pauli word of the mirror-basis outcome
  double probability = 0;
  double fidelity = 0;
};

struct TeleportResult {
  ProtocolTranscript transcript;
  std::vector<TeleportBranch> branches;
};

/// Teleports an N-qubit input through mirror_state(N). The input occupies
/// qubits 1..N, the channel N+1..3N; Alice measures 1..2N in the mirror
/// basis and Bob, holding 2N+1..3N, applies the table's correction.
TeleportResult teleport(const StateVector& input, const MeasureMode& mode);
TeleportResult teleport(const StateVector& input, const CorrectionTable& table, const MeasureMode& mode);

struct SuperdenseResult {
  ProtocolTranscript transcript;
  std::string decoded;
  int outcome = 0;
};

/// Encodes 2N bits as a Pauli word on Alice's qubits 1..N of the mirror
/// state, ships those N qubits, and decodes by a mirror-basis measurement.
SuperdenseResult superdense_send(std::string_view message, int n);

/// Qubit ownership over a channel; all three sets are disjoint and cover it.
struct PartyLayout {
  QubitSet alice;
  QubitSet bob;
  QubitSet charlie;

  /// "1,2,3/4/5,6".
  static PartyLayout parse(std::string_view text);
  void validate(int channel_qubits) const;
  std::string to_string() const;
};

/// Alice {1,2,3}, Bob {4}, Charlie {5,6} on a six-qubit channel.
PartyLayout default_qis_layout();

/// Fixed generic k-qubit secret, amplitudes proportional to (m+1) e^{i m}.
StateVector qis_reference_secret(int k);

/// Qubits Alice measures, in basis order, with the secret on 1..k and
/// channel qubit c relabelled k+c: (1, k+a1, 2, k+a2, ..., k+a_rest...).
QubitSet qis_alice_measured(int k, const PartyLayout& layout);

/// Bell basis (psi+, psi-, phi+, phi-) on each (secret_j, alice_j) pair and
/// the Y basis on Alice's remaining channel qubits; ordered like
/// qis_alice_measured.
std::vector<StateVector> qis_alice_basis(int k, const PartyLayout& layout);

/// Charlie's output qubits: the mirror partners 2N+1-a_j of Alice's first k
/// channel qubits, in that order.
QubitSet qis_charlie_output(int k, int n, const PartyLayout& layout);

struct QisBranch {
  int alice_outcome = 0;
  int bob_outcome = 0;
  double probability = 0;  // joint
  Correction correction;
  double fidelity = 0;
  /// Bob and Charlie's joint state after Alice's measurement, channel qubits
  /// ascending.
  StateVector after_alice;
};

struct QisResult {
  ProtocolTranscript transcript;
  std::vector<QisBranch> branches;
};

/// Splits `secret` over `channel` (2N qubits). Bob measures his qubits in
/// the X basis; Charlie applies a controlled phase in {0, pi/2, pi, 3pi/2}
/// and then a Pauli word. Throws InvalidArgument when the layout does not
/// admit such a correction on some branch.
QisResult qis_split(const StateVector& secret, const StateVector& channel, const PartyLayout& layout);
/// Mirror-state channel of half-size n.
QisResult qis_split(const StateVector& secret, const PartyLayout& layout, int n);

/// Minimum over Alice's outcomes of the Bob|Charlie entanglement entropy of
/// the residual state, for the reference secret on k qubits. Zero means some
/// branch leaves Bob and Charlie in a product state.
double qis_feasibility(const StateVector& channel, const PartyLayout& layout, int k);

}  // namespace mirrorstate::protocols
