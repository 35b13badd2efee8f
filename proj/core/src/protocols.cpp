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

#include "mirrorstate/protocols.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <set>

#include <json.hpp>

#include "mirrorstate/errors.hpp"
#include "mirrorstate/metrics.hpp"
#include "mirrorstate/states.hpp"

namespace mirrorstate::protocols {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<double, 2> kTeleportAngles{0.0, kPi};
constexpr std::array<double, 4> kQisAngles{0.0, kPi / 2, kPi, 3 * kPi / 2};
constexpr double kFidelityTol = 1e-10;

CMatrix phase_matrix(int k, double angle) {
  return gates::controlled_phase(QubitSet::range(1, k), angle).matrix();
}

// First correction C (angles outer, Pauli index inner) with C * m
// proportional to the identity.
std::optional<Correction> solve_correction(const CMatrix& m, int k, std::span<const double> angles) {
  const QubitSet local = QubitSet::range(1, k);
  const auto d = m.rows();
  for (double angle : angles) {
    const CMatrix phased = phase_matrix(k, angle) * m;
    for (auto& p : all_pauli_strings(local)) {
      const CMatrix t = p.matrix() * phased;
      const Complex c = t(0, 0);
      if (std::abs(c) < kProbabilityTol) continue;
      if ((t / c - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-9) return Correction{angle, std::move(p)};
    }
  }
  return std::nullopt;
}

std::string bits_of(std::uint64_t value, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int b = 0; b < width; ++b) {
    if ((value >> (width - 1 - b)) & 1U) s[static_cast<std::size_t>(b)] = '1';
  }
  return s;
}

StateVector tensor_all(const std::vector<StateVector>& parts) {
  StateVector out = StateVector::basis(0, 0);
  for (const auto& p : parts) out = out.tensor(p);
  return out;
}

std::vector<StateVector> x_basis(int count) {
  const double s = 1.0 / std::numbers::sqrt2;
  const StateVector plus(1, (CVector(2) << s, s).finished());
  const StateVector minus(1, (CVector(2) << s, -s).finished());
  std::vector<StateVector> out;
  for (std::uint64_t idx = 0; idx < dimension_of(count); ++idx) {
    std::vector<StateVector> parts;
    for (int b = count - 1; b >= 0; --b) parts.push_back(((idx >> b) & 1U) ? minus : plus);
    out.push_back(tensor_all(parts));
  }
  return out;
}

// Position (1-based) of each qubit of `sub` inside the ascending set `all`.
QubitSet positions_in(const QubitSet& sub, const QubitSet& all) {
  std::vector<int> out;
  for (int q : sub) {
    const auto it = std::find(all.begin(), all.end(), q);
    if (it == all.end()) throw InternalError("qubit missing from residual register");
    out.push_back(static_cast<int>(it - all.begin()) + 1);
  }
  return QubitSet(std::move(out));
}

// Qubits of Bob and Charlie, ascending.
QubitSet bob_charlie(const PartyLayout& layout) {
  std::vector<int> all(layout.bob.begin(), layout.bob.end());
  all.insert(all.end(), layout.charlie.begin(), layout.charlie.end());
  std::sort(all.begin(), all.end());
  return QubitSet(std::move(all));
}

void check_qis_shape(int k, const PartyLayout& layout, int channel_qubits) {
  if (channel_qubits % 2 != 0) throw InvalidArgument("QIS channel must have an even number of qubits");
  layout.validate(channel_qubits);
  if (k < 1) throw InvalidArgument("QIS secret needs at least one qubit");
  if (layout.alice.size() < k) throw InvalidArgument("Alice must hold at least as many channel qubits as the secret");
  if (k + channel_qubits > kMaxQubits) throw InvalidArgument("QIS workspace exceeds the qubit budget");
}

}  // namespace

std::string action_name(Action action) {
  switch (action) {
    case Action::Measure: return "measure";
    case Action::SendClassical: return "send-classical";
    case Action::Encode: return "encode";
    case Action::SendQuantum: return "send-quantum";
    case Action::ApplyCorrection: return "apply-correction";
  }
  throw InternalError("unhandled action");
}

std::vector<int> ProtocolTranscript::branches() const {
  std::set<int> seen;
  for (const auto& e : events) seen.insert(e.branch);
  return {seen.begin(), seen.end()};
}

int ProtocolTranscript::classical_bits(int branch) const {
  int total = 0;
  for (const auto& e : events) {
    if (e.branch == branch && e.action == Action::SendClassical) total += e.classical_bits;
  }
  return total;
}

int ProtocolTranscript::qubits_sent(int branch) const {
  int total = 0;
  for (const auto& e : events) {
    if (e.branch == branch && e.action == Action::SendQuantum) total += e.qubits_sent;
  }
  return total;
}

double ProtocolTranscript::branch_probability(int branch) const {
  double p = 1;
  for (const auto& e : events) {
    if (e.branch == branch && e.action == Action::Measure) p *= e.probability;
  }
  return p;
}

double ProtocolTranscript::total_probability() const {
  double total = 0;
  for (int b : branches()) total += branch_probability(b);
  return total;
}

std::string ProtocolTranscript::to_json_lines() const {
  std::string out;
  for (const auto& e : events) {
    nlohmann::ordered_json j;
    j["branch"] = e.branch;
    j["actor"] = e.actor;
    j["action"] = action_name(e.action);
    j["payload"] = e.payload;
    j["probability"] = e.probability;
    j["classical_bits"] = e.classical_bits;
    j["qubits_sent"] = e.qubits_sent;
    out += j.dump();
    out += '\n';
  }
  return out;
}

StateVector Correction::apply(const StateVector& state) const {
  StateVector out = state;
  if (phase_angle != 0) out = apply_unitary(out, gates::controlled_phase(pauli.targets(), phase_angle));
  return apply_unitary(out, pauli.gate());
}

std::string Correction::describe() const {
  if (phase_angle == 0) return pauli.word();
  const long quarter = std::lround(phase_angle / (kPi / 2));
  static const std::array<const char*, 4> names{"0", "pi/2", "pi", "3pi/2"};
  const std::string angle = (quarter >= 0 && quarter < 4 && std::abs(phase_angle - quarter * kPi / 2) < 1e-12)
                                ? names[static_cast<std::size_t>(quarter)]
                                : std::to_string(phase_angle);
  return "CP(" + angle + ") " + pauli.word();
}

CorrectionTable build_correction_table(int n) {
  if (n < 1 || 3 * n > kMaxQubits) throw InvalidArgument("teleport supports 1 <= N <= 4");
  const auto basis = states::mirror_basis(n);
  const StateVector zeta = states::mirror_state(n);
  const QubitSet alice = QubitSet::range(1, 2 * n);
  const auto d = static_cast<Eigen::Index>(dimension_of(n));

  StateVector uniform = StateVector::normalized(n, CVector::Ones(d));
  CorrectionTable table;
  table.n = n;
  for (std::size_t x = 0; x < basis.states.size(); ++x) {
    CMatrix m(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
      const StateVector full = StateVector::basis(n, static_cast<std::uint64_t>(k)).tensor(zeta);
      m.col(k) = project(full, alice, basis.states[x]);
    }
    auto fix = solve_correction(m, n, kTeleportAngles);
    if (!fix) throw InternalError("no correction found for outcome " + basis.labels[x].word());

    std::vector<StateVector> checks;
    for (Eigen::Index k = 0; k < d; ++k) checks.push_back(StateVector::basis(n, static_cast<std::uint64_t>(k)));
    checks.push_back(uniform);
    for (const auto& input : checks) {
      const CVector r = project(input.tensor(zeta), alice, basis.states[x]);
      const StateVector out = fix->apply(StateVector::normalized(n, r));
      if (fidelity(out, input) < 1 - kFidelityTol) {
        throw InternalError("correction for outcome " + basis.labels[x].word() + " fails validation");
      }
    }
    table.entries.push_back(std::move(*fix));
  }
  return table;
}

TeleportResult teleport(const StateVector& input, const MeasureMode& mode) {
  return teleport(input, build_correction_table(input.num_qubits()), mode);
}

TeleportResult teleport(const StateVector& input, const CorrectionTable& table, const MeasureMode& mode) {
  const int n = input.num_qubits();
  if (table.n != n) throw InvalidArgument("correction table is for a different N");
  const auto basis = states::mirror_basis(n);
  const StateVector full = input.tensor(states::mirror_state(n));
  const auto outcomes = measure_in_basis(full, QubitSet::range(1, 2 * n), basis.states, mode);

  TeleportResult result;
  for (const auto& o : outcomes) {
    const auto& label = basis.labels[static_cast<std::size_t>(o.index)];
    const auto& fix = table.entries[static_cast<std::size_t>(o.index)];
    const StateVector out = fix.apply(o.residual);
    auto& ev = result.transcript.events;
    ev.push_back({o.index, "Alice", Action::Measure, std::to_string(o.index), o.probability, 0, 0});
    ev.push_back({o.index, "Alice", Action::SendClassical, label.bits(), 1, 2 * n, 0});
    ev.push_back({o.index, "Bob", Action::ApplyCorrection, fix.describe(), 1, 0, 0});
    result.branches.push_back({o.index, label.word(), o.probability, fidelity(out, input)});
  }
  return result;
}

SuperdenseResult superdense_send(std::string_view message, int n) {
  if (static_cast<int>(message.size()) != 2 * n) {
    throw InvalidArgument("message must have 2N = " + std::to_string(2 * n) + " bits");
  }
  const PauliString word = PauliString::from_bits(message, QubitSet::range(1, n));
  const auto basis = states::mirror_basis(n);
  const StateVector sent = apply_unitary(states::mirror_state(n), word.gate());
  const auto outcomes = measure_in_basis(sent, QubitSet::range(1, 2 * n), basis.states, Enumerate{});
  if (outcomes.size() != 1 || outcomes.front().probability < 1 - kProbabilityTol) {
    throw InternalError("encoded state is not a single mirror-basis element");
  }

  SuperdenseResult result;
  result.outcome = outcomes.front().index;
  result.decoded = basis.labels[static_cast<std::size_t>(result.outcome)].bits();
  auto& ev = result.transcript.events;
  ev.push_back({0, "Alice", Action::Encode, word.word(), 1, 0, 0});
  ev.push_back({0, "Alice", Action::SendQuantum, QubitSet::range(1, n).to_string(), 1, 0, n});
  ev.push_back({0, "Bob", Action::Measure, std::to_string(result.outcome), outcomes.front().probability, 0, 0});
  return result;
}

PartyLayout PartyLayout::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '/') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) throw InvalidArgument("layout must look like 'A/B/C', got '" + std::string(text) + "'");
  return {QubitSet::parse(parts[0]), QubitSet::parse(parts[1]), QubitSet::parse(parts[2])};
}

void PartyLayout::validate(int channel_qubits) const {
  alice.validate(channel_qubits);
  bob.validate(channel_qubits);
  charlie.validate(channel_qubits);
  if (!alice.disjoint_from(bob) || !alice.disjoint_from(charlie) || !bob.disjoint_from(charlie)) {
    throw InvalidArgument("layout parties overlap");
  }
  if (alice.size() + bob.size() + charlie.size() != channel_qubits) {
    throw InvalidArgument("layout does not cover every channel qubit");
  }
}

std::string PartyLayout::to_string() const {
  return alice.to_string() + "/" + bob.to_string() + "/" + charlie.to_string();
}

PartyLayout default_qis_layout() { return {{1, 2, 3}, {4}, {5, 6}}; }

StateVector qis_reference_secret(int k) {
  CVector v(static_cast<Eigen::Index>(dimension_of(k)));
  for (Eigen::Index m = 0; m < v.size(); ++m) v[m] = static_cast<double>(m + 1) * std::polar(1.0, static_cast<double>(m));
  return StateVector::normalized(k, std::move(v));
}

QubitSet qis_alice_measured(int k, const PartyLayout& layout) {
  if (layout.alice.size() < k) throw InvalidArgument("Alice must hold at least as many channel qubits as the secret");
  std::vector<int> order;
  for (int j = 0; j < k; ++j) {
    order.push_back(j + 1);
    order.push_back(k + layout.alice[static_cast<std::size_t>(j)]);
  }
  for (int j = k; j < layout.alice.size(); ++j) order.push_back(k + layout.alice[static_cast<std::size_t>(j)]);
  return QubitSet(std::move(order));
}

std::vector<StateVector> qis_alice_basis(int k, const PartyLayout& layout) {
  if (layout.alice.size() < k) throw InvalidArgument("Alice must hold at least as many channel qubits as the secret");
  const int extra = layout.alice.size() - k;
  const double s = 1.0 / std::numbers::sqrt2;
  const Complex i(0, 1);
  const std::array<StateVector, 2> y{StateVector(1, (CVector(2) << s, i * s).finished()),
                                     StateVector(1, (CVector(2) << s, -i * s).finished())};
  const std::array<StateVector, 4> bell{states::bell_state(states::Bell::PsiPlus), states::bell_state(states::Bell::PsiMinus),
                                        states::bell_state(states::Bell::PhiPlus), states::bell_state(states::Bell::PhiMinus)};
  const int bits = 2 * k + extra;
  std::vector<StateVector> out;
  for (std::uint64_t idx = 0; idx < dimension_of(bits); ++idx) {
    std::vector<StateVector> parts;
    int shift = bits;
    for (int j = 0; j < k; ++j) {
      shift -= 2;
      parts.push_back(bell[(idx >> shift) & 3U]);
    }
    for (int j = 0; j < extra; ++j) {
      shift -= 1;
      parts.push_back(y[(idx >> shift) & 1U]);
    }
    out.push_back(tensor_all(parts));
  }
  return out;
}

QubitSet qis_charlie_output(int k, int n, const PartyLayout& layout) {
  std::vector<int> out;
  for (int j = 0; j < k; ++j) {
    const int partner = 2 * n + 1 - layout.alice[static_cast<std::size_t>(j)];
    if (!layout.charlie.contains(partner)) {
      throw InvalidArgument("unsupported layout: mirror partner " + std::to_string(partner) + " is not Charlie's");
    }
    out.push_back(partner);
  }
  return QubitSet(std::move(out));
}

QisResult qis_split(const StateVector& secret, const StateVector& channel, const PartyLayout& layout) {
  const int k = secret.num_qubits();
  const int c = channel.num_qubits();
  check_qis_shape(k, layout, c);
  const int n = c / 2;
  if (layout.charlie.size() != k) throw InvalidArgument("unsupported layout: Charlie must hold exactly k qubits");
  const QubitSet output = qis_charlie_output(k, n, layout);

  const QubitSet measured = qis_alice_measured(k, layout);
  const auto alice_basis = qis_alice_basis(k, layout);
  const QubitSet rest = bob_charlie(layout);  // residual register after Alice, ascending
  const QubitSet bob_pos = positions_in(layout.bob, rest);
  const auto bob_basis = x_basis(layout.bob.size());
  const QubitSet charlie_sorted = layout.charlie.sorted();
  const QubitSet output_pos = positions_in(output, charlie_sorted);

  // Joint Alice+Bob bra over (measured, bob qubits) for solving corrections.
  std::vector<int> joint(measured.begin(), measured.end());
  for (int q : layout.bob) joint.push_back(k + q);
  const QubitSet joint_set(joint);

  const StateVector full = secret.tensor(channel);
  const auto d = static_cast<Eigen::Index>(dimension_of(k));
  QisResult result;
  for (const auto& a : measure_in_basis(full, measured, alice_basis, Enumerate{})) {
    for (const auto& b : measure_in_basis(a.residual, bob_pos, bob_basis, Enumerate{})) {
      const StateVector bra = alice_basis[static_cast<std::size_t>(a.index)].tensor(bob_basis[static_cast<std::size_t>(b.index)]);
      CMatrix m(d, d);
      for (Eigen::Index s = 0; s < d; ++s) {
        const StateVector ket = StateVector::basis(k, static_cast<std::uint64_t>(s)).tensor(channel);
        const CVector r = project(ket, joint_set, bra);  // Charlie, ascending
        CVector reordered(d);
        for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(d); ++x) {
          // bit for output qubit j comes from its position in the ascending register
          std::uint64_t src = 0;
          for (int j = 0; j < k; ++j) {
            if ((x >> (k - 1 - j)) & 1U) src |= std::uint64_t{1} << (k - output_pos[static_cast<std::size_t>(j)]);
          }
          reordered[static_cast<Eigen::Index>(x)] = r[static_cast<Eigen::Index>(src)];
        }
        m.col(s) = reordered;
      }
      auto fix = solve_correction(m, k, kQisAngles);
      if (!fix) {
        throw InvalidArgument("unsupported layout " + layout.to_string() +
                              ": no controlled-phase/Pauli correction for a branch");
      }
      const StateVector charlie = permute_qubits(b.residual, output_pos);
      const StateVector out = fix->apply(charlie);

      const int branch = a.index * static_cast<int>(bob_basis.size()) + b.index;
      auto& ev = result.transcript.events;
      ev.push_back({branch, "Alice", Action::Measure, std::to_string(a.index), a.probability, 0, 0});
      ev.push_back({branch, "Alice", Action::SendClassical, bits_of(static_cast<std::uint64_t>(a.index), measured.size()),
                    1, measured.size(), 0});
      ev.push_back({branch, "Bob", Action::Measure, std::to_string(b.index), b.probability, 0, 0});
      ev.push_back({branch, "Bob", Action::SendClassical,
                    bits_of(static_cast<std::uint64_t>(b.index), layout.bob.size()), 1, layout.bob.size(), 0});
      ev.push_back({branch, "Charlie", Action::ApplyCorrection, fix->describe(), 1, 0, 0});
      result.branches.push_back(
          {a.index, b.index, a.probability * b.probability, *fix, fidelity(out, secret), a.residual});
    }
  }
  return result;
}

QisResult qis_split(const StateVector& secret, const PartyLayout& layout, int n) {
  return qis_split(secret, states::mirror_state(n), layout);
}

double qis_feasibility(const StateVector& channel, const PartyLayout& layout, int k) {
  check_qis_shape(k, layout, channel.num_qubits());
  const StateVector full = qis_reference_secret(k).tensor(channel);
  const QubitSet rest = bob_charlie(layout);
  const QubitSet bob_pos = positions_in(layout.bob, rest);
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& a : measure_in_basis(full, qis_alice_measured(k, layout), qis_alice_basis(k, layout), Enumerate{})) {
    worst = std::min(worst, metrics::entanglement_entropy(a.residual, bob_pos));
  }
  return worst;
}

}  // namespace mirrorstate::protocols
