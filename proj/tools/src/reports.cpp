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

#include "reports.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "mirrorstate_cli/cli.hpp"

namespace mirrorstate::cli::reports {

namespace {

constexpr std::array<double, 5> kGridGammas{0.0, 0.25, 0.5, 0.75, 1.0};

StateVector from_kets(int n, const std::vector<std::pair<std::string, double>>& terms) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dimension_of(n)));
  for (const auto& [ket, amp] : terms) v[static_cast<Eigen::Index>(std::stoull(ket, nullptr, 2))] += amp;
  return StateVector::normalized(n, std::move(v));
}

double max_diff(const StateVector& a, const StateVector& b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

std::string ket_bits(std::uint64_t value, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int b = 0; b < width; ++b) {
    if ((value >> (width - 1 - b)) & 1U) s[static_cast<std::size_t>(b)] = '1';
  }
  return s;
}

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

// Linear map from an input register (qubits 1..k) to the unmeasured qubits
// after projecting `measured` onto `bra`, with output qubits reordered by
// `output_order` (positions within the ascending residual register).
CMatrix induced_map(int k, const StateVector& channel, const QubitSet& measured, const StateVector& bra,
                    const QubitSet& output_order) {
  const auto d = static_cast<Eigen::Index>(dimension_of(k));
  const int out_qubits = output_order.size();
  CMatrix m(static_cast<Eigen::Index>(dimension_of(out_qubits)), d);
  for (Eigen::Index s = 0; s < d; ++s) {
    const CVector r = project(StateVector::basis(k, static_cast<std::uint64_t>(s)).tensor(channel), measured, bra);
    for (std::uint64_t x = 0; x < dimension_of(out_qubits); ++x) {
      std::uint64_t src = 0;
      for (int j = 0; j < out_qubits; ++j) {
        if ((x >> (out_qubits - 1 - j)) & 1U) src |= std::uint64_t{1} << (out_qubits - output_order[static_cast<std::size_t>(j)]);
      }
      m(static_cast<Eigen::Index>(x), s) = r[static_cast<Eigen::Index>(src)];
    }
  }
  return m;
}

int matrix_rank(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  const double top = s.size() ? s[0] : 0;
  return static_cast<int>((s.array() > 1e-9 * std::max(top, 1.0)).count());
}

// M^dag M proportional to the identity.
bool proportional_to_unitary(const CMatrix& m) {
  const CMatrix g = m.adjoint() * m;
  const Complex c = g(0, 0);
  return std::abs(c) > kProbabilityTol &&
         (g / c - CMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= 1e-9;
}

}  // namespace

Json amplitudes_json(const StateVector& state) {
  Json a = Json::array();
  for (std::uint64_t i = 0; i < state.dimension(); ++i) a.push_back(complex_json(state[i]));
  return a;
}

Json golden_states() {
  const double h = 0.5;
  const StateVector expected4 = from_kets(4, {{"0000", h}, {"0110", h}, {"1001", h}, {"1111", -h}});
  // |00>|psi+>|00> + |01>|psi+>|10> + |11>|psi->|11> + |10>|psi+>|01>, kets in qubit order
  const double e = 1.0;
  const StateVector expected6 = from_kets(6, {{"000000", e}, {"001100", e}, {"010010", e}, {"011110", e},
                                              {"110011", e}, {"111111", -e}, {"100001", e}, {"101101", e}});
  Json circuit = Json::array();
  for (int n = 1; n <= 4; ++n) {
    circuit.push_back({{"n", n},
                       {"max_abs_diff", max_diff(states::mirror_from_circuit(n), states::mirror_state(n))}});
  }
  Json schedules = Json::array();
  for (int n = 1; n <= 5; ++n) {
    Json pairs = Json::array();
    for (const auto& [a, b] : states::swap_schedule(n).pairs) pairs.push_back({a, b});
    schedules.push_back({{"n", n}, {"pairs", pairs}});
  }
  return {{"semantics", "componentwise max |direct - reference| of state amplitudes"},
          {"mirror_n2", {{"ket", states::mirror_state(2).to_ket_string()},
                         {"max_abs_diff", max_diff(states::mirror_state(2), expected4)}}},
          {"mirror_n3_grouped", {{"ket", states::mirror_state(3).to_ket_string()},
                                 {"max_abs_diff", max_diff(states::mirror_state(3), expected6)}}},
          {"circuit_vs_direct", circuit},
          {"swap_schedules", schedules}};
}

Json entropy_table() {
  Json rows = Json::array();
  for (int n = 2; n <= 4; ++n) {
    const StateVector zeta = states::mirror_state(n);
    for (int k = 1; k <= n; ++k) {
      const double s = metrics::entanglement_entropy(zeta, QubitSet::range(1, k));
      rows.push_back({{"n", n}, {"k", k}, {"entropy_bits", s}, {"abs_diff_from_k", std::abs(s - k)}});
    }
  }
  return {{"semantics", "von Neumann entropy of qubits 1..k of the 2N-qubit mirror state"},
          {"units", "bits"},
          {"rows", rows}};
}

Json pair_density() {
  Json rows = Json::array();
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      const auto c = metrics::compare_pair_density(n, j);
      rows.push_back({{"n", n}, {"j", j}, {"pair", {j, 2 * n - j + 1}}, {"rank", c.rank},
                      {"formula_max_abs_diff", c.max_abs_diff}, {"formula_agrees", c.agrees}});
    }
  }
  return {{"semantics", "reduced state of symmetric pair (j, 2N-j+1): numerical rank and closed-form agreement"},
          {"rows", rows}};
}

Json teleport_summary(std::uint64_t seed, int inputs_per_n) {
  Json rows = Json::array();
  for (int n = 1; n <= 3; ++n) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
    const auto table = protocols::build_correction_table(n);
    int phase_prefixes = 0;
    bool label_is_correction = true;
    const auto labels = all_pauli_strings(QubitSet::range(1, n));
    for (std::size_t x = 0; x < table.entries.size(); ++x) {
      if (table.entries[x].phase_angle != 0) ++phase_prefixes;
      if (table.entries[x].pauli.word() != labels[x].word()) label_is_correction = false;
    }
    double min_fid = 1;
    double max_prob_dev = 0;
    std::size_t min_branches = SIZE_MAX;
    int bits = 0;
    for (int t = 0; t < inputs_per_n; ++t) {
      const auto result = protocols::teleport(random_state(n, rng), table, Enumerate{});
      min_branches = std::min(min_branches, result.branches.size());
      for (const auto& b : result.branches) {
        min_fid = std::min(min_fid, b.fidelity);
        max_prob_dev = std::max(max_prob_dev, std::abs(b.probability - std::pow(4.0, -n)));
        bits = std::max(bits, result.transcript.classical_bits(b.outcome));
      }
    }
    rows.push_back({{"n", n}, {"inputs", inputs_per_n}, {"branches_per_input", min_branches},
                    {"min_fidelity", min_fid}, {"max_probability_deviation", max_prob_dev},
                    {"classical_bits_per_branch", bits}, {"controlled_phase_prefixes", phase_prefixes},
                    {"correction_equals_outcome_label", label_is_correction}});
  }
  return {{"semantics", "teleportation through the mirror state, every outcome enumerated"},
          {"seed", seed},
          {"rows", rows},
          {"reference_outcome", reference_outcome_analysis()}};
}

Json reference_outcome_analysis() {
  const StateVector zeta = states::mirror_state(3);
  const std::vector<std::string> literal{"000100", "001000", "011111", "111110",
                                         "100001", "100011", "101010", "010101"};
  std::vector<std::string> fixed = literal;
  std::replace(fixed.begin(), fixed.end(), std::string("100011"), std::string("110011"));
  // input coefficient alpha_m multiplies this ket
  const std::array<std::string, 8> alpha_kets{"000", "001", "011", "111", "110", "101", "100", "010"};
  const auto basis = states::mirror_basis(3);

  auto analyse = [&](const std::vector<std::string>& kets, const QubitSet& measured, const QubitSet& bob_order) {
    std::vector<std::pair<std::string, double>> terms;
    for (const auto& k : kets) terms.emplace_back(k, 1.0);
    const StateVector bra = from_kets(6, terms);
    const CMatrix m = induced_map(3, zeta, measured, bra, bob_order);
    Json collapse = Json::array();
    for (Eigen::Index out = 0; out < m.rows(); ++out) {
      Json contributions = Json::array();
      for (int a = 0; a < 8; ++a) {
        const Complex c = m(out, static_cast<Eigen::Index>(std::stoull(alpha_kets[static_cast<std::size_t>(a)], nullptr, 2)));
        if (std::abs(c) > 1e-12) contributions.push_back({{"alpha", a + 1}, {"coefficient", complex_json(c)}});
      }
      if (!contributions.empty()) {
        collapse.push_back({{"bob_ket", ket_bits(static_cast<std::uint64_t>(out), 3)}, {"terms", contributions}});
      }
    }
    double overlap = 0;
    for (const auto& b : basis.states) overlap = std::max(overlap, fidelity(b, bra));
    return Json{{"measurement_kets", kets},
                {"max_overlap_with_mirror_basis", overlap},
                {"bob_map_rank", matrix_rank(m)},
                {"bob_map_is_unitary_up_to_scale", proportional_to_unitary(m)},
                {"simulated_collapse", collapse}};
  };

  // Protocol layout: Alice measures input (1,2,3) and channel (1,2,3); Bob keeps channel (4,5,6).
  const QubitSet natural_measured = QubitSet::range(1, 6);
  const QubitSet natural_bob{1, 2, 3};
  // Alternative reading: kets ordered (a,b,c,1,6,3); Bob keeps channel (4,5,2).
  const QubitSet abc163_measured{1, 2, 3, 4, 9, 6};
  const QubitSet abc163_bob{2, 3, 1};  // residual register is channel (2,4,5)
  return {{"semantics", "map induced on Bob's three qubits by the quoted six-qubit measurement outcome"},
          {"quoted_bob_state_repeats_ket_100", true},
          {"natural_order", {{"literal", analyse(literal, natural_measured, natural_bob)},
                             {"single_ket_fix_100011_to_110011", analyse(fixed, natural_measured, natural_bob)}}},
          {"abc163_order", {{"literal", analyse(literal, abc163_measured, abc163_bob)},
                            {"single_ket_fix_100011_to_110011", analyse(fixed, abc163_measured, abc163_bob)}}}};
}

Json superdense_summary() {
  Json rows = Json::array();
  for (int n = 1; n <= 3; ++n) {
    int errors = 0;
    std::vector<bool> seen(dimension_of(2 * n), false);
    bool bijective = true;
    int qubits = 0;
    for (std::uint64_t msg = 0; msg < dimension_of(2 * n); ++msg) {
      const std::string bits = ket_bits(msg, 2 * n);
      const auto r = protocols::superdense_send(bits, n);
      if (r.decoded != bits) ++errors;
      if (seen[static_cast<std::size_t>(r.outcome)]) bijective = false;
      seen[static_cast<std::size_t>(r.outcome)] = true;
      qubits = std::max(qubits, r.transcript.qubits_sent(0));
    }
    const auto basis = states::mirror_basis(n);
    std::vector<metrics::EnsembleMember> ensemble;
    for (const auto& s : basis.states) ensemble.push_back({1.0 / static_cast<double>(basis.states.size()), DensityMatrix::pure(s)});
    const double chi = metrics::holevo_quantity(ensemble);
    rows.push_back({{"n", n}, {"messages", dimension_of(2 * n)}, {"decode_errors", errors},
                    {"outcome_map_bijective", bijective}, {"qubits_sent", qubits},
                    {"holevo_bits", chi}, {"holevo_abs_diff_from_2n", std::abs(chi - 2 * n)}});
  }
  return {{"semantics", "exhaustive superdense round trip and Holevo quantity of the mirror-basis ensemble"},
          {"units", "bits"},
          {"rows", rows}};
}

Json qis_summary() {
  const auto layout = protocols::default_qis_layout();
  const StateVector secret = protocols::qis_reference_secret(2);
  const StateVector mirror = states::mirror_state(3);
  const StateVector bell = states::rearranged_bell(3);

  auto run_json = [&](const StateVector& channel) {
    const auto r = protocols::qis_split(secret, channel, layout);
    double min_fid = 1;
    std::map<std::string, int> phases;
    for (const auto& b : r.branches) {
      min_fid = std::min(min_fid, b.fidelity);
      ++phases[b.correction.phase_angle == 0 ? "none" : b.correction.describe().substr(0, b.correction.describe().find(' '))];
    }
    Json hist = Json::object();
    for (const auto& [k, v] : phases) hist[k] = v;
    return Json{{"branches", r.branches.size()},
                {"min_fidelity", min_fid},
                {"total_probability", r.transcript.total_probability()},
                {"phase_prefix_histogram", hist}};
  };

  // Target collapse on Bob-Charlie (4,5,6): a00|000> - a01|111> + a10|001> + a11|110>.
  const auto& s = secret.amplitudes();
  CVector quoted = CVector::Zero(8);
  quoted[0] = s[0];
  quoted[7] = -s[1];
  quoted[1] = s[2];
  quoted[6] = s[3];
  const StateVector quoted_state = StateVector::normalized(3, quoted);
  const auto mirror_run = protocols::qis_split(secret, mirror, layout);
  double best = 0;
  for (const auto& b : mirror_run.branches) {
    std::vector<int> order{1, 2, 3};
    do {
      best = std::max(best, fidelity(permute_qubits(b.after_alice, QubitSet(order)), quoted_state));
    } while (std::next_permutation(order.begin(), order.end()));
  }

  // The quoted outcome |x>|psi+>|xx> on Alice's (s1, s2, c1, c2, c3).
  const double r = 0.5;
  const StateVector quoted_outcome = from_kets(5, {{"00000", r}, {"01100", r}, {"10011", r}, {"11111", r}});
  const CVector after = project(secret.tensor(mirror), QubitSet::range(1, 5), quoted_outcome);
  const StateVector after_state = StateVector::normalized(3, after);
  CVector structural = CVector::Zero(8);
  structural[0] = s[0];
  structural[1] = s[1];
  structural[6] = s[2];
  structural[7] = -s[3];

  const auto alt = protocols::PartyLayout::parse("1,2/3,4/5,6");
  auto supported = [&](const StateVector& channel) {
    try {
      protocols::qis_split(secret, channel, alt);
      return true;
    } catch (const InvalidArgument&) {
      return false;
    }
  };

  const StateVector full = secret.tensor(mirror);
  auto purity_of = [&](const QubitSet& q) { return reduced_density(full, q).purity(); };

  return {{"semantics", "two-qubit secret split over a six-qubit channel; fidelity of Charlie's corrected state"},
          {"layout", layout.to_string()},
          {"mirror", run_json(mirror)},
          {"bell_rearranged", run_json(bell)},
          {"feasibility_bits", {{"mirror", protocols::qis_feasibility(mirror, layout, 2)},
                                {"bell_rearranged", protocols::qis_feasibility(bell, layout, 2)}}},
          {"single_party_purity", {{"alice_with_secret", purity_of({1, 2, 3, 4, 5})},
                                   {"bob", purity_of({6})},
                                   {"charlie", purity_of({7, 8})}}},
          {"quoted_collapse", {{"target", "a00|000> - a01|111> + a10|001> + a11|110> on (4,5,6)"},
                               {"best_fidelity_over_branches_and_orderings", best},
                               {"found", best >= 1 - 1e-10}}},
          {"quoted_outcome_projection", {{"alice_outcome", "|x>|psi+>|xx> on (s1,s2,1,2,3)"},
                                         {"fidelity_with_quoted_collapse", fidelity(after_state, quoted_state)},
                                         {"fidelity_with_a00_a01_a10_minus_a11_on_000_001_110_111",
                                          fidelity(after_state, StateVector::normalized(3, structural))}}},
          {"alternative_layout", {{"layout", alt.to_string()},
                                  {"feasibility_mirror", protocols::qis_feasibility(mirror, alt, 2)},
                                  {"feasibility_bell_rearranged", protocols::qis_feasibility(bell, alt, 2)},
                                  {"correctable_mirror", supported(mirror)},
                                  {"correctable_bell_rearranged", supported(bell)}}}};
}

Json qecc_summary() {
  Json rows = Json::array();
  for (int n = 2; n <= 3; ++n) {
    const auto a = metrics::qecc_alpha(states::mirror_state(n), QubitSet::range(1, n));
    rows.push_back({{"n", n}, {"error_words", a.error_set.size()}, {"identity_defect", a.identity_defect()}});
  }
  return {{"semantics", "max |<psi|E_j^dag E_k|psi> - delta_jk| over Pauli words on qubits 1..N"}, {"rows", rows}};
}

Json negativity_summary(std::uint64_t seed) {
  Json families = Json::array();
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> phis(5, std::vector<double>(4));
  for (auto& p : phis) {
    for (double& v : p) v = 2 * std::numbers::pi * unit_draw(rng);
  }
  for (auto family : {states::Family::BellRearranged, states::Family::Mirror}) {
    const StateVector psi = states::family_state(family, 2);
    std::array<double, decoherence::kSplitCount> worst{};
    double spread = 0;
    for (double g1 : kGridGammas)
      for (double g2 : kGridGammas)
        for (double g3 : kGridGammas)
          for (double g4 : kGridGammas) {
            decoherence::DephasingParams p{{g1, g2, g3, g4}, {0, 0, 0, 0}};
            const auto base = decoherence::negativity_table(psi, p);
            for (std::size_t i = 0; i < base.rows.size(); ++i) worst[i] = std::max(worst[i], *base.rows[i].abs_diff);
            for (const auto& phi : phis) {
              p.phi = phi;
              const auto t = decoherence::negativity_table(psi, p);
              for (std::size_t i = 0; i < t.rows.size(); ++i) spread = std::max(spread, std::abs(t.rows[i].numeric - base.rows[i].numeric));
            }
          }
    Json rows = Json::array();
    const auto splits = decoherence::table_splits();
    for (std::size_t i = 0; i < splits.size(); ++i) {
      rows.push_back({{"split", decoherence::split_label(splits[i], 4)}, {"max_abs_diff", worst[i]}});
    }
    families.push_back({{"family", states::family_name(family)}, {"rows", rows}, {"phase_spread", spread}});
  }
  return {{"semantics", "numeric partial-transpose negativity vs closed form on the 5^4 gamma grid"},
          {"grid", kGridGammas},
          {"phase_vectors", phis},
          {"families", families}};
}

std::string negativity_grid_csv(states::Family family) {
  const StateVector psi = states::family_state(family, 2);
  std::string out = "g1,g2,g3,g4,split,numeric,closed_form,abs_diff\n";
  for (double g1 : kGridGammas)
    for (double g2 : kGridGammas)
      for (double g3 : kGridGammas)
        for (double g4 : kGridGammas) {
          const auto t = decoherence::negativity_table(psi, {{g1, g2, g3, g4}, {0, 0, 0, 0}});
          for (const auto& row : t.rows) {
            out += format_double(g1) + "," + format_double(g2) + "," + format_double(g3) + "," + format_double(g4) + "," +
                   row.label + "," + format_double(row.numeric) + "," + format_double(*row.closed_form) + "," +
                   format_double(*row.abs_diff) + "\n";
          }
        }
  return out;
}

Json critical_gamma_summary() {
  const QubitSet pair{1, 4};
  const auto mirror = decoherence::critical_gamma(states::mirror_state(2), pair);
  const auto bell = decoherence::critical_gamma(states::rearranged_bell(2), pair);
  const auto single = decoherence::critical_gamma(states::mirror_state(2), {1});
  double bell_max = 0;
  double mirror_min_above = 1;
  for (int i = 1; i <= 100; ++i) {
    const double g = i / 100.0;
    bell_max = std::max(bell_max, decoherence::uniform_negativity(states::rearranged_bell(2), pair, g));
    if (g > mirror.gamma_crit) {
      mirror_min_above = std::min(mirror_min_above, decoherence::uniform_negativity(states::mirror_state(2), pair, g));
    }
  }
  const double root = std::sqrt(2.0) - 1.0;
  return {{"semantics", "smallest uniform gamma with positive negativity across the split"},
          {"mirror_1_4", critical_gamma_json(mirror, pair)},
          {"mirror_1_4_checks", {{"expected_gamma_crit_squared", root},
                                 {"abs_diff_gamma_squared", std::abs(mirror.gamma_crit_squared - root)},
                                 {"abs_diff_gamma", std::abs(mirror.gamma_crit - root)},
                                 {"min_negativity_above_threshold", mirror_min_above}}},
          {"reading_note", "the quartic gamma^4 + 2 gamma^2 - 1 = 0 fixes gamma^2 = sqrt(2) - 1, so the "
                           "quoted value -1 + sqrt(2) is the threshold in gamma^2; gamma_crit itself is "
                           "sqrt(sqrt(2) - 1)"},
          {"bell_rearranged_1_4", critical_gamma_json(bell, pair)},
          {"bell_rearranged_1_4_max_negativity", bell_max},
          {"mirror_1", critical_gamma_json(single, {1})}};
}

Json cluster_summary() {
  const auto cluster = metrics::max_bipartite_entropy(states::cluster_state(6), 3);
  const auto mirror = metrics::max_bipartite_entropy(states::mirror_state(3), 3);
  const auto relabel = metrics::matching_relabelings(states::mirror_state(2), states::cluster_state(4));
  return {{"semantics", "maximum entanglement entropy over all three-qubit subsets of six qubits"},
          {"units", "bits"},
          {"cluster6", {{"max_entropy", cluster.entropy}, {"subset", cluster.subset.members()},
                        {"contiguous_1_2_3", metrics::entanglement_entropy(states::cluster_state(6), {1, 2, 3})}}},
          {"mirror6", {{"max_entropy", mirror.entropy}, {"subset", mirror.subset.members()}}},
          {"cluster2_amplitudes", amplitudes_json(states::cluster_state(2))},
          {"mirror4_vs_cluster4_matching_relabelings", relabel.size()}};
}

Json negativity_table_json(const decoherence::NegativityTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    Json row{{"split", r.label}, {"transposed", r.split.members()}, {"numeric", r.numeric}};
    row["closed_form"] = r.closed_form ? Json(*r.closed_form) : Json(nullptr);
    row["abs_diff"] = r.abs_diff ? Json(*r.abs_diff) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  return {{"family", table.family}, {"rows", rows}};
}

std::string negativity_table_csv(const decoherence::NegativityTable& table) {
  std::string out = "split,numeric,closed_form,abs_diff\n";
  for (const auto& r : table.rows) {
    out += r.label + "," + format_double(r.numeric) + "," + (r.closed_form ? format_double(*r.closed_form) : "") + "," +
           (r.abs_diff ? format_double(*r.abs_diff) : "") + "\n";
  }
  return out;
}

Json critical_gamma_json(const decoherence::CriticalGamma& result, const QubitSet& split) {
  return {{"split", split.members()},
          {"gamma_crit", result.gamma_crit},
          {"gamma_crit_squared", result.gamma_crit_squared},
          {"iterations", result.iterations},
          {"never_distillable", result.never_distillable}};
}

}  // namespace mirrorstate::cli::reports
