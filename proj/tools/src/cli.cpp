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

#include "mirrorstate_cli/cli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "reports.hpp"

namespace mirrorstate::cli {

namespace {

using reports::Json;

struct Common {
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string format;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json bundle(const std::string& subcommand, const Json& config, Json payload) {
  return {{"metadata", {{"tool", "mirrorstate"}, {"version", kToolVersion}, {"subcommand", subcommand},
                        {"config", config}, {"timestamp", utc_timestamp()}}},
          {"payload", std::move(payload)}};
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out == "-") {
    out << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InvalidArgument("cannot write " + c.out);
  f << text;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write " + path.string());
  f << text;
}

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("malformed ") + what + " entry '" + item + "'");
    }
  }
  if (out.size() != expected) {
    throw InvalidArgument(std::string(what) + " needs " + std::to_string(expected) + " comma-separated values");
  }
  return out;
}

StateVector load_state(const std::string& file, const std::string& family, int n) {
  if (!file.empty()) return read_state_file(file);
  return states::family_state(states::parse_family(family), n);
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::vector<std::string> bundle_payload_files() {
  return {"golden_states.json", "entropy.json", "pair_density.json", "teleport.json",
          "superdense.json",    "qis.json",     "qecc.json",         "negativity.json",
          "negativity_grid_bell_rearranged.csv", "negativity_grid_mirror.csv",
          "critical_gamma.json", "cluster.json"};
}

void reproduce_paper(const std::filesystem::path& out_dir, std::uint64_t seed, std::ostream& log) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir)) throw InvalidArgument("cannot create directory " + out_dir.string());

  auto put = [&](const std::string& name, const std::string& text) {
    write_file(out_dir / name, text);
    log << "wrote " << (out_dir / name).string() << "\n";
  };
  put("golden_states.json", json_text(reports::golden_states()));
  put("entropy.json", json_text(reports::entropy_table()));
  put("pair_density.json", json_text(reports::pair_density()));
  put("teleport.json", json_text(reports::teleport_summary(seed, 20)));
  put("superdense.json", json_text(reports::superdense_summary()));
  put("qis.json", json_text(reports::qis_summary()));
  put("qecc.json", json_text(reports::qecc_summary()));
  put("negativity.json", json_text(reports::negativity_summary(seed)));
  put("negativity_grid_bell_rearranged.csv", reports::negativity_grid_csv(states::Family::BellRearranged));
  put("negativity_grid_mirror.csv", reports::negativity_grid_csv(states::Family::Mirror));
  put("critical_gamma.json", json_text(reports::critical_gamma_summary()));
  put("cluster.json", json_text(reports::cluster_summary()));

  const Json manifest{{"tool", "mirrorstate"}, {"version", kToolVersion}, {"seed", seed},
                      {"timestamp", utc_timestamp()}, {"files", bundle_payload_files()}};
  put("manifest.json", json_text(manifest));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mirror-state simulation and verification", "mirrorstate"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "Seed for every random draw")->capture_default_str();
  app.add_option("--out", common.out, "Output path, '-' for stdout")->capture_default_str();
  app.add_option("--format", common.format, "json, csv or jsonl (transcripts)")
      ->check(CLI::IsMember({"json", "csv", "jsonl"}));

  // build
  auto* build = app.add_subcommand("build", "Construct a state and write it in the state-file format");
  std::string family = "mirror";
  std::string method = "direct";
  int n = 2;
  build->add_option("--family", family)->check(CLI::IsMember({"mirror", "bell-rearranged", "cluster"}))->capture_default_str();
  build->add_option("--method", method)->check(CLI::IsMember({"direct", "circuit"}))->capture_default_str();
  build->add_option("--n", n, "Half-size N (2N qubits)")->capture_default_str();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Entanglement diagnostics of a state");
  std::string state_file;
  std::optional<int> entropy_k;
  std::string neg_split, qecc_qubits, rank_pair;
  analyze->add_option("--state", state_file, "State file (default: --family/--n)");
  analyze->add_option("--family", family)->check(CLI::IsMember({"mirror", "bell-rearranged", "cluster"}));
  analyze->add_option("--n", n);
  analyze->add_option("--entropy", entropy_k, "Maximum entropy over all k-qubit subsets, and of qubits 1..k");
  analyze->add_option("--negativity", neg_split, "Transposed qubits, e.g. 1,4");
  analyze->add_option("--qecc", qecc_qubits, "Qubits carrying the Pauli error set");
  analyze->add_option("--rank", rank_pair, "Qubit pair, e.g. 1,6");

  // teleport
  auto* tele = app.add_subcommand("teleport", "Teleport an N-qubit state through the mirror state");
  std::string input_file, mode = "enumerate";
  std::optional<std::uint64_t> random_seed;
  tele->add_option("--n", n)->capture_default_str();
  auto* tele_input = tele->add_option("--input", input_file, "State file to teleport");
  tele->add_option("--random", random_seed, "Teleport a random state drawn from this seed")->excludes(tele_input);
  tele->add_option("--mode", mode)->check(CLI::IsMember({"enumerate", "sample"}))->capture_default_str();

  // sdc
  auto* sdc = app.add_subcommand("sdc", "Superdense coding of 2N bits");
  std::string message;
  bool all_messages = false;
  sdc->add_option("--n", n)->capture_default_str();
  auto* msg_opt = sdc->add_option("--message", message, "Bit string of length 2N");
  sdc->add_flag("--all", all_messages, "Round-trip every message")->excludes(msg_opt);

  // qis
  auto* qis = app.add_subcommand("qis", "Split a two-qubit secret between Bob and Charlie");
  std::string channel = "mirror", layout_text = "1,2,3/4/5,6", secret_file;
  qis->add_option("--channel", channel)->check(CLI::IsMember({"mirror", "bell-rearranged"}))->capture_default_str();
  qis->add_option("--n", n, "Channel half-size")->default_val(3);
  qis->add_option("--layout", layout_text, "Alice/Bob/Charlie channel qubits")->capture_default_str();
  auto* secret_opt = qis->add_option("--secret", secret_file, "Secret state file (default: random from --seed)");
  std::optional<std::uint64_t> secret_seed;
  qis->add_option("--random", secret_seed, "Random secret from this seed")->excludes(secret_opt);
  int secret_qubits = 2;
  qis->add_option("--k", secret_qubits, "Secret size for random secrets")->capture_default_str();

  // decohere
  auto* deco = app.add_subcommand("decohere", "Negativity table of a dephased four-qubit state");
  std::string deco_state = "mirror", gamma_text, phi_text = "0,0,0,0";
  deco->add_option("--state", deco_state, "mirror, bell-rearranged, or a state file")->capture_default_str();
  deco->add_option("--gamma", gamma_text, "g1,g2,g3,g4")->required();
  deco->add_option("--phi", phi_text, "p1,p2,p3,p4 in radians")->capture_default_str();

  // critical-gamma
  auto* crit = app.add_subcommand("critical-gamma", "Uniform-dephasing distillability threshold");
  std::string crit_state = "mirror", crit_split = "1,4";
  double tol = 1e-10;
  crit->add_option("--state", crit_state, "mirror, bell-rearranged, or a state file")->capture_default_str();
  crit->add_option("--split", crit_split)->capture_default_str();
  crit->add_option("--tol", tol, "Negativity threshold")->capture_default_str();

  // reproduce-paper
  auto* repro = app.add_subcommand("reproduce-paper", "Write the full verification bundle");
  std::string out_dir = "mirrorstate-bundle";
  repro->add_option("--dir", out_dir, "Bundle directory (--out is accepted as an alias)")->capture_default_str();

  if (args.empty()) {
    err << app.help();
    return kExitUsage;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const std::string default_format = deco->parsed() ? "csv" : "json";
  const std::string format = common.format.empty() ? default_format : common.format;
  Json config{{"seed", common.seed}, {"format", format}};

  try {
    if (build->parsed()) {
      const auto fam = states::parse_family(family);
      config.update({{"family", family}, {"method", method}, {"n", n}});
      StateVector s = method == "circuit" ? (fam == states::Family::Mirror ? states::mirror_from_circuit(n)
                                                                           : throw InvalidArgument("--method circuit builds only the mirror family"))
                                          : states::family_state(fam, n);
      if (format == "csv") {
        std::string text = "index,ket,re,im\n";
        for (std::uint64_t i = 0; i < s.dimension(); ++i) {
          std::string ket;
          for (int b = s.num_qubits() - 1; b >= 0; --b) ket += ((i >> b) & 1U) ? '1' : '0';
          text += std::to_string(i) + "," + ket + "," + format_double(s[i].real()) + "," + format_double(s[i].imag()) + "\n";
        }
        emit(common, out, text);
      } else {
        emit(common, out, state_to_json(s) + "\n");
      }
      return kExitOk;
    }

    if (analyze->parsed()) {
      const StateVector s = load_state(state_file, family, n);
      config.update({{"state", state_file.empty() ? family + "(n=" + std::to_string(n) + ")" : state_file}});
      const std::string input = config["state"].get<std::string>();
      Json records = Json::array();
      if (entropy_k) {
        const auto best = metrics::max_bipartite_entropy(s, *entropy_k);
        records.push_back({{"metric", "max_bipartite_entropy"}, {"input", input}, {"value", best.entropy},
                           {"subset", best.subset.members()}, {"units", "bits"}});
        const QubitSet first = QubitSet::range(1, *entropy_k);
        records.push_back({{"metric", "entanglement_entropy"}, {"input", input},
                           {"value", metrics::entanglement_entropy(s, first)}, {"subset", first.members()},
                           {"units", "bits"}});
      }
      if (!neg_split.empty()) {
        const QubitSet split = QubitSet::parse(neg_split);
        records.push_back({{"metric", "negativity"}, {"input", input},
                           {"value", metrics::negativity(DensityMatrix::pure(s), split).value},
                           {"subset", split.members()}, {"units", "sum of |negative PT eigenvalues|"}});
      }
      if (!qecc_qubits.empty()) {
        const QubitSet q = QubitSet::parse(qecc_qubits);
        records.push_back({{"metric", "qecc_identity_defect"}, {"input", input},
                           {"value", metrics::qecc_alpha(s, q).identity_defect()}, {"subset", q.members()},
                           {"units", "max |alpha_jk - delta_jk|"}});
      }
      if (!rank_pair.empty()) {
        const QubitSet pair = QubitSet::parse(rank_pair);
        if (pair.size() != 2) throw InvalidArgument("--rank needs exactly two qubits");
        records.push_back({{"metric", "numerical_rank"}, {"input", input},
                           {"value", metrics::numerical_rank(reduced_density(s, pair))}, {"subset", pair.members()},
                           {"units", "eigenvalues above 1e-9"}});
        records.push_back({{"metric", "connectedness"}, {"input", input},
                           {"value", metrics::connectedness_check(s, {pair[0], pair[1]})}, {"subset", pair.members()},
                           {"units", "max conditional concurrence"}});
      }
      if (records.empty()) throw InvalidArgument("analyze needs at least one of --entropy, --negativity, --qecc, --rank");
      if (format == "csv") {
        std::string text = "metric,input,value,subset\n";
        for (const auto& r : records) {
          std::string subset;
          for (const auto& q : r["subset"]) subset += (subset.empty() ? "" : " ") + std::to_string(q.get<int>());
          text += r["metric"].get<std::string>() + "," + input + "," + format_double(r["value"].get<double>()) + "," + subset + "\n";
        }
        emit(common, out, text);
      } else {
        emit(common, out, json_text(bundle("analyze", config, {{"records", records}})));
      }
      return kExitOk;
    }

    if (tele->parsed()) {
      const StateVector input = !input_file.empty() ? read_state_file(input_file)
                                                     : random_state(n, random_seed.value_or(common.seed));
      if (input.num_qubits() != n && !input_file.empty()) n = input.num_qubits();
      config.update({{"n", n}, {"mode", mode},
                     {"input", input_file.empty() ? "random:" + std::to_string(random_seed.value_or(common.seed)) : input_file}});
      const MeasureMode m = mode == "sample" ? MeasureMode{Sample{common.seed}} : MeasureMode{Enumerate{}};
      const auto result = protocols::teleport(input, m);
      if (format == "jsonl") {
        emit(common, out, result.transcript.to_json_lines());
      } else if (format == "csv") {
        std::string text = "outcome,label,probability,fidelity\n";
        for (const auto& b : result.branches) {
          text += std::to_string(b.outcome) + "," + b.label + "," + format_double(b.probability) + "," + format_double(b.fidelity) + "\n";
        }
        emit(common, out, text);
      } else {
        Json branches = Json::array();
        double min_fid = 1;
        for (const auto& b : result.branches) {
          branches.push_back({{"outcome", b.outcome}, {"label", b.label}, {"probability", b.probability},
                              {"fidelity", b.fidelity}, {"classical_bits", result.transcript.classical_bits(b.outcome)}});
          min_fid = std::min(min_fid, b.fidelity);
        }
        emit(common, out, json_text(bundle("teleport", config,
                                           {{"input_amplitudes", reports::amplitudes_json(input)},
                                            {"branches", branches},
                                            {"min_fidelity", min_fid},
                                            {"total_probability", result.transcript.total_probability()}})));
      }
      return kExitOk;
    }

    if (sdc->parsed()) {
      config.update({{"n", n}});
      std::vector<std::string> messages;
      if (all_messages) {
        for (std::uint64_t m = 0; m < dimension_of(2 * n); ++m) {
          std::string bits;
          for (int b = 2 * n - 1; b >= 0; --b) bits += ((m >> b) & 1U) ? '1' : '0';
          messages.push_back(bits);
        }
      } else {
        if (message.empty()) throw InvalidArgument("sdc needs --message or --all");
        messages.push_back(message);
      }
      Json rows = Json::array();
      std::string lines;
      std::string text = "message,decoded,outcome,ok\n";
      int errors = 0;
      for (const auto& msg : messages) {
        const auto r = protocols::superdense_send(msg, n);
        errors += r.decoded != msg;
        rows.push_back({{"message", msg}, {"decoded", r.decoded}, {"outcome", r.outcome}, {"ok", r.decoded == msg},
                        {"qubits_sent", r.transcript.qubits_sent(0)}});
        lines += r.transcript.to_json_lines();
        text += msg + "," + r.decoded + "," + std::to_string(r.outcome) + "," + (r.decoded == msg ? "1" : "0") + "\n";
      }
      if (format == "jsonl") emit(common, out, lines);
      else if (format == "csv") emit(common, out, text);
      else emit(common, out, json_text(bundle("sdc", config, {{"messages", rows}, {"decode_errors", errors}})));
      return kExitOk;
    }

    if (qis->parsed()) {
      const auto layout = protocols::PartyLayout::parse(layout_text);
      const StateVector ch = states::family_state(states::parse_family(channel), n);
      layout.validate(ch.num_qubits());
      const StateVector secret = !secret_file.empty() ? read_state_file(secret_file)
                                                      : random_state(secret_qubits, secret_seed.value_or(common.seed));
      config.update({{"channel", channel}, {"n", n}, {"layout", layout.to_string()},
                     {"secret", secret_file.empty() ? "random:" + std::to_string(secret_seed.value_or(common.seed)) : secret_file}});
      const double feasibility = protocols::qis_feasibility(ch, layout, secret.num_qubits());
      Json payload{{"feasibility_bits", feasibility}};
      std::optional<protocols::QisResult> result;
      try {
        result = protocols::qis_split(secret, ch, layout);
      } catch (const InvalidArgument& e) {
        payload["supported"] = false;
        payload["reason"] = e.what();
      }
      if (result) {
        payload["supported"] = true;
        Json branches = Json::array();
        double min_fid = 1;
        for (const auto& b : result->branches) {
          branches.push_back({{"alice", b.alice_outcome}, {"bob", b.bob_outcome}, {"probability", b.probability},
                              {"correction", b.correction.describe()}, {"fidelity", b.fidelity}});
          min_fid = std::min(min_fid, b.fidelity);
        }
        payload["branches"] = branches;
        payload["min_fidelity"] = min_fid;
        payload["total_probability"] = result->transcript.total_probability();
      }
      if (format == "jsonl") {
        if (!result) throw InvalidArgument(payload["reason"].get<std::string>());
        emit(common, out, result->transcript.to_json_lines());
      } else if (format == "csv") {
        std::string text = "alice,bob,probability,correction,fidelity\n";
        if (result) {
          for (const auto& b : result->branches) {
            text += std::to_string(b.alice_outcome) + "," + std::to_string(b.bob_outcome) + "," + format_double(b.probability) +
                    "," + b.correction.describe() + "," + format_double(b.fidelity) + "\n";
          }
        }
        emit(common, out, text);
      } else {
        emit(common, out, json_text(bundle("qis", config, payload)));
      }
      return kExitOk;
    }

    if (deco->parsed()) {
      const auto g = parse_list(gamma_text, 4, "--gamma");
      const auto p = parse_list(phi_text, 4, "--phi");
      const StateVector s = (deco_state == "mirror" || deco_state == "bell-rearranged")
                                ? states::family_state(states::parse_family(deco_state), 2)
                                : read_state_file(deco_state);
      config.update({{"state", deco_state}, {"gamma", g}, {"phi", p}});
      const auto table = decoherence::negativity_table(s, {g, p});
      if (format == "csv") emit(common, out, reports::negativity_table_csv(table));
      else emit(common, out, json_text(bundle("decohere", config, reports::negativity_table_json(table))));
      return kExitOk;
    }

    if (crit->parsed()) {
      const StateVector s = (crit_state == "mirror" || crit_state == "bell-rearranged")
                                ? states::family_state(states::parse_family(crit_state), 2)
                                : read_state_file(crit_state);
      const QubitSet split = QubitSet::parse(crit_split);
      config.update({{"state", crit_state}, {"split", split.members()}, {"tol", tol}});
      const auto r = decoherence::critical_gamma(s, split, tol);
      Json payload = reports::critical_gamma_json(r, split);
      payload["reading_note"] = "gamma_crit_squared is reported alongside gamma_crit because the closed form's "
                                "threshold sqrt(2) - 1 is a value of gamma^2";
      if (format == "csv") {
        emit(common, out, "gamma_crit,gamma_crit_squared,iterations,never_distillable\n" + format_double(r.gamma_crit) + "," +
                              format_double(r.gamma_crit_squared) + "," + std::to_string(r.iterations) + "," +
                              (r.never_distillable ? "1" : "0") + "\n");
      } else {
        emit(common, out, json_text(bundle("critical-gamma", config, payload)));
      }
      return kExitOk;
    }

    if (repro->parsed()) {
      const std::string dir = common.out != "-" ? common.out : out_dir;
      reproduce_paper(dir, common.seed, err);
      out << "bundle written to " << dir << "\n";
      return kExitOk;
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace mirrorstate::cli
