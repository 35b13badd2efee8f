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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "../oracles.hpp"
#include "mirrorstate/qcore.hpp"
#include "mirrorstate_cli/cli.hpp"

namespace mirrorstate::cli {
namespace {

using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("mirrorstate_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"build", "--family", "ghz"}).code, kExitUsage);
  const auto bad_n = invoke({"build", "--n", "9"});
  EXPECT_EQ(bad_n.code, kExitUsage);
  EXPECT_NE(bad_n.err.find("N must lie"), std::string::npos);
  EXPECT_EQ(invoke({"decohere"}).code, kExitUsage);  // --gamma is required
  EXPECT_EQ(invoke({"analyze", "--state", "/nonexistent.json", "--rank", "1,2"}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, kExitOk); }

TEST(Cli, BuildWritesStateFile) {
  const auto r = invoke({"build", "--family", "mirror", "--n", "2"});
  ASSERT_EQ(r.code, kExitOk);
  const StateVector s = state_from_json(r.out);
  EXPECT_LE((s.amplitudes() - oracle::mirror4()).cwiseAbs().maxCoeff(), 1e-12);
  const auto circuit = invoke({"build", "--method", "circuit", "--n", "3"});
  EXPECT_LE((state_from_json(circuit.out).amplitudes() - oracle::mirror6_grouped()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(invoke({"build", "--family", "cluster", "--method", "circuit"}).code, kExitUsage);
}

TEST(Cli, BuildCsv) {
  const auto r = invoke({"--format", "csv", "build", "--n", "1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "index,ket,re,im");
  EXPECT_NE(r.out.find("3,11,-0.70710678118654"), std::string::npos);
}

TEST(Cli, OutWritesFileAndAnalyzeReadsIt) {
  const auto dir = temp_dir("analyze");
  std::filesystem::create_directories(dir);
  const auto file = (dir / "zeta.json").string();
  ASSERT_EQ(invoke({"build", "--n", "3", "--out", file}).code, kExitOk);
  const auto r = invoke({"analyze", "--state", file, "--entropy", "3", "--rank", "1,6", "--qecc", "1,2,3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["metadata"]["subcommand"], "analyze");
  const auto& rec = j["payload"]["records"];
  EXPECT_NEAR(rec[0]["value"].get<double>(), 3.0, 1e-9);
  bool saw_rank = false;
  for (const auto& e : rec) {
    if (e["metric"] == "numerical_rank") {
      EXPECT_EQ(e["value"].get<int>(), 2);
      saw_rank = true;
    }
    if (e["metric"] == "qecc_identity_defect") EXPECT_LE(e["value"].get<double>(), 1e-10);
  }
  EXPECT_TRUE(saw_rank);
  std::filesystem::remove_all(dir);
}

TEST(Cli, TeleportBundle) {
  const auto r = invoke({"teleport", "--n", "2", "--random", "5"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["metadata"]["tool"], "mirrorstate");
  EXPECT_EQ(j["metadata"]["version"], kToolVersion);
  const auto& branches = j["payload"]["branches"];
  ASSERT_EQ(branches.size(), 16U);
  for (const auto& b : branches) EXPECT_GE(b["fidelity"].get<double>(), 1 - 1e-10);
}

TEST(Cli, TeleportTranscriptAsJsonLines) {
  const auto r = invoke({"--format", "jsonl", "teleport", "--n", "1"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  EXPECT_EQ(json::parse(first)["action"], "measure");
}

TEST(Cli, SuperdenseAll) {
  const auto r = invoke({"sdc", "--n", "2", "--all"});
  ASSERT_EQ(r.code, kExitOk);
  const auto msgs = json::parse(r.out)["payload"]["messages"];
  ASSERT_EQ(msgs.size(), 16U);
  for (const auto& m : msgs) EXPECT_TRUE(m["ok"].get<bool>());
  EXPECT_EQ(invoke({"sdc", "--n", "2", "--message", "01"}).code, kExitUsage);
}

TEST(Cli, QisReportsSupportAndFeasibility) {
  const auto ok = json::parse(invoke({"qis"}).out)["payload"];
  EXPECT_TRUE(ok["supported"].get<bool>());
  EXPECT_NEAR(ok["feasibility_bits"].get<double>(), 0.21084230031853, 1e-9);
  const auto alt = json::parse(invoke({"qis", "--layout", "1,2/3,4/5,6"}).out)["payload"];
  EXPECT_FALSE(alt["supported"].get<bool>());
  const auto bell = json::parse(invoke({"qis", "--channel", "bell-rearranged"}).out)["payload"];
  EXPECT_NEAR(bell["feasibility_bits"].get<double>(), 0.0, 1e-9);
}

TEST(Cli, DecohereDefaultsToCsv) {
  const auto r = invoke({"decohere", "--gamma", "0.5,0.5,0.5,0.5"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "split,numeric,closed_form,abs_diff");
  EXPECT_EQ(invoke({"decohere", "--gamma", "0.5,0.5"}).code, kExitUsage);
}

TEST(Cli, CriticalGamma) {
  const auto p = json::parse(invoke({"critical-gamma"}).out)["payload"];
  EXPECT_NEAR(p["gamma_crit_squared"].get<double>(), std::sqrt(2.0) - 1, 1e-6);
  const auto b = json::parse(invoke({"critical-gamma", "--state", "bell-rearranged"}).out)["payload"];
  EXPECT_TRUE(b["never_distillable"].get<bool>());
}

TEST(Cli, ReproduceBundleWritesEveryFile) {
  const auto dir = temp_dir("bundle");
  const auto r = invoke({"reproduce-paper", "--dir", dir.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const auto& f : bundle_payload_files()) EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  EXPECT_TRUE(std::filesystem::exists(dir / "manifest.json"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, FormatDoubleRoundTrips) {
  const double v = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_double(v)), v);
}

}  // namespace
}  // namespace mirrorstate::cli
