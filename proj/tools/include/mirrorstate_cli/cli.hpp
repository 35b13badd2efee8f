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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace mirrorstate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes the full reproduction bundle into `out_dir`: deterministic payload
/// files plus manifest.json (the only file carrying a timestamp).
void reproduce_paper(const std::filesystem::path& out_dir, std::uint64_t seed, std::ostream& log);

/// Files reproduce_paper writes besides the manifest.
std::vector<std::string> bundle_payload_files();

/// %.17g, enough to round-trip any double.
std::string format_double(double value);

}  // namespace mirrorstate::cli
