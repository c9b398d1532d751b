// Copyright 2026 The ncgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCGEOM_TOOLS_COMMANDS_HPP
#define NCGEOM_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace ncgeom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitInput = 2;

struct Options {
  bool json = false;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> metric;
  std::optional<std::filesystem::path> frame;
  std::uint64_t seed = 0;
};

struct Result {
  int exit_code = kExitOk;
  std::string out;  // destined for stdout
  std::string err;  // destined for stderr
};

/// Writes a preset spec file. A nonzero seed replaces the Euclidean metric
/// with a seeded constant one.
Result cmd_gen(const std::string& preset, int n, const Options& opts);
Result cmd_check(const std::filesystem::path& spec, const Options& opts);
/// Without --out the artifact goes to stdout and the report to stderr.
Result cmd_connect(const std::filesystem::path& spec, const Options& opts);
Result cmd_verify(const std::filesystem::path& spec, const std::filesystem::path& connection,
                  const Options& opts);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace ncgeom::cli

#endif  // NCGEOM_TOOLS_COMMANDS_HPP
