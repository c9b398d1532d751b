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

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "commands.hpp"

namespace {

void add_common(CLI::App* cmd, ncgeom::cli::Options& opts) {
  cmd->add_flag("--json", opts.json, "Print the report as JSON");
  cmd->add_option("--metric", opts.metric, "Metric override file")->check(CLI::ExistingFile);
  cmd->add_option("--frame", opts.frame, "Frame override file")->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ncgeom::cli;
  CLI::App app{"Exact Levi-Civita connections for tame differential calculi over Q(i)", "ncgeom"};
  app.require_subcommand(1);
  Options opts;
  std::string spec;

  std::string preset;
  int n = 2;
  auto* gen = app.add_subcommand("gen", "Write a preset spec file");
  gen->add_option("preset", preset, "Preset name")->required();
  gen->add_option("--n", n, "Preset size")->capture_default_str();
  gen->add_option("--seed", opts.seed, "Nonzero: replace the Euclidean metric by a seeded one");
  gen->add_option("--out", opts.out, "Output path (default: stdout)");
  gen->add_flag("--json", opts.json, "Print the report as JSON");

  auto* check = app.add_subcommand("check", "Validate the calculus, tameness and metric");
  check->add_option("spec", spec, "Spec file")->required();
  add_common(check, opts);

  auto* connect = app.add_subcommand("connect", "Compute the Levi-Civita connection");
  connect->add_option("spec", spec, "Spec file")->required();
  connect->add_option("--out", opts.out, "Connection artifact path (default: stdout)");
  add_common(connect, opts);

  std::string connection;
  auto* verify = app.add_subcommand("verify", "Check a connection artifact against a spec");
  verify->add_option("spec", spec, "Spec file")->required();
  verify->add_option("connection", connection, "Connection artifact")->required();
  add_common(verify, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  Result r;
  if (*gen) r = cmd_gen(preset, n, opts);
  else if (*check) r = cmd_check(spec, opts);
  else if (*connect) r = cmd_connect(spec, opts);
  else r = cmd_verify(spec, connection, opts);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
