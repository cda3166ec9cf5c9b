// Copyright 2026 The decolab Authors.
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

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.h"
#include "decolab/error.h"
#include "verify.h"

namespace {

using decolab::Errc;
using decolab::Error;
namespace cli = decolab::cli;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

decolab::InitialState state_from(const std::string& name) {
  if (auto s = decolab::parse_state(name)) return *s;
  throw Error(Errc::kBadConfig, "state must be one of ghz, w (got '" + name + "')");
}

decolab::ChannelKind channel_from(const std::string& name) {
  if (auto c = decolab::parse_channel(name)) return *c;
  throw Error(Errc::kBadConfig,
              "channel must be one of pauli-z, pauli-x, pauli-y, depolarizing (got '" + name + "')");
}

cli::Mode mode_from(const std::string& name) {
  if (name == "analytic") return cli::Mode::kAnalytic;
  if (name == "numeric") return cli::Mode::kNumeric;
  throw Error(Errc::kBadConfig, "mode must be analytic or numeric (got '" + name + "')");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-qubit entanglement decay under local decoherence"};
  app.require_subcommand(1);

  std::string state = "ghz", channel = "pauli-z", mode = "analytic";
  cli::RunConfig config;
  double kt = 0.0;
  int restarts = 32;
  bool allow_rank8 = false;

  auto* curve = app.add_subcommand("curve", "Write a tau3 curve as CSV");
  curve->add_option("--state", state, "ghz or w")->capture_default_str();
  curve->add_option("--channel", channel, "pauli-z, pauli-x, pauli-y or depolarizing")
      ->capture_default_str();
  curve->add_option("--kt-max", config.kt_max, "Upper end of the kt grid")->capture_default_str();
  curve->add_option("--points", config.points, "Number of grid points, both ends included")
      ->capture_default_str();
  curve->add_option("--mode", mode, "analytic or numeric")->capture_default_str();
  curve->add_option("--dt", config.dt, "RK4 step in numeric mode (k = 1)")->capture_default_str();
  curve->add_option("--seed", config.seed, "Recorded for reproducibility")->capture_default_str();
  curve->add_option("--out", config.output_path, "Output file; '-' or empty for stdout");

  auto* roof = app.add_subcommand("roof", "Compare tau3 with the numerical convex roof");
  roof->add_option("--state", state, "ghz or w")->capture_default_str();
  roof->add_option("--channel", channel, "pauli-z, pauli-x, pauli-y or depolarizing")
      ->capture_default_str();
  roof->add_option("--kt", kt, "Evolution time in units of 1/k")->capture_default_str();
  roof->add_option("--restarts", restarts, "Random restarts")->capture_default_str();
  roof->add_option("--seed", config.seed, "Restart seed")->capture_default_str();
  roof->add_flag("--allow-rank8", allow_rank8, "Permit states of rank above 4 (exploratory)");

  cli::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_option("--dt", verify_options.dt, "RK4 step for the integrator check")
      ->capture_default_str();
  verify->add_option("--seed", verify_options.seed, "Convex-roof restart seed")
      ->capture_default_str();
  verify->add_option("--restarts", verify_options.restarts, "Convex-roof restarts")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (curve->parsed()) {
      config.state = state_from(state);
      config.channel = channel_from(channel);
      config.mode = mode_from(mode);
      cli::cmd_curve(config, std::cout);
      return 0;
    }
    if (roof->parsed()) {
      if (!(kt >= 0.0)) throw Error(Errc::kBadConfig, "kt must be >= 0");
      if (restarts < 1) throw Error(Errc::kBadConfig, "restarts must be >= 1");
      const auto report = cli::compute_roof_report(state_from(state), channel_from(channel), kt,
                                                   restarts, config.seed, allow_rank8);
      cli::print_roof_report(std::cout, report);
      return 0;
    }
    const auto results = cli::run_acceptance(verify_options);
    cli::print_results(std::cout, results);
    return cli::all_passed(results) ? 0 : kExitFailure;
  } catch (const Error& e) {
    std::cerr << "decolab: " << e.what() << '\n';
    return e.code() == Errc::kBadConfig ? kExitUsage : kExitFailure;
  }
}
