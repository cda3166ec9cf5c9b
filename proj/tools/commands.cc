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

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "cli.h"
#include "decolab/convexroof.h"
#include "decolab/error.h"
#include "decolab/parallel.h"
#include "decolab/separability.h"

namespace decolab::cli {
namespace {

void append_real(std::string& out, double value) {
  char buf[64];
  // Normalize -0 so identical values always print identically.
  std::snprintf(buf, sizeof(buf), "%.12g", value == 0.0 ? 0.0 : value);
  out += buf;
}

DensityMatrix evolve(const RunConfig& config, double kt) {
  if (config.mode == Mode::kAnalytic) return evolve_analytic(config.state, config.channel, kt);
  const DensityMatrix rho0 = DensityMatrix::from_pure(initial_pure_state(config.state));
  return evolve_numeric(rho0, ChannelSpec(config.channel, 1.0), kt, config.dt);
}

}  // namespace

Family family_of(InitialState state) {
  return state == InitialState::kGhz ? Family::kGhz : Family::kW;
}

void validate(const RunConfig& config) {
  if (!(config.kt_max > 0.0) || !std::isfinite(config.kt_max)) {
    throw Error(Errc::kBadConfig, "kt_max must be > 0");
  }
  if (config.points < 2) throw Error(Errc::kBadConfig, "points must be >= 2");
  if (config.mode == Mode::kNumeric && (!(config.dt > 0.0) || !std::isfinite(config.dt))) {
    throw Error(Errc::kBadConfig, "dt must be > 0 in numeric mode");
  }
}

std::vector<CurveRow> compute_curve(const RunConfig& config, unsigned threads) {
  validate(config);
  const auto n = static_cast<std::size_t>(config.points);
  std::vector<CurveRow> rows(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const double kt = config.kt_max * static_cast<double>(i) / static_cast<double>(n - 1);
    const DensityMatrix rho = evolve(config, kt);
    const Tau3Result t = tau3(rho, family_of(config.state));
    rows[i] = CurveRow{kt, t.raw, t.normalized, numerical_rank(rho.matrix()),
                       ppt_report(rho).min_eigenvalue()};
  });
  return rows;
}

std::string format_curve_csv(const std::vector<CurveRow>& rows) {
  std::string out = kCurveHeader;
  out += '\n';
  for (const CurveRow& row : rows) {
    append_real(out, row.kt);
    out += ',';
    append_real(out, row.tau3_raw);
    out += ',';
    append_real(out, row.tau3_normalized);
    out += ',';
    out += std::to_string(row.rank);
    out += ',';
    append_real(out, row.ppt_min);
    out += '\n';
  }
  return out;
}

void cmd_curve(const RunConfig& config, std::ostream& stdout_stream) {
  const std::string csv = format_curve_csv(compute_curve(config));
  if (config.output_path.empty() || config.output_path == "-") {
    stdout_stream << csv;
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(Errc::kIoError, "cannot open " + config.output_path + " for writing");
  file << csv;
  file.flush();
  if (!file) throw Error(Errc::kIoError, "failed writing " + config.output_path);
}

RoofReport compute_roof_report(InitialState state, ChannelKind channel, double kt, int restarts,
                               std::uint64_t seed, bool allow_high_rank) {
  const DensityMatrix rho = evolve_analytic(state, channel, kt);
  RoofReport report{state, channel, kt};
  report.rank = numerical_rank(rho.matrix());
  if (report.rank > kRoofMaxDefaultRank && !allow_high_rank) {
    throw Error(Errc::kRankTooHigh,
                "rho has rank " + std::to_string(report.rank) +
                    "; roofs above rank 4 are exploratory (pass --allow-rank8)");
  }
  report.tau3_normalized = tau3(rho, family_of(state)).normalized;
  RoofOptions options;
  options.restarts = restarts;
  options.seed = seed;
  const RoofResult roof = roof_minimize(rho, family_of(state), options);
  report.roof_normalized = roof.value_normalized;
  report.restarts_used = roof.restarts_used;
  report.converged = roof.converged;
  return report;
}

void print_roof_report(std::ostream& out, const RoofReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "state:            %s\n"
                "channel:          %s\n"
                "kt:               %.12g\n"
                "rank:             %d\n"
                "tau3_normalized:  %.12g\n"
                "roof_normalized:  %.12g\n"
                "difference:       %.6e\n"
                "restarts_used:    %d\n"
                "converged:        %s\n",
                std::string(state_name(r.state)).c_str(),
                std::string(channel_name(r.channel)).c_str(), r.kt, r.rank, r.tau3_normalized,
                r.roof_normalized, r.difference(), r.restarts_used, r.converged ? "true" : "false");
  out << buf;
}

}  // namespace decolab::cli
