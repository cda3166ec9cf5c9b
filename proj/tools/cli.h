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

// Command implementations behind the decolab tool: figure-data curves,
// single-point convex-roof reports, and the acceptance sweep.

#ifndef DECOLAB_TOOLS_CLI_H_
#define DECOLAB_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "decolab/channels.h"
#include "decolab/measures.h"

namespace decolab::cli {

enum class Mode { kAnalytic, kNumeric };

struct RunConfig {
  InitialState state = InitialState::kGhz;
  ChannelKind channel = ChannelKind::kPauliZ;
  double kt_max = 1.5;
  int points = 151;
  Mode mode = Mode::kAnalytic;
  /// Integrator step for numeric mode; the coupling is fixed at k = 1 so t = kt.
  double dt = 1e-3;
  std::uint64_t seed = 0;
  /// Empty or "-" writes to standard output.
  std::string output_path;
};

struct CurveRow {
  double kt = 0.0;
  double tau3_raw = 0.0;
  double tau3_normalized = 0.0;
  int rank = 0;
  double ppt_min = 0.0;
};

inline constexpr const char* kCurveHeader = "kt,tau3_raw,tau3_normalized,rank,ppt_min";

Family family_of(InitialState state);

/// Throws kBadConfig naming the first offending field.
void validate(const RunConfig& config);

/// Rows on the inclusive uniform grid kt_i = kt_max * i / (points - 1),
/// always in grid order. Grid points are evaluated concurrently.
std::vector<CurveRow> compute_curve(const RunConfig& config, unsigned threads = 0);

/// UTF-8 CSV: the header line, then one row per line, reals with 12
/// significant digits, LF terminators.
std::string format_curve_csv(const std::vector<CurveRow>& rows);

/// compute_curve + format_curve_csv, written to config.output_path. Throws
/// kIoError if the file cannot be written.
void cmd_curve(const RunConfig& config, std::ostream& stdout_stream);

/// Largest rank for which `roof` runs without an explicit override.
inline constexpr int kRoofMaxDefaultRank = 4;

struct RoofReport {
  InitialState state;
  ChannelKind channel;
  double kt = 0.0;
  int rank = 0;
  double tau3_normalized = 0.0;
  double roof_normalized = 0.0;
  int restarts_used = 0;
  bool converged = false;

  double difference() const { return roof_normalized - tau3_normalized; }
};

/// Evolves the state analytically to kt and compares normalized tau3 with
/// the numerical convex roof. Throws kRankTooHigh for rank > 4 unless
/// allow_high_rank is set.
RoofReport compute_roof_report(InitialState state, ChannelKind channel, double kt, int restarts,
                               std::uint64_t seed, bool allow_high_rank);

void print_roof_report(std::ostream& out, const RoofReport& report);

}  // namespace decolab::cli

#endif  // DECOLAB_TOOLS_CLI_H_
