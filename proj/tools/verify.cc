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

#include "verify.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <system_error>

#include "cli.h"
#include "decolab/convexroof.h"
#include "decolab/error.h"
#include "decolab/measures.h"
#include "decolab/qsys.h"
#include "decolab/separability.h"

#include <unistd.h>

namespace decolab::cli {
namespace {

using Clock = std::chrono::steady_clock;

constexpr int kGridPoints = 50;
constexpr double kGridMax = 1.5;
// Only the first few failures go into the detail line.
constexpr std::size_t kMaxReported = 4;

std::vector<double> grid() {
  std::vector<double> kts(kGridPoints);
  for (int i = 0; i < kGridPoints; ++i) kts[i] = kGridMax * i / (kGridPoints - 1);
  return kts;
}

std::string label(InitialState s, ChannelKind c) {
  return std::string(state_name(s)) + "/" + std::string(channel_name(c));
}

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), format, a, b);
  return buf;
}

class Failures {
 public:
  void add(std::string what) {
    if (list_.size() < kMaxReported) list_.push_back(std::move(what));
    ++count_;
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const {
    std::string out;
    for (const auto& f : list_) out += (out.empty() ? "" : "; ") + f;
    if (count_ > list_.size()) out += "; +" + std::to_string(count_ - list_.size()) + " more";
    return out;
  }

 private:
  std::vector<std::string> list_;
  std::size_t count_ = 0;
};

class Sweep {
 public:
  explicit Sweep(const VerifyOptions& options) : opt_(options) {}

  DensityMatrix analytic(InitialState s, ChannelKind c, double kt) const {
    return DensityMatrix(opt_.analytic(s, c, kt));
  }

  double normalized_tau3(InitialState s, ChannelKind c, double kt) const {
    return tau3(analytic(s, c, kt), family_of(s)).normalized;
  }

  // Compares normalized tau3 against a closed form at every kt in `kts`.
  CheckResult closed_form(int id, std::string name, InitialState s, ChannelKind c,
                          const std::function<double(double)>& expected, double tol,
                          const std::vector<double>& kts) const {
    Failures f;
    double worst = 0.0;
    for (double kt : kts) {
      try {
        const double err = std::abs(normalized_tau3(s, c, kt) - expected(kt));
        worst = std::max(worst, err);
        if (!(err <= tol)) f.add(label(s, c) + fmt(" kt=%.6g err=%.3e", kt, err));
      } catch (const Error& e) {
        f.add(label(s, c) + fmt(" kt=%.6g: ", kt) + e.what());
      }
    }
    return finish(id, std::move(name), f, label(s, c) + fmt(" max err %.3e", worst));
  }

  CheckResult finish(int id, std::string name, const Failures& f, std::string ok_detail) const {
    CheckResult r;
    r.id = id;
    r.name = std::move(name);
    r.passed = f.empty();
    r.detail = r.passed ? std::move(ok_detail) : f.summary();
    return r;
  }

  const VerifyOptions& options() const { return opt_; }

 private:
  const VerifyOptions& opt_;
};

struct Pair {
  InitialState state;
  ChannelKind channel;
};

std::vector<Pair> all_pairs() {
  std::vector<Pair> pairs;
  for (InitialState s : kAllInitialStates) {
    for (ChannelKind c : kAllChannels) pairs.push_back({s, c});
  }
  return pairs;
}

double ghz_y_bound(double kt) {
  const double x = std::exp(-2.0 * kt);
  return 0.25 * (3.0 * x + x * x + x * x * x - 1.0);
}

double ghz_dep_bound(double kt) {
  const double u = std::exp(-4.0 * kt);
  return 0.25 * (4.0 * u * u * u + u * u - 1.0);
}

// Grid plus points straddling the zero-crossing, so the transition into the
// vanishing region is exercised and not just sampled past.
std::vector<double> grid_with_root(double root) {
  std::vector<double> kts = grid();
  for (double rel : {-1e-3, -1e-6, 0.0, 1e-6, 1e-3}) kts.push_back(root * (1.0 + rel));
  kts.push_back(2.0 * root);
  return kts;
}

CheckResult check_ghz_y(const Sweep& sw) {
  const double root = bisect_root(ghz_y_bound, 0.0, 5.0);
  auto r = sw.closed_form(
      3, "GHZ/pauli-y closed form", InitialState::kGhz, ChannelKind::kPauliY,
      [](double kt) { return std::max(0.0, ghz_y_bound(kt)); }, 1e-9, grid_with_root(root));
  r.detail += fmt(", zero-crossing kt=%.10f", root);
  return r;
}

CheckResult check_ghz_dep(const Sweep& sw) {
  const double root = bisect_root(ghz_dep_bound, 0.0, 5.0);
  auto r = sw.closed_form(
      4, "GHZ/depolarizing closed form", InitialState::kGhz, ChannelKind::kDepolarizing,
      [](double kt) { return std::max(0.0, ghz_dep_bound(kt)); }, 1e-9, grid_with_root(root));
  r.detail += fmt(", zero-crossing kt=%.10f", root);
  return r;
}

CheckResult check_w_flip_pair(const Sweep& sw) {
  Failures f;
  double worst = 0.0;
  for (double kt : grid()) {
    try {
      const double a = tau3(sw.analytic(InitialState::kW, ChannelKind::kPauliX, kt), Family::kW).raw;
      const double b = tau3(sw.analytic(InitialState::kW, ChannelKind::kPauliY, kt), Family::kW).raw;
      worst = std::max(worst, std::abs(a - b));
      if (!(std::abs(a - b) <= 1e-10)) {
        f.add(fmt("w/pauli-x vs w/pauli-y kt=%.6g diff=%.3e", kt, std::abs(a - b)));
      }
    } catch (const Error& e) {
      f.add(fmt("w/pauli-x vs w/pauli-y kt=%.6g: ", kt) + e.what());
    }
  }
  return sw.finish(6, "W pauli-x and pauli-y bounds coincide", f, fmt("max diff %.3e", worst));
}

CheckResult check_ordering(const Sweep& sw) {
  Failures f;
  for (ChannelKind c : kAllChannels) {
    for (double kt : grid()) {
      if (kt <= 0.0) continue;
      try {
        const double g = sw.normalized_tau3(InitialState::kGhz, c, kt);
        const double w = sw.normalized_tau3(InitialState::kW, c, kt);
        if (c == ChannelKind::kPauliZ) {
          if (!(w > g)) f.add(std::string(channel_name(c)) + fmt(" kt=%.6g W %.6g <= GHZ", kt, w));
        } else if ((g > 0.0 || w > 0.0) && !(g >= w)) {
          f.add(std::string(channel_name(c)) + fmt(" kt=%.6g GHZ %.6g < W", kt, g));
        }
      } catch (const Error& e) {
        f.add(std::string(channel_name(c)) + fmt(" kt=%.6g: ", kt) + e.what());
      }
    }
  }
  return sw.finish(7, "GHZ/W ordering per channel", f,
                   "W above GHZ for pauli-z; GHZ at or above W otherwise");
}

CheckResult check_integrator(const Sweep& sw) {
  Failures f;
  double worst = 0.0;
  const auto start = Clock::now();
  for (const Pair& p : all_pairs()) {
    const DensityMatrix rho0 = DensityMatrix::from_pure(initial_pure_state(p.state));
    for (double kt : {0.1, 0.5, 1.0}) {
      try {
        const DensityMatrix numeric =
            evolve_numeric(rho0, ChannelSpec(p.channel, 1.0), kt, sw.options().dt);
        const double err =
            frobenius_distance(numeric.matrix(), sw.analytic(p.state, p.channel, kt).matrix());
        worst = std::max(worst, err);
        if (!(err <= 1e-7)) f.add(label(p.state, p.channel) + fmt(" kt=%.6g err=%.3e", kt, err));
      } catch (const Error& e) {
        f.add(label(p.state, p.channel) + fmt(" kt=%.6g: ", kt) + e.what());
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > 10.0) f.add(fmt("runtime %.2fs exceeds 10s", secs));
  return sw.finish(8, "RK4 matches closed forms", f,
                   fmt("max Frobenius err %.3e in %.2fs", worst, secs));
}

CheckResult check_ranks(const Sweep& sw) {
  struct Expect {
    InitialState s;
    ChannelKind c;
    int rank;
  };
  const std::array<Expect, 8> table{{
      {InitialState::kGhz, ChannelKind::kPauliZ, 2},
      {InitialState::kGhz, ChannelKind::kPauliX, 4},
      {InitialState::kGhz, ChannelKind::kPauliY, 8},
      {InitialState::kGhz, ChannelKind::kDepolarizing, 8},
      {InitialState::kW, ChannelKind::kPauliZ, 3},
      {InitialState::kW, ChannelKind::kPauliX, 8},
      {InitialState::kW, ChannelKind::kPauliY, 8},
      {InitialState::kW, ChannelKind::kDepolarizing, 8},
  }};
  Failures f;
  for (const Expect& e : table) {
    for (double kt : {0.1, 1.0}) {
      try {
        const int rank = numerical_rank(sw.analytic(e.s, e.c, kt).matrix());
        if (rank != e.rank) {
          f.add(label(e.s, e.c) + fmt(" kt=%.6g", kt) + " rank " + std::to_string(rank) +
                " expected " + std::to_string(e.rank));
        }
      } catch (const Error& err) {
        f.add(label(e.s, e.c) + fmt(" kt=%.6g: ", kt) + err.what());
      }
    }
  }
  return sw.finish(9, "numerical ranks", f, "ranks 2,4,8,8,3,8,8,8");
}

CheckResult check_roofs(const Sweep& sw) {
  const std::array<std::pair<Pair, double>, 7> cases{{
      {{InitialState::kGhz, ChannelKind::kPauliZ}, 0.1},
      {{InitialState::kGhz, ChannelKind::kPauliZ}, 0.3},
      {{InitialState::kGhz, ChannelKind::kPauliZ}, 0.6},
      {{InitialState::kGhz, ChannelKind::kPauliX}, 0.1},
      {{InitialState::kGhz, ChannelKind::kPauliX}, 0.3},
      {{InitialState::kW, ChannelKind::kPauliZ}, 0.1},
      {{InitialState::kW, ChannelKind::kPauliZ}, 0.3},
  }};
  Failures f;
  double worst = 0.0;
  const auto start = Clock::now();
  for (const auto& [p, kt] : cases) {
    try {
      const DensityMatrix rho = sw.analytic(p.state, p.channel, kt);
      const Family family = family_of(p.state);
      RoofOptions options;
      options.restarts = sw.options().restarts;
      options.seed = sw.options().seed;
      const double roof = roof_minimize(rho, family, options).value_normalized;
      const double err = std::abs(roof - tau3(rho, family).normalized);
      worst = std::max(worst, err);
      if (!(err <= 5e-3)) f.add(label(p.state, p.channel) + fmt(" kt=%.6g |roof-tau3|=%.3e", kt, err));
    } catch (const Error& e) {
      f.add(label(p.state, p.channel) + fmt(" kt=%.6g: ", kt) + e.what());
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > 300.0) f.add(fmt("runtime %.1fs exceeds 300s", secs));
  return sw.finish(10, "convex roof meets the lower bound", f,
                   fmt("max |roof-tau3| %.3e in %.1fs", worst, secs));
}

CheckResult check_npt(const Sweep& sw) {
  Failures f;
  for (const Pair& p : all_pairs()) {
    for (double kt : {0.25, 0.5, 1.0, 2.0}) {
      try {
        const PptReport report = ppt_report(sw.analytic(p.state, p.channel, kt));
        if (!report.npt) {
          f.add(label(p.state, p.channel) +
                fmt(" kt=%.6g is PPT (min eig %.3e)", kt, report.min_eigenvalue()));
        }
      } catch (const Error& e) {
        f.add(label(p.state, p.channel) + fmt(" kt=%.6g: ", kt) + e.what());
      }
    }
  }
  return sw.finish(11, "NPT persists", f, "every pair NPT at kt 0.25,0.5,1,2");
}

CheckResult check_anchors(const Sweep& sw) {
  Failures f;
  const DensityMatrix ghz = DensityMatrix::from_pure(make_ghz());
  const DensityMatrix w = DensityMatrix::from_pure(make_w());
  const double c_ghz = pure_c3(make_ghz());
  const double c_w = pure_c3(make_w());
  const double t_ghz = tau3(ghz, Family::kNone).raw;
  const double t_w = tau3(w, Family::kNone).raw;
  if (!(std::abs(c_ghz - 1.0 / std::sqrt(2.0)) <= 1e-12)) f.add(fmt("pure_c3(GHZ)=%.15g", c_ghz));
  if (!(std::abs(c_w - std::sqrt(3.0 / 8.0)) <= 1e-12)) {
    f.add(fmt("pure_c3(W)=%.15g expected %.15g", c_w, std::sqrt(3.0 / 8.0)));
  }
  if (!(std::abs(t_ghz - 1.0) <= 1e-12)) f.add(fmt("raw tau3(GHZ)=%.15g", t_ghz));
  if (!(std::abs(t_w - std::sqrt(3.0) / 2.0) <= 1e-12)) {
    f.add(fmt("raw tau3(W)=%.15g expected %.15g", t_w, std::sqrt(3.0) / 2.0));
  }
  return sw.finish(12, "pure-state anchors", f,
                   fmt("c3 %.15g / %.15g", c_ghz, c_w) + fmt(", tau3 %.15g / %.15g", t_ghz, t_w));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

CheckResult check_determinism(const Sweep& sw) {
  namespace fs = std::filesystem;
  Failures f;
  const fs::path dir = fs::temp_directory_path();
  const std::string stem = "decolab-verify-" + std::to_string(::getpid()) + "-";
  std::array<RunConfig, 2> configs;
  configs[0].state = InitialState::kGhz;
  configs[0].channel = ChannelKind::kDepolarizing;
  configs[0].kt_max = 1.5;
  configs[0].points = 60;
  configs[1].state = InitialState::kW;
  configs[1].channel = ChannelKind::kPauliY;
  configs[1].kt_max = 0.5;
  configs[1].points = 11;
  configs[1].mode = Mode::kNumeric;
  configs[1].dt = sw.options().dt;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    std::array<fs::path, 2> paths;
    std::ostringstream unused;
    try {
      for (int run = 0; run < 2; ++run) {
        paths[run] = dir / (stem + std::to_string(i) + "-" + std::to_string(run) + ".csv");
        RunConfig config = configs[i];
        config.output_path = paths[run].string();
        cmd_curve(config, unused);
      }
      if (read_file(paths[0]) != read_file(paths[1])) {
        f.add(label(configs[i].state, configs[i].channel) + " outputs differ");
      }
    } catch (const Error& e) {
      f.add(label(configs[i].state, configs[i].channel) + ": " + e.what());
    }
    std::error_code ec;
    for (const auto& p : paths) fs::remove(p, ec);
  }
  return sw.finish(13, "curve output is byte-identical across runs", f,
                   "analytic and numeric curves reproduced exactly");
}

}  // namespace

double bisect_root(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if ((flo > 0.0) == (f(hi) > 0.0)) throw Error(Errc::kInvalidArgument, "root not bracketed");
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& options) {
  const Sweep sw(options);
  using Check = std::function<CheckResult()>;
  const std::array<Check, kNumChecks> checks{{
      [&] {
        return sw.closed_form(1, "GHZ/pauli-z closed form", InitialState::kGhz,
                              ChannelKind::kPauliZ, [](double kt) { return std::exp(-6.0 * kt); },
                              1e-10, grid());
      },
      [&] {
        return sw.closed_form(2, "GHZ/pauli-x closed form", InitialState::kGhz,
                              ChannelKind::kPauliX, [](double kt) { return std::exp(-4.0 * kt); },
                              1e-10, grid());
      },
      [&] { return check_ghz_y(sw); },
      [&] { return check_ghz_dep(sw); },
      [&] {
        return sw.closed_form(5, "W/pauli-z closed form", InitialState::kW, ChannelKind::kPauliZ,
                              [](double kt) { return std::exp(-4.0 * kt); }, 1e-10, grid());
      },
      [&] { return check_w_flip_pair(sw); },
      [&] { return check_ordering(sw); },
      [&] { return check_integrator(sw); },
      [&] { return check_ranks(sw); },
      [&] { return check_roofs(sw); },
      [&] { return check_npt(sw); },
      [&] { return check_anchors(sw); },
      [&] { return check_determinism(sw); },
  }};

  std::vector<CheckResult> results;
  for (int id = 1; id <= kNumChecks; ++id) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
      continue;
    }
    const auto start = Clock::now();
    CheckResult r;
    try {
      r = checks[id - 1]();
    } catch (const std::exception& e) {
      r.id = id;
      r.name = "check " + std::to_string(id);
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

void print_results(std::ostream& out, const std::vector<CheckResult>& results) {
  int passed = 0;
  for (const CheckResult& r : results) {
    char head[160];
    std::snprintf(head, sizeof(head), "[%s] %2d %-44s %8.2fs\n", r.passed ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.seconds);
    out << head << "       " << r.detail << '\n';
    passed += r.passed ? 1 : 0;
  }
  out << passed << "/" << results.size() << " checks passed\n";
}

}  // namespace decolab::cli
