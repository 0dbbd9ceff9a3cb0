// Copyright 2026 The gqi Authors
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

#ifndef GQI_EXPERIMENT_HPP
#define GQI_EXPERIMENT_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gqi/discrimination.hpp"
#include "gqi/errors.hpp"
#include "gqi/probes.hpp"

namespace gqi {

enum class SweepAxis { kNone, kN0, kN1, kN2, kNs, kKappa, kNb };

std::string_view to_string(SweepAxis axis);
/// Accepts none, n0, n1, n2, ns, kappa, nb.
SweepAxis parse_sweep_axis(std::string_view text);

/// One evaluated scenario. The output fields mirror the CSV columns.
struct SweepRow {
  std::optional<double> axis_value;
  ProbeSpec probe;
  TargetScenario scenario;
  double s_star = 0.0;
  double q_min = 1.0;
  double log_error_prob = 0.0;
  double snr = 0.0;
  std::optional<double> discord;

  bool operator==(const SweepRow&) const = default;
};

struct SweepTable {
  SweepAxis axis = SweepAxis::kNone;
  std::vector<double> grid;
  std::vector<SweepRow> rows;
  /// Grid points that failed validation, one message each.
  std::vector<std::string> skipped;

  bool operator==(const SweepTable&) const = default;
};

struct SweepOptions {
  bool with_discord = false;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

SweepRow run_scenario(const ProbeSpec& probe, const TargetScenario& scenario, bool with_discord);

/// `points` values from `from` to `to` inclusive.
std::vector<double> linspace(double from, double to, std::size_t points);

/// Varies one parameter of the base probe/scenario over `grid`.
///
/// For axis ns with a two-mode base probe, each grid value N_S yields three
/// rows: an ASTM probe at the base N0 with N1 = (N_S - N0)/(2 N0 + 1), a
/// TMSV probe with N0 = N_S and a coherent probe with |alpha|^2 = N_S.
/// Rows whose parameters fail validation are skipped and reported in
/// SweepTable::skipped. Output order follows the grid regardless of threads.
SweepTable sweep(SweepAxis axis, std::span<const double> grid, const ProbeSpec& base_probe,
                 const TargetScenario& base_scenario, const SweepOptions& options = {});

/// Rows of `table` whose probe kind is `kind`, keeping axis metadata.
SweepTable filter_kind(const SweepTable& table, ProbeKind kind);

/// Least-squares slope of y against x.
double slope_fit(std::span<const double> x, std::span<const double> y);
/// Least-squares slope of SNR against transmitted photon number N_S.
double slope_fit(const SweepTable& table);

/// N_S interval used for the linear SNR fits; fit_from defaults to the
/// smallest N_S reachable from the initial TMSV, i.e. N0.
struct SlopeFitOptions {
  std::optional<double> fit_from;
  double fit_to = 4.0;
  std::size_t points = 32;
};

double astm_slope(double n0, const TargetScenario& scenario, const SlopeFitOptions& options = {});
/// Coherent-probe slope on the same N_S grid astm_slope(n0, ...) uses.
double coherent_slope(double n0, const TargetScenario& scenario, const SlopeFitOptions& options = {});

/// Raised when slope_ASTM - slope_CI keeps its sign across the bracket.
class NoSignChange : public ValidationError {
 public:
  NoSignChange(const std::string& what, double lo_gap, double hi_gap)
      : ValidationError(what), lo_gap(lo_gap), hi_gap(hi_gap) {}
  double lo_gap;
  double hi_gap;
};

struct ThresholdResult {
  double n0_star = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
};

/// Bisection for a sign change of `f` on [lo, hi], stopping once the
/// bracket is narrower than `tol`. Throws NoSignChange when f(lo) and f(hi)
/// share a sign.
ThresholdResult bisect_sign_change(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Bisection on N0 for slope_ASTM(N0) = slope_CI(N0), to `tol` in N0.
ThresholdResult advantage_threshold(const TargetScenario& scenario, const SlopeFitOptions& options = {},
                                    double lo = 0.05, double hi = 1.0, double tol = 0.005);

}  // namespace gqi

#endif  // GQI_EXPERIMENT_HPP
