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

#ifndef GQI_FIGURES_HPP
#define GQI_FIGURES_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gqi/experiment.hpp"

namespace gqi {

enum class FigureProduct {
  /// A SweepTable; axis ns sweeps are split into one file per probe kind.
  kSweep,
  /// slope_ASTM and slope_CI against N0.
  kSlopes,
  /// SNR_ASTM / SNR_CI and remained discord against N_S.
  kAdvantage,
};

struct CurvePreset {
  std::string name;
  FigureProduct product = FigureProduct::kSweep;
  SweepAxis axis = SweepAxis::kNone;
  std::vector<double> grid;
  ProbeSpec probe;
  TargetScenario scenario;
};

struct FigurePreset {
  std::string id;
  std::string title;
  std::vector<CurvePreset> curves;
};

/// fig2a, fig2b, fig3a, fig3b, fig4a, fig4b, fig5.
const std::vector<FigurePreset>& figure_presets();
const FigurePreset& figure_preset(std::string_view id);

struct SlopeRow {
  double n0 = 0.0;
  double slope_astm = 0.0;
  double slope_ci = 0.0;
};
std::vector<SlopeRow> slope_curve(std::span<const double> n0_grid, const TargetScenario& scenario,
                                  const SlopeFitOptions& options = {});

struct AdvantageRow {
  double ns = 0.0;
  double snr_astm = 0.0;
  double snr_ci = 0.0;
  double advantage = 0.0;
  std::optional<double> discord;
};
/// Pairs the ASTM and coherent rows of an axis ns sweep by grid value.
std::vector<AdvantageRow> advantage_curve(const SweepTable& ns_sweep);

struct ReproduceOptions {
  bool plot = false;
  std::size_t threads = 0;
};

/// Writes the figure's CSV files (and a gnuplot script when requested) into
/// `out_dir`, creating it if needed. Returns the paths written.
std::vector<std::filesystem::path> reproduce_figure(std::string_view id, const std::filesystem::path& out_dir,
                                                    const ReproduceOptions& options = {});

}  // namespace gqi

#endif  // GQI_FIGURES_HPP
