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

#include "gqi/figures.hpp"

#include <cstdlib>
#include <fstream>
#include <map>

#include <fmt/format.h>

#include "gqi/table_io.hpp"

namespace gqi {
namespace {

constexpr TargetScenario kBrightNoise{0.01, 3800.0, 1e7};
constexpr TargetScenario kDimNoise{0.01, 30.0, 1e7};

CurvePreset curve(std::string name, FigureProduct product, SweepAxis axis, std::vector<double> grid,
                  ProbeSpec probe, TargetScenario scenario) {
  return CurvePreset{std::move(name), product, axis, std::move(grid), probe, scenario};
}

std::vector<FigurePreset> build_presets() {
  using enum FigureProduct;
  std::vector<FigurePreset> out;

  out.push_back({"fig2a",
                 "SNR against idler squeezing N2 at fixed N_S",
                 {curve("fig2a_ns1", kSweep, SweepAxis::kN2, linspace(0.0, 3.0, 31), ProbeSpec::astm(1.0, 0.0),
                        kBrightNoise),
                  curve("fig2a_ns2", kSweep, SweepAxis::kN2, linspace(0.0, 3.0, 31),
                        ProbeSpec::astm(1.0, 1.0 / 3.0), kBrightNoise)}});

  FigurePreset fig2b{"fig2b", "SNR against N0 for several signal squeezings N1", {}};
  fig2b.curves.push_back(
      curve("fig2b_tmsv", kSweep, SweepAxis::kN0, linspace(0.1, 2.0, 20), ProbeSpec::tmsv(1.0), kBrightNoise));
  for (int n1 : {1, 2, 3}) {
    fig2b.curves.push_back(curve(fmt::format("fig2b_n1_{}", n1), kSweep, SweepAxis::kN0, linspace(0.1, 2.0, 20),
                                 ProbeSpec::astm(1.0, n1), kBrightNoise));
  }
  out.push_back(std::move(fig2b));

  out.push_back({"fig3a",
                 "SNR against N_S for ASTM (N0 = 1), TMSV and coherent probes",
                 {curve("fig3a", kSweep, SweepAxis::kNs, linspace(1.0, 4.0, 31), ProbeSpec::astm(1.0, 0.0),
                        kBrightNoise)}});

  out.push_back({"fig3b",
                 "SNR against kappa at N_S = 2",
                 {curve("fig3b_astm", kSweep, SweepAxis::kKappa, linspace(0.005, 0.1, 20),
                        ProbeSpec::astm(1.0, 1.0 / 3.0), kBrightNoise),
                  curve("fig3b_tmsv", kSweep, SweepAxis::kKappa, linspace(0.005, 0.1, 20), ProbeSpec::tmsv(2.0),
                        kBrightNoise),
                  curve("fig3b_coherent", kSweep, SweepAxis::kKappa, linspace(0.005, 0.1, 20),
                        ProbeSpec::coherent(2.0), kBrightNoise)}});

  out.push_back({"fig4a",
                 "SNR against N_S for ASTM (N0 = 0.1), TMSV and coherent probes",
                 {curve("fig4a", kSweep, SweepAxis::kNs, linspace(0.1, 4.0, 32), ProbeSpec::astm(0.1, 0.0),
                        kDimNoise)}});

  out.push_back({"fig4b",
                 "Fitted SNR slope against N0",
                 {curve("fig4b", kSlopes, SweepAxis::kN0, linspace(0.05, 1.0, 20), ProbeSpec::astm(0.1, 0.0),
                        kDimNoise)}});

  out.push_back({"fig5",
                 "Quantum advantage and remained discord against N_S",
                 {curve("fig5", kAdvantage, SweepAxis::kNs, linspace(0.1, 4.0, 32), ProbeSpec::astm(0.1, 0.0),
                        kDimNoise)}});
  return out;
}

struct Written {
  std::filesystem::path path;
  int x_column;
  std::vector<std::pair<int, std::string>> y_columns;
};

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path.string()));
  out << text;
  if (!out) throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
}

void write_plot_script(const std::filesystem::path& path, const FigurePreset& fig, const std::vector<Written>& files,
                       std::string_view x_label) {
  std::string s = fmt::format(
      "set datafile separator ','\n"
      "set terminal pngcairo size 800,600\n"
      "set output '{}.png'\n"
      "set title '{}'\n"
      "set xlabel '{}'\n"
      "set key autotitle columnhead\n",
      fig.id, fig.title, x_label);
  std::vector<std::string> parts;
  for (const auto& w : files) {
    for (const auto& [col, label] : w.y_columns) {
      // A negative column index plots against the right-hand axis.
      parts.push_back(fmt::format("'{}' using {}:{} axes x1{} with linespoints title '{}'", w.path.filename().string(),
                                  w.x_column, std::abs(col), col < 0 ? "y2" : "y1", label));
      if (col < 0 && s.find("set y2tics") == std::string::npos) s += "set y2tics\n";
    }
  }
  s += "plot ";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", \\\n     " : "") + parts[i];
  s += "\n";
  write_text(path, s);
}

}  // namespace

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = build_presets();
  return presets;
}

const FigurePreset& figure_preset(std::string_view id) {
  for (const auto& p : figure_presets()) {
    if (p.id == id) return p;
  }
  throw ValidationError(
      fmt::format("unknown figure '{}' (expected fig2a, fig2b, fig3a, fig3b, fig4a, fig4b or fig5)", id));
}

std::vector<SlopeRow> slope_curve(std::span<const double> n0_grid, const TargetScenario& scenario,
                                  const SlopeFitOptions& options) {
  std::vector<SlopeRow> rows;
  for (double n0 : n0_grid) {
    rows.push_back({n0, astm_slope(n0, scenario, options), coherent_slope(n0, scenario, options)});
  }
  return rows;
}

std::vector<AdvantageRow> advantage_curve(const SweepTable& ns_sweep) {
  if (ns_sweep.axis != SweepAxis::kNs) throw ValidationError("advantage_curve needs an axis ns sweep");
  std::map<double, const SweepRow*> astm;
  std::map<double, const SweepRow*> coherent;
  for (const auto& r : ns_sweep.rows) {
    if (!r.axis_value) continue;
    if (r.probe.kind == ProbeKind::kAstm) astm[*r.axis_value] = &r;
    if (r.probe.kind == ProbeKind::kCoherent) coherent[*r.axis_value] = &r;
  }
  std::vector<AdvantageRow> out;
  for (const auto& [ns, a] : astm) {
    const auto c = coherent.find(ns);
    if (c == coherent.end()) continue;
    out.push_back({ns, a->snr, c->second->snr, a->snr / c->second->snr, a->discord});
  }
  return out;
}

std::vector<std::filesystem::path> reproduce_figure(std::string_view id, const std::filesystem::path& out_dir,
                                                    const ReproduceOptions& options) {
  const FigurePreset& fig = figure_preset(id);
  std::filesystem::create_directories(out_dir);
  std::vector<Written> written;
  std::string x_label;

  for (const auto& c : fig.curves) {
    x_label = std::string(to_string(c.axis));
    switch (c.product) {
      case FigureProduct::kSweep: {
        const SweepTable table = sweep(c.axis, c.grid, c.probe, c.scenario, {false, options.threads});
        if (c.axis == SweepAxis::kNs) {
          for (ProbeKind kind : {ProbeKind::kAstm, ProbeKind::kTmsv, ProbeKind::kCoherent}) {
            SweepTable part = filter_kind(table, kind);
            if (kind == ProbeKind::kAstm) part.skipped = table.skipped;
            const auto path = out_dir / fmt::format("{}_{}.csv", c.name, to_string(kind));
            write_csv_file(path, part);
            written.push_back({path, 5, {{13, std::string(to_string(kind))}}});
          }
        } else {
          const auto path = out_dir / (c.name + ".csv");
          write_csv_file(path, table);
          written.push_back({path, 1, {{13, c.name}}});
        }
        break;
      }
      case FigureProduct::kSlopes: {
        std::string text = "n0,slope_astm,slope_ci\n";
        for (const auto& r : slope_curve(c.grid, c.scenario)) {
          text += fmt::format("{},{},{}\n", format_double(r.n0), format_double(r.slope_astm),
                              format_double(r.slope_ci));
        }
        const auto path = out_dir / (c.name + ".csv");
        write_text(path, text);
        written.push_back({path, 1, {{2, "slope_astm"}, {3, "slope_ci"}}});
        break;
      }
      case FigureProduct::kAdvantage: {
        const SweepTable table = sweep(c.axis, c.grid, c.probe, c.scenario, {true, options.threads});
        std::string text = "ns,snr_astm,snr_ci,advantage,discord\n";
        for (const auto& r : advantage_curve(table)) {
          text += fmt::format("{},{},{},{},{}\n", format_double(r.ns), format_double(r.snr_astm),
                              format_double(r.snr_ci), format_double(r.advantage),
                              r.discord ? format_double(*r.discord) : std::string());
        }
        const auto path = out_dir / (c.name + ".csv");
        write_text(path, text);
        written.push_back({path, 1, {{4, "advantage"}, {-5, "discord"}}});
        break;
      }
    }
  }

  std::vector<std::filesystem::path> paths;
  for (const auto& w : written) paths.push_back(w.path);
  if (options.plot) {
    const auto script = out_dir / (fig.id + ".gp");
    write_plot_script(script, fig, written, x_label);
    paths.push_back(script);
  }
  return paths;
}

}  // namespace gqi
