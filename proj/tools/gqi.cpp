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

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "gqi/config.hpp"
#include "gqi/discord.hpp"
#include "gqi/experiment.hpp"
#include "gqi/figures.hpp"
#include "gqi/table_io.hpp"

namespace {

namespace fs = std::filesystem;

// Parameter flags map onto config keys so that file and flags share one parser.
struct ParameterFlags {
  std::string config_path;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void attach(CLI::App& app) {
    app.add_option("--config", config_path, "flat key = value settings file");
    add(app, "--kind", "probe.kind", "probe kind: tmsv, astm or coherent");
    add(app, "--n0", "probe.n0", "photons of the initial two-mode squeezed vacuum");
    add(app, "--n1", "probe.n1", "photons added by the signal squeezer");
    add(app, "--n2", "probe.n2", "photons added by the idler squeezer");
    add(app, "--ns", "probe.ns", "coherent probe |alpha|^2");
    add(app, "--kappa", "scenario.kappa", "target reflectivity");
    add(app, "--nb", "scenario.nb", "thermal background photons");
    add(app, "--ensembles", "scenario.ensembles", "number of copies M");
  }

  void add(CLI::App& app, const std::string& flag, const std::string& key, const std::string& help) {
    options[key] = app.add_option(flag, values[key], help);
  }

  gqi::RunConfig resolve() const {
    gqi::RunConfig config;
    if (!config_path.empty()) config = gqi::load_config(config_path, config);
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) gqi::apply_setting(config, key, values.at(key));
    }
    // Keys that do not apply to the chosen kind are dropped so rows stay canonical.
    if (config.probe.kind == gqi::ProbeKind::kCoherent) {
      config.probe = gqi::ProbeSpec::coherent(config.probe.ns);
    } else {
      config.probe.ns = 0.0;
    }
    return config;
  }
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot open '{}' for writing", out_path));
  out << text;
}

void write_sweep_plot(const fs::path& csv, const gqi::SweepTable& table) {
  fs::path script = csv;
  script.replace_extension(".gp");
  std::ofstream out(script, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot open '{}' for writing", script.string()));
  const int x_column = table.axis == gqi::SweepAxis::kNs ? 5 : 1;
  out << "set datafile separator ','\n"
      << "set terminal pngcairo size 800,600\n"
      << "set output '" << csv.stem().string() << ".png'\n"
      << "set xlabel '" << gqi::to_string(table.axis) << "'\n"
      << "set ylabel 'SNR'\n"
      << "set key autotitle columnhead\n"
      << "plot '" << csv.filename().string() << "' using " << x_column << ":13 with linespoints title 'snr'\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian quantum illumination calculator"};
  app.require_subcommand(1);

  std::map<const CLI::App*, ParameterFlags> flags;
  std::string out_path;
  bool plot = false;
  std::size_t threads = 0;
  auto common = [&](CLI::App* sub) {
    flags[sub].attach(*sub);
    sub->add_option("--out", out_path, "output file (or directory for reproduce)");
    sub->add_flag("--plot", plot, "also write a gnuplot script next to the output");
  };

  CLI::App* snr_cmd = app.add_subcommand("snr", "error exponent and SNR of one scenario");
  common(snr_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "vary one parameter over a uniform grid");
  common(sweep_cmd);
  std::string axis_name;
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = 0;
  bool with_discord = false;
  sweep_cmd->add_option("--axis", axis_name, "n0, n1, n2, ns, kappa or nb")->required();
  sweep_cmd->add_option("--from", from, "first grid value")->required();
  sweep_cmd->add_option("--to", to, "last grid value")->required();
  sweep_cmd->add_option("--steps", steps, "number of grid points, both ends included")->required();
  sweep_cmd->add_flag("--discord", with_discord, "also compute the return-idler discord");
  sweep_cmd->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

  CLI::App* discord_cmd = app.add_subcommand("discord", "return-idler Gaussian discord with the target present");
  common(discord_cmd);

  CLI::App* threshold_cmd = app.add_subcommand("threshold", "smallest N0 whose SNR slope matches the coherent one");
  common(threshold_cmd);
  gqi::SlopeFitOptions fit;
  double fit_from = 0.0;
  double lo = 0.05;
  double hi = 1.0;
  double tol = 0.005;
  CLI::Option* fit_from_opt = threshold_cmd->add_option("--fit-from", fit_from, "start of the N_S fit range");
  threshold_cmd->add_option("--fit-to", fit.fit_to, "end of the N_S fit range");
  threshold_cmd->add_option("--fit-points", fit.points, "points in the N_S fit range");
  threshold_cmd->add_option("--lo", lo, "lower end of the N0 bracket");
  threshold_cmd->add_option("--hi", hi, "upper end of the N0 bracket");
  threshold_cmd->add_option("--tol", tol, "bisection tolerance in N0");

  CLI::App* reproduce_cmd = app.add_subcommand("reproduce", "write the CSV data behind one figure");
  std::string figure_id;
  std::string out_dir = ".";
  reproduce_cmd->add_option("figure", figure_id, "fig2a, fig2b, fig3a, fig3b, fig4a, fig4b or fig5")->required();
  reproduce_cmd->add_option("--out", out_dir, "output directory");
  reproduce_cmd->add_flag("--plot", plot, "also write a gnuplot script");
  reproduce_cmd->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*reproduce_cmd) {
      for (const auto& p : gqi::reproduce_figure(figure_id, out_dir, {plot, threads})) {
        std::cout << p.string() << '\n';
      }
      return 0;
    }

    const CLI::App* active = app.get_subcommands().front();
    const gqi::RunConfig config = flags.at(active).resolve();

    if (*snr_cmd) {
      gqi::SweepTable table;
      table.rows.push_back(gqi::run_scenario(config.probe, config.scenario, false));
      emit(out_path, gqi::to_csv(table));
      if (plot) std::cerr << "gqi: nothing to plot for a single scenario\n";
    } else if (*sweep_cmd) {
      const gqi::SweepAxis axis = gqi::parse_sweep_axis(axis_name);
      if (axis == gqi::SweepAxis::kNone) throw gqi::ValidationError("--axis must name a parameter");
      if (plot && out_path.empty()) throw gqi::ValidationError("--plot needs --out");
      const std::vector<double> grid = gqi::linspace(from, to, steps);
      const gqi::SweepTable table = gqi::sweep(axis, grid, config.probe, config.scenario, {with_discord, threads});
      for (const auto& msg : table.skipped) std::cerr << "gqi: skipped " << msg << '\n';
      emit(out_path, gqi::to_csv(table));
      if (plot) write_sweep_plot(out_path, table);
    } else if (*discord_cmd) {
      const gqi::DiscordResult d = gqi::remained_discord(config.probe, config.scenario);
      emit(out_path, fmt::format("discord,branch,nu_plus,nu_minus,epsilon\n{},{},{},{},{}\n",
                                 gqi::format_double(d.value), gqi::to_string(d.branch),
                                 gqi::format_double(d.nu_pair[0]), gqi::format_double(d.nu_pair[1]),
                                 gqi::format_double(d.epsilon)));
      if (plot) std::cerr << "gqi: nothing to plot for a single scenario\n";
    } else if (*threshold_cmd) {
      if (fit_from_opt->count() > 0) fit.fit_from = fit_from;
      const gqi::ThresholdResult r = gqi::advantage_threshold(config.scenario, fit, lo, hi, tol);
      emit(out_path, fmt::format("n0_star,bracket_lo,bracket_hi,iterations\n{},{},{},{}\n",
                                 gqi::format_double(r.n0_star), gqi::format_double(r.bracket_lo),
                                 gqi::format_double(r.bracket_hi), r.iterations));
      if (plot) std::cerr << "gqi: use `gqi reproduce fig4b --plot` for the slope curve\n";
    }
    return 0;
  } catch (const gqi::ValidationError& e) {
    std::cerr << "gqi: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gqi: internal error: " << e.what() << '\n';
    return 1;
  }
}
