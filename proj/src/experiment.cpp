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

#include "gqi/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include <fmt/format.h>

#include "gqi/discord.hpp"

namespace gqi {
namespace {

struct Job {
  std::size_t grid_index = 0;
  ProbeSpec probe;
  TargetScenario scenario;
  std::string setup_error;
};

std::vector<Job> make_jobs(SweepAxis axis, std::span<const double> grid, const ProbeSpec& base_probe,
                           const TargetScenario& base_scenario) {
  const bool coherent = base_probe.kind == ProbeKind::kCoherent;
  if (coherent && (axis == SweepAxis::kN0 || axis == SweepAxis::kN1 || axis == SweepAxis::kN2)) {
    throw ValidationError(fmt::format("axis {} does not apply to coherent probes", to_string(axis)));
  }
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = grid[i];
    Job job{i, base_probe, base_scenario, {}};
    switch (axis) {
      case SweepAxis::kNone:
        throw ValidationError("sweep needs an axis");
      case SweepAxis::kN0:
        job.probe.n0 = v;
        break;
      case SweepAxis::kN1:
      case SweepAxis::kN2:
        if (job.probe.kind == ProbeKind::kTmsv) job.probe.kind = ProbeKind::kAstm;
        (axis == SweepAxis::kN1 ? job.probe.n1 : job.probe.n2) = v;
        break;
      case SweepAxis::kKappa:
        job.scenario.kappa = v;
        break;
      case SweepAxis::kNb:
        job.scenario.nb = v;
        break;
      case SweepAxis::kNs:
        if (coherent) {
          job.probe.ns = v;
          break;
        }
        {
          const double n0 = base_probe.n0;
          Job astm = job;
          astm.probe = ProbeSpec::astm(n0, (v - n0) / (2.0 * n0 + 1.0), base_probe.n2);
          if (!(v >= n0)) {
            astm.setup_error = fmt::format("N_S = {} is below the initial TMSV photon number N0 = {}", v, n0);
          }
          jobs.push_back(std::move(astm));
          Job tmsv = job;
          tmsv.probe = ProbeSpec::tmsv(v);
          jobs.push_back(std::move(tmsv));
          job.probe = ProbeSpec::coherent(v);
        }
        break;
    }
    jobs.push_back(std::move(job));
  }
  return jobs;
}

}  // namespace

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kNone:
      return "none";
    case SweepAxis::kN0:
      return "n0";
    case SweepAxis::kN1:
      return "n1";
    case SweepAxis::kN2:
      return "n2";
    case SweepAxis::kNs:
      return "ns";
    case SweepAxis::kKappa:
      return "kappa";
    case SweepAxis::kNb:
      return "nb";
  }
  return "unknown";
}

SweepAxis parse_sweep_axis(std::string_view text) {
  for (SweepAxis a : {SweepAxis::kNone, SweepAxis::kN0, SweepAxis::kN1, SweepAxis::kN2, SweepAxis::kNs,
                      SweepAxis::kKappa, SweepAxis::kNb}) {
    if (text == to_string(a)) return a;
  }
  throw ValidationError(fmt::format("unknown sweep axis '{}' (expected n0, n1, n2, ns, kappa or nb)", text));
}

SweepRow run_scenario(const ProbeSpec& probe, const TargetScenario& scenario, bool with_discord) {
  const HypothesisPair pair = make_hypotheses(probe, scenario);
  const DiscriminationResult r = discriminate(pair, scenario.ensembles);
  SweepRow row;
  row.probe = probe;
  row.scenario = scenario;
  row.s_star = r.s_star;
  row.q_min = r.q_min;
  row.log_error_prob = r.log_error_prob;
  row.snr = r.snr;
  if (with_discord && probe.kind != ProbeKind::kCoherent) row.discord = gaussian_discord(pair.rho_a).value;
  return row;
}

std::vector<double> linspace(double from, double to, std::size_t points) {
  if (points == 0) throw ValidationError("linspace: need at least one point");
  if (!std::isfinite(from) || !std::isfinite(to)) throw ValidationError("linspace: bounds must be finite");
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = from;
    return out;
  }
  const double step = (to - from) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) out[i] = from + step * static_cast<double>(i);
  out.back() = to;
  return out;
}

SweepTable sweep(SweepAxis axis, std::span<const double> grid, const ProbeSpec& base_probe,
                 const TargetScenario& base_scenario, const SweepOptions& options) {
  const std::vector<Job> jobs = make_jobs(axis, grid, base_probe, base_scenario);

  std::vector<std::optional<SweepRow>> rows(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::vector<std::exception_ptr> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      const std::string where = fmt::format("{} = {} ({})", to_string(axis), grid[job.grid_index],
                                            to_string(job.probe.kind));
      if (!job.setup_error.empty()) {
        errors[i] = fmt::format("{}: {}", where, job.setup_error);
        continue;
      }
      try {
        SweepRow row = run_scenario(job.probe, job.scenario, options.with_discord);
        row.axis_value = grid[job.grid_index];
        rows[i] = std::move(row);
      } catch (const ValidationError& e) {
        errors[i] = fmt::format("{}: {}", where, e.what());
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  std::size_t threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(jobs.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  SweepTable table;
  table.axis = axis;
  table.grid.assign(grid.begin(), grid.end());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (rows[i]) table.rows.push_back(std::move(*rows[i]));
    if (!errors[i].empty()) table.skipped.push_back(std::move(errors[i]));
  }
  return table;
}

SweepTable filter_kind(const SweepTable& table, ProbeKind kind) {
  SweepTable out;
  out.axis = table.axis;
  out.grid = table.grid;
  for (const auto& row : table.rows) {
    if (row.probe.kind == kind) out.rows.push_back(row);
  }
  return out;
}

double slope_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("slope_fit: x and y differ in length");
  if (x.size() < 2) throw ValidationError("slope_fit: need at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw ValidationError("slope_fit: degenerate grid (all x equal)");
  return sxy / sxx;
}

double slope_fit(const SweepTable& table) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& row : table.rows) {
    x.push_back(row.probe.signal_photons());
    y.push_back(row.snr);
  }
  return slope_fit(x, y);
}

namespace {

std::vector<double> fit_grid(double n0, const SlopeFitOptions& options) {
  const double from = options.fit_from.value_or(n0);
  if (from < n0) {
    throw ValidationError(fmt::format("fit range starts at N_S = {} below the reachable minimum N0 = {}", from, n0));
  }
  if (!(options.fit_to > from)) {
    throw ValidationError(fmt::format("fit range [{}, {}] is empty", from, options.fit_to));
  }
  if (options.points < 2) throw ValidationError("slope fit needs at least two points");
  return linspace(from, options.fit_to, options.points);
}

}  // namespace

double astm_slope(double n0, const TargetScenario& scenario, const SlopeFitOptions& options) {
  const std::vector<double> ns = fit_grid(n0, options);
  std::vector<double> snr_values;
  snr_values.reserve(ns.size());
  for (double v : ns) {
    snr_values.push_back(snr(ProbeSpec::astm(n0, std::max(0.0, (v - n0) / (2.0 * n0 + 1.0))), scenario).snr);
  }
  return slope_fit(ns, snr_values);
}

double coherent_slope(double n0, const TargetScenario& scenario, const SlopeFitOptions& options) {
  const std::vector<double> ns = fit_grid(n0, options);
  std::vector<double> snr_values;
  snr_values.reserve(ns.size());
  for (double v : ns) snr_values.push_back(snr(ProbeSpec::coherent(v), scenario).snr);
  return slope_fit(ns, snr_values);
}

ThresholdResult bisect_sign_change(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw ValidationError(fmt::format("bracket [{}, {}] is empty", lo, hi));
  if (!(tol > 0.0)) throw ValidationError(fmt::format("bisection tolerance must be > 0, got {}", tol));
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return ThresholdResult{lo, lo, lo, 0};
  if (f_hi == 0.0) return ThresholdResult{hi, hi, hi, 0};
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw NoSignChange(fmt::format("no sign change on [{}, {}]: {:.6g} at {}, {:.6g} at {}", lo, hi, f_lo, lo,
                                   f_hi, hi),
                       f_lo, f_hi);
  }
  ThresholdResult out{0.0, lo, hi, 0};
  while (out.bracket_hi - out.bracket_lo > tol) {
    const double mid = 0.5 * (out.bracket_lo + out.bracket_hi);
    const double f_mid = f(mid);
    ++out.iterations;
    if (f_mid == 0.0) {
      out.bracket_lo = out.bracket_hi = mid;
      break;
    }
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      out.bracket_lo = mid;
      f_lo = f_mid;
    } else {
      out.bracket_hi = mid;
    }
  }
  out.n0_star = 0.5 * (out.bracket_lo + out.bracket_hi);
  return out;
}

ThresholdResult advantage_threshold(const TargetScenario& scenario, const SlopeFitOptions& options, double lo,
                                    double hi, double tol) {
  scenario.validate();
  if (!(lo >= 0.0 && hi > lo)) throw ValidationError(fmt::format("threshold bracket [{}, {}] is invalid", lo, hi));
  auto gap = [&](double n0) { return astm_slope(n0, scenario, options) - coherent_slope(n0, scenario, options); };
  try {
    return bisect_sign_change(gap, lo, hi, tol);
  } catch (const NoSignChange& e) {
    throw NoSignChange(fmt::format("slope_ASTM - slope_CI does not change sign on N0 in [{}, {}]: "
                                   "{:.6g} at N0 = {}, {:.6g} at N0 = {}",
                                   lo, hi, e.lo_gap, lo, e.hi_gap, hi),
                       e.lo_gap, e.hi_gap);
  }
}

}  // namespace gqi
