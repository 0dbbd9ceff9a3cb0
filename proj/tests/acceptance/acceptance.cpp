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

// One PASS/FAIL line per acceptance criterion. Exit status is non-zero when
// any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "gqi/discord.hpp"
#include "gqi/discrimination.hpp"
#include "gqi/experiment.hpp"
#include "gqi/figures.hpp"
#include "gqi/fock_oracle.hpp"
#include "gqi/probes.hpp"
#include "gqi/symplectic.hpp"
#include "support/random_states.hpp"

namespace {

using namespace gqi;

// Tolerances, fixed here rather than read from anywhere.
constexpr double kSnrRelTol = 0.10;
constexpr double kIdlerInvarianceRelTol = 1e-6;
constexpr double kRatioAbsTol = 0.01;
constexpr double kRatioFloor = 0.90;
constexpr double kThresholdTarget = 0.15;
constexpr double kThresholdAbsTol = 0.02;
constexpr double kOracleAbsTol = 1e-4;
constexpr std::size_t kOracleCutoff = 40;
constexpr double kSymplecticTol = 1e-10;
constexpr double kWilliamsonTol = 1e-9;
constexpr double kEndpointTol = 1e-8;
constexpr double kSwapTol = 1e-10;
constexpr double kProductDiscordTol = 1e-10;
constexpr double kSqueezeDiscordTol = 1e-8;
constexpr double kTmsvDiscordTol = 1e-8;
constexpr double kEnergyTol = 1e-10;

constexpr TargetScenario kBright{0.01, 3800.0, 1e7};
constexpr TargetScenario kDim{0.01, 30.0, 1e7};

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double snr_of(const ProbeSpec& p, const TargetScenario& s) { return snr(p, s).snr; }

ProbeSpec astm_at(double n0, double ns) { return ProbeSpec::astm(n0, (ns - n0) / (2.0 * n0 + 1.0)); }

double ratio_at(double ns, const TargetScenario& s) {
  return snr_of(astm_at(1.0, ns), s) / snr_of(ProbeSpec::tmsv(ns), s);
}

void criterion1() {
  const double expected[] = {7.0, 25.0, 43.0, 61.0};
  bool ok = true;
  std::string detail;
  for (int n1 = 0; n1 <= 3; ++n1) {
    const ProbeSpec p = n1 == 0 ? ProbeSpec::tmsv(1.0) : ProbeSpec::astm(1.0, n1);
    const double v = snr_of(p, kBright);
    ok = ok && std::abs(v - expected[n1]) <= kSnrRelTol * expected[n1];
    detail += fmt::format("{}N1={}: SNR {:.3f} (target {})", n1 ? ", " : "", n1, v, expected[n1]);
  }
  report(1, ok, detail);
}

void criterion2() {
  bool ok = true;
  std::string detail;
  for (double n1 : {0.0, 1.0 / 3.0}) {
    std::vector<double> v;
    for (double n2 : {0.0, 1.0, 2.0, 4.0}) v.push_back(snr_of(ProbeSpec::astm(1.0, n1, n2), kBright));
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double rel = (*hi - *lo) / std::abs(*lo);
    ok = ok && rel < kIdlerInvarianceRelTol;
    detail += fmt::format("{}N_S={}: relative spread {:.2e}", n1 ? ", " : "", 1.0 + 3.0 * n1, rel);
  }
  report(2, ok, detail);
}

void criterion3() {
  const double r2 = ratio_at(2.0, kBright);
  const double r4 = ratio_at(4.0, kBright);
  double floor = 1.0;
  for (double ns : linspace(1.5, 4.0, 26)) floor = std::min(floor, ratio_at(ns, kBright));
  const bool ok = std::abs(r2 - 0.938) <= kRatioAbsTol && std::abs(r4 - 0.919) <= kRatioAbsTol && floor > kRatioFloor;
  report(3, ok,
         fmt::format("ratio {:.4f} at N_S=2 (0.938), {:.4f} at N_S=4 (0.919), min {:.4f} on [1.5, 4]", r2, r4, floor));
}

void criterion4() {
  TargetScenario s = kBright;
  s.kappa = 0.05;
  const double r = ratio_at(2.0, s);
  report(4, std::abs(r - 0.934) <= kRatioAbsTol, fmt::format("ratio {:.4f} at kappa=0.05 (0.934)", r));
}

void criterion5() {
  std::string detail;
  bool ok = true;
  try {
    const ThresholdResult t = advantage_threshold(kDim);
    ok = std::abs(t.n0_star - kThresholdTarget) <= kThresholdAbsTol;
    detail = fmt::format("N0* = {:.4f} (target 0.15)", t.n0_star);
  } catch (const NoSignChange& e) {
    ok = false;
    detail = fmt::format("no threshold: {}", e.what());
  }
  const double a = astm_slope(0.1, kDim);
  const double c = coherent_slope(0.1, kDim);
  ok = ok && a < c;
  detail += fmt::format("; at N0=0.1 slope_ASTM {:.2f} vs slope_CI {:.2f}", a, c);
  report(5, ok, detail);
}

void criterion6() {
  const auto& preset = figure_preset("fig5").curves.front();
  const SweepTable t = sweep(preset.axis, preset.grid, preset.probe, preset.scenario, {true, 0});
  const std::vector<AdvantageRow> rows = advantage_curve(t);
  bool monotone = rows.size() == preset.grid.size();
  bool rises = false;
  bool falls = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    monotone = monotone && rows[i].advantage < rows[i - 1].advantage;
    const double dd = *rows[i].discord - *rows[i - 1].discord;
    rises = rises || dd > 0.0;
    falls = falls || dd < 0.0;
  }
  const std::size_t n = rows.size();
  const double last_adv = rows[n - 1].advantage - rows[n - 2].advantage;
  const double last_qd = *rows[n - 1].discord - *rows[n - 2].discord;
  const bool ok = monotone && rises && falls && last_qd > 0.0 && last_adv < 0.0;
  report(6, ok,
         fmt::format("advantage strictly decreasing: {}; discord non-monotonic: {}; final slopes {:.3e} "
                     "(advantage) and {:.3e} (discord)",
                     monotone, rises && falls, last_adv, last_qd));
}

void criterion7() {
  const TargetScenario s{0.3, 0.4, 1.0};
  double worst = 0.0;
  for (double n0 : {0.05, 0.1}) {
    for (double n1 : {0.0, 0.5}) {
      const ProbeSpec p = ProbeSpec::astm(n0, n1);
      const FockOracle oracle(p, s, kOracleCutoff);
      const HypothesisPair pair = make_hypotheses(p, s);
      for (double sv : {0.3, 0.5, 0.7}) worst = std::max(worst, std::abs(q_s(pair, sv) - oracle.q_s(sv)));
    }
  }
  const ProbeSpec ci = ProbeSpec::coherent(0.5);
  const FockOracle oracle(ci, s, kOracleCutoff);
  double worst_ci = 0.0;
  for (double sv : {0.3, 0.5, 0.7}) {
    worst_ci = std::max(worst_ci, std::abs(q_s(make_hypotheses(ci, s), sv) - oracle.q_s(sv)));
  }
  report(7, worst < kOracleAbsTol && worst_ci < kOracleAbsTol,
         fmt::format("max |Q_s - Fock| = {:.2e} (two-mode), {:.2e} (coherent)", worst, worst_ci));
}

void criterion8() {
  std::mt19937_64 rng(20260101);
  std::vector<std::string> failed;

  double sym = 0.0;
  for (double n : {0.0, 0.3, 1.0, 3.0, 30.0}) {
    sym = std::max(sym, symplectic_residual(single_mode_squeezer(n, 0, 2).entries()));
    sym = std::max(sym, symplectic_residual(single_mode_squeezer(n, 1, 2).entries()));
  }
  double recon = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Matrix v = testing::random_physical_cov(rng, 2);
    const WilliamsonDecomposition w = williamson(v);
    const Matrix& sm = w.s_matrix.entries();
    sym = std::max(sym, symplectic_residual(sm) / std::max(1.0, sm.squaredNorm()));
    Vector d(4);
    d << w.spectrum[0], w.spectrum[0], w.spectrum[1], w.spectrum[1];
    recon = std::max(recon, (sm * d.asDiagonal() * sm.transpose() - v).norm() / v.norm());
  }
  for (double n0 : {0.1, 1.0}) {
    for (double n1 : {0.0, 1.0, 3.0}) {
      const GaussianState st = astm_state(ProbeSpec::astm(n0, n1, 1.0));
      const WilliamsonDecomposition w = williamson(st.cov());
      const Matrix& sm = w.s_matrix.entries();
      sym = std::max(sym, symplectic_residual(sm) / std::max(1.0, sm.squaredNorm()));
    }
  }
  if (!(sym < kSymplecticTol)) failed.push_back(fmt::format("symplectic residual {:.2e}", sym));
  if (!(recon < kWilliamsonTol)) failed.push_back(fmt::format("Williamson residual {:.2e}", recon));

  double endpoint = 0.0;
  double swap = 0.0;
  for (const auto& [p, sc] : {std::pair{ProbeSpec::tmsv(1.0), kBright}, std::pair{ProbeSpec::astm(0.1, 2.0), kDim},
                              std::pair{ProbeSpec::coherent(2.0), kDim},
                              std::pair{ProbeSpec::astm(0.5, 0.5, 1.0), TargetScenario{0.3, 0.4, 1.0}}}) {
    const HypothesisPair pair = make_hypotheses(p, sc);
    endpoint = std::max({endpoint, std::abs(q_s(pair, 0.0) - 1.0), std::abs(q_s(pair, 1.0) - 1.0)});
    const HypothesisPair swapped{pair.rho_b, pair.rho_a};
    const double a = chernoff_infimum(pair).log_q_min;
    const double b = chernoff_infimum(swapped).log_q_min;
    swap = std::max(swap, std::abs(a - b) / std::max(1e-300, std::abs(a)));
  }
  if (!(endpoint < kEndpointTol)) failed.push_back(fmt::format("endpoint deviation {:.2e}", endpoint));
  if (!(swap < kSwapTol)) failed.push_back(fmt::format("swap asymmetry {:.2e}", swap));

  double product = 0.0;
  for (int i = 0; i < 20; ++i) {
    Matrix v = Matrix::Zero(4, 4);
    v.topLeftCorner(2, 2) = testing::random_physical_cov(rng, 1);
    v.bottomRightCorner(2, 2) = testing::random_physical_cov(rng, 1);
    product = std::max(product, std::abs(gaussian_discord(GaussianState(Vector::Zero(4), v)).value));
  }
  if (!(product < kProductDiscordTol)) failed.push_back(fmt::format("product-state discord {:.2e}", product));

  double squeeze = 0.0;
  const double reference = gaussian_discord(tmsv_state(1.0)).value;
  for (double n1 : {0.0, 1.0, 3.0}) {
    for (double n2 : {0.0, 1.0, 3.0}) {
      const double d = gaussian_discord(astm_state(ProbeSpec::astm(1.0, n1, n2))).value;
      squeeze = std::max(squeeze, std::abs(d - reference));
    }
  }
  if (!(squeeze < kSqueezeDiscordTol)) failed.push_back(fmt::format("local-squeezing drift {:.2e}", squeeze));

  double tmsv = 0.0;
  for (double n0 : {0.5, 1.0, 2.0}) {
    tmsv = std::max(tmsv, std::abs(gaussian_discord(tmsv_state(n0)).value - entropy_f(2.0 * n0 + 1.0)));
  }
  if (!(tmsv < kTmsvDiscordTol)) failed.push_back(fmt::format("pure TMSV discord error {:.2e}", tmsv));

  report(8, failed.empty(),
         failed.empty()
             ? fmt::format("symplectic {:.1e}, Williamson {:.1e}, endpoints {:.1e}, swap {:.1e}, product {:.1e}, "
                           "squeezing {:.1e}, TMSV {:.1e}",
                           sym, recon, endpoint, swap, product, squeeze, tmsv)
             : fmt::format("{}", fmt::join(failed, "; ")));
}

void criterion9() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  double worst_n = 0.0;
  double worst_c = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double n0 = u(rng);
    const double n1 = u(rng);
    const double n2 = u(rng);
    const GaussianState with_idler = astm_state(ProbeSpec::astm(n0, n1, n2));
    const double ns = n0 + 2.0 * n0 * n1 + n1;
    const double ni = n0 + 2.0 * n0 * n2 + n2;
    worst_n = std::max(worst_n, std::abs(mean_photon(with_idler, 0) - ns) / std::max(1.0, ns));
    worst_n = std::max(worst_n, std::abs(mean_photon(with_idler, 1) - ni) / std::max(1.0, ni));
    const double c = std::sqrt(n0 * (n0 + 1.0) * (n1 + 1.0));
    const double got = cross_correlation(astm_state(ProbeSpec::astm(n0, n1)));
    worst_c = std::max(worst_c, std::abs(got - c) / std::max(1.0, c));
  }
  report(9, worst_n < kEnergyTol && worst_c < kEnergyTol,
         fmt::format("photon number error {:.2e}, cross-correlation error {:.2e}", worst_n, worst_c));
}

template <typename F>
void guarded(int id, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, false, fmt::format("threw: {}", e.what()));
  }
}

}  // namespace

int main() {
  guarded(1, criterion1);
  guarded(2, criterion2);
  guarded(3, criterion3);
  guarded(4, criterion4);
  guarded(5, criterion5);
  guarded(6, criterion6);
  guarded(7, criterion7);
  guarded(8, criterion8);
  guarded(9, criterion9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
