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

#include "gqi/discord.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "gqi/errors.hpp"

namespace gqi {
namespace {

// Radicands that vanish analytically (pure states) come out as rounding
// noise of either sign; sqrt would amplify that noise into f's steep
// region near 1.
double snapped_radicand(double value, double scale) {
  if (std::abs(value) <= 1e-12 * scale) return 0.0;
  return std::max(value, 0.0);
}

double det2(const Matrix& v, Eigen::Index row, Eigen::Index col) {
  return v(row, col) * v(row + 1, col + 1) - v(row, col + 1) * v(row + 1, col);
}

}  // namespace

std::string_view to_string(DiscordBranch branch) {
  switch (branch) {
    case DiscordBranch::kFirst:
      return "first";
    case DiscordBranch::kSecond:
      return "second";
    case DiscordBranch::kPureMeasuredMode:
      return "pure_measured_mode";
  }
  return "unknown";
}

double entropy_f(double x) {
  if (!(x >= 1.0)) throw ValidationError(fmt::format("entropy_f: argument must be >= 1, got {}", x));
  const double plus = (x + 1.0) / 2.0;
  const double minus = (x - 1.0) / 2.0;
  if (minus == 0.0) return 0.0;
  return plus * std::log(plus) - minus * std::log(minus);
}

BlockDeterminants block_determinants(const GaussianState& state) {
  if (state.n_modes() != 2) {
    throw ValidationError(fmt::format("block_determinants needs a two-mode state, got {} modes", state.n_modes()));
  }
  const Matrix& v = state.cov();
  return BlockDeterminants{det2(v, 0, 0), det2(v, 2, 2), det2(v, 0, 2), v.determinant()};
}

DiscordResult gaussian_discord(const GaussianState& state) {
  const BlockDeterminants d = block_determinants(state);
  const std::vector<double> nu = symplectic_eigenvalues(state.cov());

  const double a = d.alpha;
  const double b = d.beta;
  const double g = d.gamma;
  const double del = d.delta;
  const double g2 = g * g;

  DiscordResult out;
  out.nu_pair = {nu[0], nu[1]};
  double eps = a;
  if (b - 1.0 <= 1e-12 * b) {
    out.branch = DiscordBranch::kPureMeasuredMode;
  } else if ((del - a * b) * (del - a * b) <= (b + 1.0) * g2 * (a + del)) {
    out.branch = DiscordBranch::kFirst;
    const double tail = (b - 1.0) * (del - a);
    const double rad = snapped_radicand(g2 + tail, g2 + std::abs(tail));
    eps = (2.0 * g2 + tail + 2.0 * std::abs(g) * std::sqrt(rad)) / ((b - 1.0) * (b - 1.0));
  } else {
    out.branch = DiscordBranch::kSecond;
    const double ab = a * b;
    const double dev = del - ab;
    const double rad = snapped_radicand(g2 * g2 + dev * dev - 2.0 * g2 * (del + ab),
                                        g2 * g2 + dev * dev + 2.0 * g2 * (del + ab));
    eps = (ab - g2 + del - std::sqrt(rad)) / (2.0 * b);
  }
  if (eps < 1.0 - kPhysicalSlack) {
    throw ValidationError(fmt::format("non-physical conditional determinant epsilon = {}", eps));
  }
  out.epsilon = std::max(eps, 1.0);

  const double value =
      entropy_f(std::sqrt(std::max(b, 1.0))) - entropy_f(nu[0]) - entropy_f(nu[1]) + entropy_f(std::sqrt(out.epsilon));
  if (value < -1e-10) throw ValidationError(fmt::format("discord evaluated negative ({:.3e})", value));
  out.value = std::max(value, 0.0);
  return out;
}

DiscordResult remained_discord(const ProbeSpec& probe, const TargetScenario& scenario) {
  if (probe.kind == ProbeKind::kCoherent) {
    throw ValidationError("remained_discord: coherent probes have no idler mode");
  }
  return gaussian_discord(make_hypotheses(probe, scenario).rho_a);
}

}  // namespace gqi
