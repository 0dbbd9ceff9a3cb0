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

#ifndef GQI_DISCORD_HPP
#define GQI_DISCORD_HPP

#include <array>
#include <string_view>

#include "gqi/probes.hpp"
#include "gqi/symplectic.hpp"

namespace gqi {

/// Determinants of the 2x2 blocks of a two-mode covariance
/// V = [[V11, V12], [V21, V22]] and of V itself.
struct BlockDeterminants {
  double alpha = 1.0;  // det V11
  double beta = 1.0;   // det V22
  double gamma = 0.0;  // det V12
  double delta = 1.0;  // det V
};

/// Which closed form supplied the minimal conditional determinant epsilon.
enum class DiscordBranch {
  /// (delta - alpha beta)^2 <= (beta + 1) gamma^2 (alpha + delta).
  kFirst,
  kSecond,
  /// Measured mode is pure, so the state is a product and epsilon = alpha.
  kPureMeasuredMode,
};

std::string_view to_string(DiscordBranch branch);

struct DiscordResult {
  double value = 0.0;  // nats
  DiscordBranch branch = DiscordBranch::kFirst;
  /// Symplectic eigenvalues of the full covariance, descending.
  std::array<double, 2> nu_pair{1.0, 1.0};
  double epsilon = 1.0;
};

/// f(x) = (x+1)/2 ln((x+1)/2) - (x-1)/2 ln((x-1)/2), the von Neumann
/// entropy of a mode with symplectic eigenvalue x. Requires x >= 1.
double entropy_f(double x);

BlockDeterminants block_determinants(const GaussianState& state);

/// Gaussian discord with a Gaussian measurement on mode 2:
///
///   D = f(sqrt(beta)) - f(nu_-) - f(nu_+) + f(sqrt(epsilon)),
///
/// nu_+- being the symplectic eigenvalues of the full state and epsilon the
/// minimal determinant of the conditional state of mode 1.
DiscordResult gaussian_discord(const GaussianState& state);

/// Discord between the return mode (1) and the idler (2) with the target present.
DiscordResult remained_discord(const ProbeSpec& probe, const TargetScenario& scenario);

}  // namespace gqi

#endif  // GQI_DISCORD_HPP
