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

#ifndef GQI_PROBES_HPP
#define GQI_PROBES_HPP

#include <string>
#include <string_view>

#include "gqi/symplectic.hpp"

namespace gqi {

enum class ProbeKind { kTmsv, kAstm, kCoherent };

std::string_view to_string(ProbeKind kind);
/// Accepts "tmsv", "astm", "coherent" (case-insensitive).
ProbeKind parse_probe_kind(std::string_view text);

/// Declarative probe description, parameterized by photon numbers.
///
/// n0 is the per-mode photon number of the initial two-mode squeezed vacuum,
/// n1 / n2 the photon numbers of the single-mode squeezers on signal / idler,
/// ns the coherent amplitude |alpha|^2 (coherent probes only).
struct ProbeSpec {
  ProbeKind kind = ProbeKind::kTmsv;
  double n0 = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  double ns = 0.0;

  static ProbeSpec tmsv(double n0);
  static ProbeSpec astm(double n0, double n1, double n2 = 0.0);
  static ProbeSpec coherent(double ns);

  /// Transmitted photons: N0 + 2 N0 N1 + N1, or |alpha|^2 for coherent probes.
  double signal_photons() const;
  /// Retained photons N0 + 2 N0 N2 + N2 (zero for coherent probes).
  double idler_photons() const;
  /// Number of modes of the probe state (2, or 1 for coherent probes).
  std::size_t n_modes() const;

  /// Throws ValidationError naming the offending parameter.
  void validate() const;

  bool operator==(const ProbeSpec&) const = default;
};

/// Target of reflectivity kappa embedded in thermal noise. The injected
/// thermal mode carries nb / (1 - kappa) photons so that the receiver sees
/// nb photons of noise for every kappa.
struct TargetScenario {
  double kappa = 0.01;
  double nb = 0.0;
  double ensembles = 1.0;

  double injected_thermal_photons() const { return nb / (1.0 - kappa); }
  void validate() const;

  bool operator==(const TargetScenario&) const = default;
};

/// rho_a: target present; rho_b: target absent. Mode 1 is the return mode,
/// mode 2 (when present) the idler.
struct HypothesisPair {
  GaussianState rho_a;
  GaussianState rho_b;
};

GaussianState tmsv_state(double n0);
/// Squeezes mode 1 by n1 and mode 2 by n2 after preparing tmsv_state(n0).
GaussianState astm_state(const ProbeSpec& spec);
/// Displaced vacuum with mean (2 sqrt(ns), 0).
GaussianState coherent_state(double ns);

/// <a^dagger a> of `mode`: (V_xx + V_pp - 2)/4 + (d_x^2 + d_p^2)/4.
double mean_photon(const GaussianState& state, std::size_t mode);
/// Re<a1 a2> = (V_x1x2 - V_p1p2)/4 for a two-mode state.
double cross_correlation(const GaussianState& state);

HypothesisPair make_hypotheses(const ProbeSpec& probe, const TargetScenario& scenario);

}  // namespace gqi

#endif  // GQI_PROBES_HPP
