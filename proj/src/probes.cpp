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

#include "gqi/probes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "gqi/errors.hpp"

namespace gqi {
namespace {

void require_nonneg(double value, std::string_view name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ValidationError(fmt::format("{} must be finite and >= 0, got {}", name, value));
  }
}

}  // namespace

std::string_view to_string(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::kTmsv:
      return "tmsv";
    case ProbeKind::kAstm:
      return "astm";
    case ProbeKind::kCoherent:
      return "coherent";
  }
  return "unknown";
}

ProbeKind parse_probe_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "tmsv") return ProbeKind::kTmsv;
  if (lower == "astm") return ProbeKind::kAstm;
  if (lower == "coherent") return ProbeKind::kCoherent;
  throw ValidationError(fmt::format("probe.kind must be one of tmsv, astm, coherent; got '{}'", text));
}

ProbeSpec ProbeSpec::tmsv(double n0) { return ProbeSpec{ProbeKind::kTmsv, n0, 0.0, 0.0, 0.0}; }

ProbeSpec ProbeSpec::astm(double n0, double n1, double n2) { return ProbeSpec{ProbeKind::kAstm, n0, n1, n2, 0.0}; }

ProbeSpec ProbeSpec::coherent(double ns) { return ProbeSpec{ProbeKind::kCoherent, 0.0, 0.0, 0.0, ns}; }

double ProbeSpec::signal_photons() const {
  if (kind == ProbeKind::kCoherent) return ns;
  return n0 + 2.0 * n0 * n1 + n1;
}

double ProbeSpec::idler_photons() const {
  if (kind == ProbeKind::kCoherent) return 0.0;
  return n0 + 2.0 * n0 * n2 + n2;
}

std::size_t ProbeSpec::n_modes() const { return kind == ProbeKind::kCoherent ? 1 : 2; }

void ProbeSpec::validate() const {
  require_nonneg(n0, "probe.n0");
  require_nonneg(n1, "probe.n1");
  require_nonneg(n2, "probe.n2");
  require_nonneg(ns, "probe.ns");
  if (kind == ProbeKind::kTmsv && (n1 != 0.0 || n2 != 0.0)) {
    throw ValidationError("a tmsv probe has no extra squeezing: probe.n1 and probe.n2 must be 0 (use kind astm)");
  }
}

void TargetScenario::validate() const {
  if (!std::isfinite(kappa) || kappa < 0.0 || kappa >= 1.0) {
    throw ValidationError(fmt::format("scenario.kappa must lie in [0, 1), got {}", kappa));
  }
  require_nonneg(nb, "scenario.nb");
  if (!std::isfinite(ensembles) || ensembles <= 0.0) {
    throw ValidationError(fmt::format("scenario.ensembles must be finite and > 0, got {}", ensembles));
  }
}

GaussianState tmsv_state(double n0) {
  require_nonneg(n0, "n0");
  const double a = 2.0 * n0 + 1.0;
  const double c = 2.0 * std::sqrt(n0 * (n0 + 1.0));
  Matrix v(4, 4);
  // clang-format off
  v << a,  0,  c,  0,
       0,  a,  0, -c,
       c,  0,  a,  0,
       0, -c,  0,  a;
  // clang-format on
  return GaussianState(Vector::Zero(4), std::move(v));
}

GaussianState astm_state(const ProbeSpec& spec) {
  spec.validate();
  if (spec.kind == ProbeKind::kCoherent) throw ValidationError("astm_state: coherent probes have no two-mode state");
  const SymplecticMatrix squeezers = single_mode_squeezer(spec.n1, 0, 2) * single_mode_squeezer(spec.n2, 1, 2);
  return apply_symplectic(tmsv_state(spec.n0), squeezers);
}

GaussianState coherent_state(double ns) {
  require_nonneg(ns, "ns");
  Vector mean = Vector::Zero(2);
  mean(0) = 2.0 * std::sqrt(ns);
  return GaussianState(std::move(mean), Matrix::Identity(2, 2));
}

double mean_photon(const GaussianState& state, std::size_t mode) {
  if (mode >= state.n_modes()) {
    throw ValidationError(fmt::format("mode {} out of range for a {}-mode state", mode, state.n_modes()));
  }
  const Eigen::Index x = static_cast<Eigen::Index>(2 * mode);
  const auto& v = state.cov();
  const auto& d = state.mean();
  return (v(x, x) + v(x + 1, x + 1) - 2.0) / 4.0 + (d(x) * d(x) + d(x + 1) * d(x + 1)) / 4.0;
}

double cross_correlation(const GaussianState& state) {
  if (state.n_modes() != 2) {
    throw ValidationError(fmt::format("cross_correlation needs a two-mode state, got {} modes", state.n_modes()));
  }
  const auto& v = state.cov();
  return (v(0, 2) - v(1, 3)) / 4.0;
}

HypothesisPair make_hypotheses(const ProbeSpec& probe, const TargetScenario& scenario) {
  probe.validate();
  scenario.validate();
  const double kappa = scenario.kappa;
  const double noise = 2.0 * scenario.nb + 1.0;
  // (1 - kappa)(2 nb / (1 - kappa) + 1), written without the division.
  const double injected = 2.0 * scenario.nb + (1.0 - kappa);

  if (probe.kind == ProbeKind::kCoherent) {
    Vector present = Vector::Zero(2);
    present(0) = 2.0 * std::sqrt(kappa * probe.ns);
    const Matrix cov = noise * Matrix::Identity(2, 2);
    return HypothesisPair{GaussianState(std::move(present), cov), GaussianState(Vector::Zero(2), cov)};
  }

  const GaussianState probe_state = astm_state(probe);
  const Matrix& v = probe_state.cov();
  const double root_kappa = std::sqrt(kappa);

  Matrix va = v;
  va.block(0, 0, 2, 2) = kappa * v.block(0, 0, 2, 2);
  va(0, 0) += injected;
  va(1, 1) += injected;
  va.block(0, 2, 2, 2) = root_kappa * v.block(0, 2, 2, 2);
  va.block(2, 0, 2, 2) = root_kappa * v.block(2, 0, 2, 2);

  Matrix vb = Matrix::Zero(4, 4);
  vb(0, 0) = noise;
  vb(1, 1) = noise;
  vb.block(2, 2, 2, 2) = v.block(2, 2, 2, 2);

  Vector mean_a = probe_state.mean();
  mean_a.head(2) *= root_kappa;
  return HypothesisPair{GaussianState(std::move(mean_a), std::move(va)),
                        GaussianState(Vector::Zero(4), std::move(vb))};
}

}  // namespace gqi
