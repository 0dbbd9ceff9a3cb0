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

#include "gqi/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "gqi/errors.hpp"

namespace gqi {
namespace {

constexpr double kMaxTraceDeficit = 1e-8;
// Extra levels kept while squeezing so the truncated generator's edge
// effects stay far above the retained block.
constexpr std::size_t kSqueezePadding = 120;

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd squeezer(double n_mean, std::size_t dim) {
  const double r = std::asinh(std::sqrt(n_mean));
  MatrixXd gen = MatrixXd::Zero(static_cast<Index>(dim), static_cast<Index>(dim));
  // r/2 (a^2 - a^dagger^2): <n-2| a^2 |n> = sqrt(n (n - 1)).
  for (std::size_t n = 2; n < dim; ++n) {
    const double amp = 0.5 * r * std::sqrt(static_cast<double>(n) * static_cast<double>(n - 1));
    gen(static_cast<Index>(n - 2), static_cast<Index>(n)) = amp;
    gen(static_cast<Index>(n), static_cast<Index>(n - 2)) = -amp;
  }
  return gen.exp();
}

// Rows: signal photons, columns: idler photons (a single column for one-mode probes).
MatrixXd probe_amplitudes(const ProbeSpec& probe, std::size_t cutoff) {
  const std::size_t big = cutoff + kSqueezePadding;
  const Index c = static_cast<Index>(cutoff);
  if (probe.kind == ProbeKind::kCoherent) {
    VectorXd psi(static_cast<Index>(big));
    const double alpha = std::sqrt(probe.ns);
    double log_amp = -probe.ns / 2.0;
    for (std::size_t n = 0; n < big; ++n) {
      if (n > 0) log_amp += std::log(alpha) - 0.5 * std::log(static_cast<double>(n));
      psi(static_cast<Index>(n)) = alpha == 0.0 ? (n == 0 ? 1.0 : 0.0) : std::exp(log_amp);
    }
    return psi.head(c);
  }
  MatrixXd psi = MatrixXd::Zero(static_cast<Index>(big), static_cast<Index>(big));
  const double ratio = probe.n0 / (probe.n0 + 1.0);
  double weight = 1.0 / (probe.n0 + 1.0);
  for (std::size_t n = 0; n < big; ++n) {
    psi(static_cast<Index>(n), static_cast<Index>(n)) = std::sqrt(weight);
    weight *= ratio;
  }
  if (probe.n1 > 0.0) psi = squeezer(probe.n1, big) * psi;
  if (probe.n2 > 0.0) psi = psi * squeezer(probe.n2, big).transpose();
  return psi.topLeftCorner(c, c);
}

// exp(theta (a_S^dagger a_E - a_S a_E^dagger)) on the total-photon-number-N
// block, basis |k>_S |N - k>_E.
MatrixXd beam_splitter_block(std::size_t total, double theta) {
  const Index dim = static_cast<Index>(total + 1);
  MatrixXd gen = MatrixXd::Zero(dim, dim);
  for (std::size_t k = 0; k < total; ++k) {
    const double amp = theta * std::sqrt(static_cast<double>(k + 1) * static_cast<double>(total - k));
    gen(static_cast<Index>(k + 1), static_cast<Index>(k)) = amp;
    gen(static_cast<Index>(k), static_cast<Index>(k + 1)) = -amp;
  }
  return gen.exp();
}

std::vector<double> thermal_populations(double n_mean, std::size_t levels) {
  std::vector<double> p(levels);
  double w = 1.0 / (n_mean + 1.0);
  const double ratio = n_mean / (n_mean + 1.0);
  for (auto& x : p) {
    x = w;
    w *= ratio;
  }
  return p;
}

std::size_t thermal_levels(double n_mean) {
  if (n_mean <= 0.0) return 1;
  // Tail beyond level L is (n/(n+1))^L.
  const double levels = std::ceil(std::log(1e-13) / std::log(n_mean / (n_mean + 1.0)));
  return static_cast<std::size_t>(std::max(levels, 1.0));
}

}  // namespace

FockOracle::FockOracle(const ProbeSpec& probe, const TargetScenario& scenario, std::size_t cutoff) {
  probe.validate();
  scenario.validate();
  if (cutoff < 2) throw ValidationError(fmt::format("Fock cutoff must be >= 2, got {}", cutoff));

  const MatrixXd psi = probe_amplitudes(probe, cutoff);
  const Index c = static_cast<Index>(cutoff);
  const Index idler_dim = psi.cols();

  // Environment: thermal with nb / (1 - kappa) photons, as a Fock mixture.
  const double env_photons = scenario.injected_thermal_photons();
  const std::size_t env_levels = thermal_levels(env_photons);
  const std::vector<double> env_pop = thermal_populations(env_photons, env_levels);
  const double theta = std::acos(std::sqrt(scenario.kappa));

  const std::size_t max_total = cutoff - 1 + env_levels - 1;
  std::vector<MatrixXd> blocks;
  blocks.reserve(max_total + 1);
  for (std::size_t n = 0; n <= max_total; ++n) blocks.push_back(beam_splitter_block(n, theta));

  // rho_A = R R^T with R indexed by (return, idler) x (env input m, env output e).
  const std::size_t env_out = cutoff + env_levels;
  MatrixXd factor = MatrixXd::Zero(c * idler_dim, static_cast<Index>(env_levels * env_out));
  for (std::size_t m = 0; m < env_levels; ++m) {
    const double amp_m = std::sqrt(env_pop[m]);
    for (std::size_t k = 0; k < cutoff; ++k) {
      const std::size_t total = k + m;
      const MatrixXd& bs = blocks[total];
      for (std::size_t out = 0; out <= std::min(total, cutoff - 1); ++out) {
        const double w = amp_m * bs(static_cast<Index>(out), static_cast<Index>(k));
        if (w == 0.0) continue;
        const Index col = static_cast<Index>(m * env_out + (total - out));
        for (Index i = 0; i < idler_dim; ++i) {
          factor(static_cast<Index>(out) * idler_dim + i, col) += w * psi(static_cast<Index>(k), i);
        }
      }
    }
  }
  deficit_a_ = 1.0 - factor.squaredNorm();

  // Singular values keep the tiny eigenvalues accurate in absolute terms,
  // which matters once they are raised to a fractional power.
  Eigen::BDCSVD<MatrixXd> svd(factor, Eigen::ComputeThinU);
  eig_a_ = svd.singularValues().array().square();
  const MatrixXd& vec_a = svd.matrixU();

  // rho_B = thermal(nb) (x) Tr_S |psi><psi|.
  Eigen::BDCSVD<MatrixXd> idler_svd(psi, Eigen::ComputeThinV);
  const VectorXd idler_eig = idler_svd.singularValues().array().square();
  const MatrixXd& idler_vec = idler_svd.matrixV();
  const Index idler_rank = idler_eig.size();
  const std::vector<double> noise_pop = thermal_populations(scenario.nb, cutoff);

  eig_b_.resize(c * idler_rank);
  overlap_sq_.resize(c * idler_rank, eig_a_.size());
  double trace_b = 0.0;
  for (Index r = 0; r < c; ++r) {
    const MatrixXd proj = idler_vec.transpose() * vec_a.middleRows(r * idler_dim, idler_dim);
    overlap_sq_.middleRows(r * idler_rank, idler_rank) = proj.array().square();
    for (Index j = 0; j < idler_rank; ++j) {
      eig_b_(r * idler_rank + j) = noise_pop[static_cast<std::size_t>(r)] * idler_eig(j);
      trace_b += eig_b_(r * idler_rank + j);
    }
  }
  deficit_b_ = 1.0 - trace_b;

  for (std::size_t k = 0; k < cutoff; ++k) {
    double pop = 0.0;
    for (Index i = 0; i < idler_dim; ++i) pop += factor.row(static_cast<Index>(k) * idler_dim + i).squaredNorm();
    return_photons_a_ += static_cast<double>(k) * pop;
  }
  return_photons_b_ = 0.0;
  for (std::size_t k = 0; k < cutoff; ++k) return_photons_b_ += static_cast<double>(k) * noise_pop[k];

  if (deficit_a_ > kMaxTraceDeficit || deficit_b_ > kMaxTraceDeficit) {
    throw ValidationError(fmt::format("Fock cutoff {} too small: trace deficits {:.3e} (target present), "
                                      "{:.3e} (target absent) exceed {:.0e}",
                                      cutoff, deficit_a_, deficit_b_, kMaxTraceDeficit));
  }
}

double FockOracle::q_s(double s) const {
  if (!(s >= 0.0 && s <= 1.0)) throw ValidationError(fmt::format("s must lie in [0, 1], got {}", s));
  const VectorXd pa = eig_a_.array().max(0.0).pow(s).matrix();
  const VectorXd pb = eig_b_.array().max(0.0).pow(1.0 - s).matrix();
  return pb.dot(overlap_sq_ * pa);
}

double fock_oracle_q_s(const ProbeSpec& probe, const TargetScenario& scenario, double s, std::size_t cutoff) {
  return FockOracle(probe, scenario, cutoff).q_s(s);
}

}  // namespace gqi
