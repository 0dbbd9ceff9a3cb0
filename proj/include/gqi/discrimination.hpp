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

#ifndef GQI_DISCRIMINATION_HPP
#define GQI_DISCRIMINATION_HPP

// Quantum Chernoff bound between two n-mode Gaussian states.
//
//   Q_s = 2^n prod_k G_s(alpha_k) G_{1-s}(beta_k) / sqrt(det Sigma_s)
//         * exp(-d^T Sigma_s^{-1} d / 2),
//   Sigma_s = V_A(s) + V_B(1 - s),  V(p) = S (+)_k Lambda_p(nu_k) I2 S^T,
//
// with (S, nu) the Williamson decomposition of each covariance and d the
// difference of the means. The M-copy error bound is P = (inf_s Q_s)^M / 2,
// kept in the log domain because it underflows for realistic M.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "gqi/probes.hpp"
#include "gqi/symplectic.hpp"

namespace gqi {

/// G_p(x) = 2^p / ((x + 1)^p - (x - 1)^p), with G_p(1) = 1. Requires p in (0, 1], x >= 1.
double g_func(double p, double x);
/// Lambda_p(x) = ((x + 1)^p + (x - 1)^p) / ((x + 1)^p - (x - 1)^p), with Lambda_p(1) = 1.
double lambda_func(double p, double x);

/// S (+)_k Lambda_p(nu_k) I2 S^T for the Williamson decomposition of `cov`.
Matrix v_of_p(const Matrix& cov, double p);

/// Precomputed Williamson data for a hypothesis pair; evaluates ln Q_s for
/// any s in [0, 1] without repeating the decompositions.
class ChernoffEvaluator {
 public:
  explicit ChernoffEvaluator(const HypothesisPair& pair);

  /// ln Q_s. At s = 0 (s = 1) the limit Tr(P_A rho_B) (Tr(rho_A P_B)) is
  /// returned, P being the support projector; it is 0 for full-rank states.
  double log_q(double s) const;
  double q(double s) const;

  std::size_t n_modes() const { return n_modes_; }

 private:
  using LMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using LVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

  struct Side {
    LMatrix cov;
    LVector mean;
    LMatrix s;
    std::vector<long double> nu;
  };

  long double log_q_interior(long double s) const;
  static long double log_support_overlap(const Side& zero_power, const Side& other);

  std::size_t n_modes_;
  Side a_;
  Side b_;
};

double q_s(const HypothesisPair& pair, double s);
double log_q_s(const HypothesisPair& pair, double s);

struct ChernoffMinimum {
  double s_star = 0.0;
  double q_min = 1.0;
  double log_q_min = 0.0;
};

/// Minimizes Q_s over [0, 1]: a 65-point uniform guard scan followed by a
/// golden-section refinement of the best bracket down to `tol` in s.
ChernoffMinimum chernoff_infimum(const HypothesisPair& pair, double tol = 1e-6);

/// ln(erfc(sqrt(x)) / 2) for x >= 0, accurate far beyond the underflow of erfc.
double log_half_erfc_sqrt(double x);

/// Inverts log_p = ln(erfc(sqrt(SNR)) / 2). Requires log_p <= ln(1/2).
double snr_from_log_p(double log_p);

struct DiscriminationResult {
  double s_star = 0.0;
  double q_min = 1.0;
  double log_q_min = 0.0;
  /// ensembles * ln(q_min) - ln 2, the natural log of the Chernoff error bound.
  double log_error_prob = 0.0;
  double snr = 0.0;
};

DiscriminationResult discriminate(const HypothesisPair& pair, double ensembles);
/// make_hypotheses -> chernoff_infimum -> SNR inversion.
DiscriminationResult snr(const ProbeSpec& probe, const TargetScenario& scenario);

}  // namespace gqi

#endif  // GQI_DISCRIMINATION_HPP
