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

#ifndef GQI_FOCK_ORACLE_HPP
#define GQI_FOCK_ORACLE_HPP

// Brute-force Q_s = Tr(rho_A^s rho_B^{1-s}) from truncated Fock-space
// density matrices. It shares nothing with the phase-space path except the
// probe/scenario structs, and exists to cross-check it on small instances.

#include <cstddef>

#include <Eigen/Dense>

#include "gqi/probes.hpp"

namespace gqi {

/// Fock-space picture of one hypothesis pair with a per-mode photon cutoff.
///
/// The probe is prepared as a state vector (two-mode squeezed vacuum from
/// its number-basis expansion, then single-mode squeezers exp[r (a^2 -
/// a^dagger^2) / 2] as truncated matrix exponentials; or a coherent state),
/// the signal is mixed with a Fock-diagonal thermal mode on a beam splitter
/// of transmissivity kappa, and the thermal output port is traced out.
/// Construction throws ValidationError when either truncated density matrix
/// misses more than 1e-8 of its trace.
class FockOracle {
 public:
  FockOracle(const ProbeSpec& probe, const TargetScenario& scenario, std::size_t cutoff);

  double q_s(double s) const;

  double trace_deficit_a() const { return deficit_a_; }
  double trace_deficit_b() const { return deficit_b_; }

  /// Mean photon number of the return mode under each hypothesis.
  double return_photons_a() const { return return_photons_a_; }
  double return_photons_b() const { return return_photons_b_; }

 private:
  Eigen::VectorXd eig_a_;
  Eigen::VectorXd eig_b_;
  Eigen::MatrixXd overlap_sq_;  // (b index, a index) -> |<b_j|a_i>|^2
  double deficit_a_ = 0.0;
  double deficit_b_ = 0.0;
  double return_photons_a_ = 0.0;
  double return_photons_b_ = 0.0;
};

double fock_oracle_q_s(const ProbeSpec& probe, const TargetScenario& scenario, double s, std::size_t cutoff);

}  // namespace gqi

#endif  // GQI_FOCK_ORACLE_HPP
