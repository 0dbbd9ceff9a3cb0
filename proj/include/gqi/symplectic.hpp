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

#ifndef GQI_SYMPLECTIC_HPP
#define GQI_SYMPLECTIC_HPP

// Phase-space conventions used throughout gqi:
//
//   x = a + a^dagger,  p = -i (a - a^dagger),  ordering (x1, p1, x2, p2, ...).
//
// The vacuum covariance is the identity and a thermal mode with mean photon
// number N has covariance (2N + 1) I2. Every other module relies on this.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace gqi {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Absolute slack below 1 tolerated on symplectic eigenvalues before a
/// covariance is rejected as non-physical. Values inside the slack are
/// clamped to exactly 1.
inline constexpr double kPhysicalSlack = 1e-9;

/// Block-diagonal symplectic form, one [[0, 1], [-1, 0]] block per mode.
Matrix symplectic_form(std::size_t n_modes);

/// First and second moments of an n-mode Gaussian state.
///
/// Construction validates shape, symmetry (relative 1e-12) and the
/// uncertainty principle (all symplectic eigenvalues >= 1 - kPhysicalSlack).
class GaussianState {
 public:
  GaussianState(Vector mean, Matrix cov);

  static GaussianState vacuum(std::size_t n_modes);
  static GaussianState thermal(double n_mean);

  std::size_t n_modes() const { return n_modes_; }
  const Vector& mean() const { return mean_; }
  const Matrix& cov() const { return cov_; }

 private:
  std::size_t n_modes_;
  Vector mean_;
  Matrix cov_;
};

/// A real 2n x 2n matrix S with S Omega S^T = Omega.
class SymplecticMatrix {
 public:
  /// Throws ValidationError unless the matrix preserves the symplectic form.
  explicit SymplecticMatrix(Matrix entries);

  static SymplecticMatrix identity(std::size_t n_modes);

  std::size_t n_modes() const { return static_cast<std::size_t>(entries_.rows() / 2); }
  const Matrix& entries() const { return entries_; }

  SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;

 private:
  Matrix entries_;
};

/// Frobenius norm of S Omega S^T - Omega.
double symplectic_residual(const Matrix& s);

struct WilliamsonDecomposition {
  SymplecticMatrix s_matrix;
  /// Symplectic eigenvalues, descending, clamped to >= 1.
  std::vector<double> spectrum;
};

/// Symplectic eigenvalues (moduli of the eigenvalues of i Omega V), descending.
/// Throws ValidationError for non-symmetric, non-positive-definite or
/// non-physical input.
std::vector<double> symplectic_eigenvalues(const Matrix& cov);

/// V = S (+)_k nu_k I2 S^T, using the symmetric square-root construction.
WilliamsonDecomposition williamson(const Matrix& cov);

GaussianState apply_symplectic(const GaussianState& state, const SymplecticMatrix& s);

/// Single-mode squeezer diag(gamma_-, gamma_+) on `mode`, with
/// gamma_+- = sqrt(N + 1) +- sqrt(N) and N = sinh^2 r the photon number it
/// adds to vacuum. Squeezes x and anti-squeezes p.
SymplecticMatrix single_mode_squeezer(double n_mean, std::size_t mode, std::size_t n_modes);

/// N = sinh^2 r.
double photons_from_squeezing(double r);
/// r = asinh(sqrt(N)).
double squeezing_from_photons(double n_mean);

}  // namespace gqi

#endif  // GQI_SYMPLECTIC_HPP
