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

#include "gqi/symplectic.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "gqi/errors.hpp"
#include "williamson_impl.hpp"

namespace gqi {

Matrix symplectic_form(std::size_t n_modes) {
  if (n_modes == 0) throw ValidationError("symplectic_form: n_modes must be >= 1");
  return detail::omega<double>(n_modes);
}

GaussianState::GaussianState(Vector mean, Matrix cov) : mean_(std::move(mean)), cov_(std::move(cov)) {
  detail::require_covariance_shape<double>(cov_);
  if (mean_.size() != cov_.rows()) {
    throw ValidationError(fmt::format("mean has length {} but covariance is {}x{}", mean_.size(),
                                      cov_.rows(), cov_.cols()));
  }
  if (!mean_.allFinite()) throw ValidationError("mean has non-finite entries");
  n_modes_ = static_cast<std::size_t>(cov_.rows() / 2);
  // Throws on non-positive-definite or non-physical input.
  (void)detail::symplectic_spectrum<double>(cov_);
}

GaussianState GaussianState::vacuum(std::size_t n_modes) {
  if (n_modes == 0) throw ValidationError("vacuum: n_modes must be >= 1");
  return GaussianState(Vector::Zero(2 * n_modes), Matrix::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState GaussianState::thermal(double n_mean) {
  if (!(n_mean >= 0.0)) throw ValidationError(fmt::format("thermal: mean photon number {} < 0", n_mean));
  return GaussianState(Vector::Zero(2), (2.0 * n_mean + 1.0) * Matrix::Identity(2, 2));
}

double symplectic_residual(const Matrix& s) {
  const std::size_t n = static_cast<std::size_t>(s.rows() / 2);
  const Matrix w = detail::omega<double>(n);
  return (s * w * s.transpose() - w).norm();
}

SymplecticMatrix::SymplecticMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols() || entries_.rows() % 2 != 0) {
    throw ValidationError(
        fmt::format("symplectic matrix must be 2n x 2n, got {}x{}", entries_.rows(), entries_.cols()));
  }
  const double scale = std::max(1.0, entries_.squaredNorm());
  const double residual = symplectic_residual(entries_);
  if (!(residual < 1e-10 * scale)) {
    throw ValidationError(fmt::format("matrix does not preserve the symplectic form (residual {:.3e})", residual));
  }
}

SymplecticMatrix SymplecticMatrix::identity(std::size_t n_modes) {
  if (n_modes == 0) throw ValidationError("identity: n_modes must be >= 1");
  return SymplecticMatrix(Matrix::Identity(2 * n_modes, 2 * n_modes));
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
  if (rhs.entries_.rows() != entries_.rows()) throw ValidationError("symplectic product: dimension mismatch");
  return SymplecticMatrix(entries_ * rhs.entries_);
}

std::vector<double> symplectic_eigenvalues(const Matrix& cov) { return detail::symplectic_spectrum<double>(cov); }

WilliamsonDecomposition williamson(const Matrix& cov) {
  auto raw = detail::williamson_decompose<double>(cov);
  return WilliamsonDecomposition{SymplecticMatrix(std::move(raw.s)), std::move(raw.nu)};
}

GaussianState apply_symplectic(const GaussianState& state, const SymplecticMatrix& s) {
  if (s.n_modes() != state.n_modes()) {
    throw ValidationError(fmt::format("apply_symplectic: state has {} modes, symplectic acts on {}",
                                      state.n_modes(), s.n_modes()));
  }
  const Matrix& m = s.entries();
  Matrix cov = m * state.cov() * m.transpose();
  cov = (cov + cov.transpose()) / 2.0;
  return GaussianState(m * state.mean(), std::move(cov));
}

SymplecticMatrix single_mode_squeezer(double n_mean, std::size_t mode, std::size_t n_modes) {
  if (!(n_mean >= 0.0) || !std::isfinite(n_mean)) {
    throw ValidationError(fmt::format("squeezer photon number must be finite and >= 0, got {}", n_mean));
  }
  if (mode >= n_modes) {
    throw ValidationError(fmt::format("squeezer mode {} out of range for {} modes", mode, n_modes));
  }
  Matrix m = Matrix::Identity(2 * n_modes, 2 * n_modes);
  const double a = std::sqrt(n_mean + 1.0);
  const double b = std::sqrt(n_mean);
  m(2 * mode, 2 * mode) = 1.0 / (a + b);  // a - b without cancellation
  m(2 * mode + 1, 2 * mode + 1) = a + b;
  return SymplecticMatrix(std::move(m));
}

double photons_from_squeezing(double r) {
  const double s = std::sinh(r);
  return s * s;
}

double squeezing_from_photons(double n_mean) {
  if (!(n_mean >= 0.0)) throw ValidationError(fmt::format("photon number {} < 0", n_mean));
  return std::asinh(std::sqrt(n_mean));
}

}  // namespace gqi
