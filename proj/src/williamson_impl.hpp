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

#ifndef GQI_SRC_WILLIAMSON_IMPL_HPP
#define GQI_SRC_WILLIAMSON_IMPL_HPP

// Scalar-generic Williamson machinery. The public API instantiates it with
// double; the Chernoff evaluator instantiates it with long double because
// ln Q_s sits at the 1e-7 level under bright thermal noise and needs the
// extra digits.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "gqi/errors.hpp"
#include "gqi/symplectic.hpp"

namespace gqi::detail {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
MatrixX<Scalar> omega(std::size_t n_modes) {
  MatrixX<Scalar> w = MatrixX<Scalar>::Zero(2 * n_modes, 2 * n_modes);
  for (std::size_t k = 0; k < n_modes; ++k) {
    w(2 * k, 2 * k + 1) = Scalar(1);
    w(2 * k + 1, 2 * k) = Scalar(-1);
  }
  return w;
}

template <typename Scalar>
void require_covariance_shape(const MatrixX<Scalar>& cov) {
  if (cov.rows() == 0 || cov.rows() != cov.cols() || cov.rows() % 2 != 0) {
    throw ValidationError(fmt::format("covariance must be a non-empty 2n x 2n matrix, got {}x{}",
                                      cov.rows(), cov.cols()));
  }
  if (!cov.allFinite()) throw ValidationError("covariance has non-finite entries");
  const Scalar asym = (cov - cov.transpose()).norm();
  if (asym > Scalar(1e-12) * cov.norm()) {
    throw ValidationError(fmt::format("covariance is not symmetric (|V - V^T| = {:.3e})",
                                      static_cast<double>(asym)));
  }
}

/// Symmetric square root V^{1/2} and W = V^{1/2} Omega V^{1/2}.
template <typename Scalar>
struct SquareRootForm {
  MatrixX<Scalar> sqrt_cov;
  MatrixX<Scalar> w;
};

template <typename Scalar>
SquareRootForm<Scalar> square_root_form(const MatrixX<Scalar>& cov_in) {
  require_covariance_shape(cov_in);
  const MatrixX<Scalar> cov = (cov_in + cov_in.transpose()) / Scalar(2);
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> eig(cov);
  if (eig.info() != Eigen::Success) throw ValidationError("covariance eigendecomposition failed");
  const auto& w = eig.eigenvalues();
  if (!(w.minCoeff() > Scalar(0))) {
    throw ValidationError(fmt::format("covariance is not positive definite (min eigenvalue {:.3e})",
                                      static_cast<double>(w.minCoeff())));
  }
  const MatrixX<Scalar>& u = eig.eigenvectors();
  SquareRootForm<Scalar> out;
  out.sqrt_cov = u * w.cwiseSqrt().asDiagonal() * u.transpose();
  const std::size_t n = static_cast<std::size_t>(cov.rows() / 2);
  const MatrixX<Scalar> raw = out.sqrt_cov * omega<Scalar>(n) * out.sqrt_cov;
  out.w = (raw - raw.transpose()) / Scalar(2);
  return out;
}

template <typename Scalar>
Scalar validate_and_clamp(Scalar nu) {
  if (nu < Scalar(1) - Scalar(kPhysicalSlack)) {
    throw ValidationError(
        fmt::format("non-physical covariance: symplectic eigenvalue {:.12g} < 1", static_cast<double>(nu)));
  }
  return std::max(nu, Scalar(1));
}

/// Descending symplectic spectrum from the doubly degenerate spectrum of W^T W.
template <typename Scalar>
std::vector<Scalar> symplectic_spectrum(const MatrixX<Scalar>& cov) {
  const auto form = square_root_form(cov);
  const MatrixX<Scalar> gram = form.w.transpose() * form.w;
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> eig(gram, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw ValidationError("symplectic spectrum computation failed");
  const auto& lam = eig.eigenvalues();  // ascending
  const std::size_t n = static_cast<std::size_t>(cov.rows() / 2);
  std::vector<Scalar> nu(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Eigen::Index hi = lam.size() - 1 - static_cast<Eigen::Index>(2 * k);
    const Scalar pair_mean = (lam(hi) + lam(hi - 1)) / Scalar(2);
    nu[k] = validate_and_clamp(std::sqrt(std::max(pair_mean, Scalar(0))));
  }
  return nu;
}

template <typename Scalar>
struct BasicWilliamson {
  MatrixX<Scalar> s;
  std::vector<Scalar> nu;
};

template <typename Scalar>
BasicWilliamson<Scalar> williamson_decompose(const MatrixX<Scalar>& cov) {
  const auto form = square_root_form(cov);
  const std::size_t n = static_cast<std::size_t>(cov.rows() / 2);

  // Real canonical form of the antisymmetric W: W = Z (+)_k nu_k J Z^T.
  Eigen::RealSchur<MatrixX<Scalar>> schur(form.w);
  if (schur.info() != Eigen::Success) throw ValidationError("real Schur decomposition failed");
  MatrixX<Scalar> z = schur.matrixU();
  const MatrixX<Scalar> t = z.transpose() * form.w * z;

  std::vector<Scalar> nu(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Eigen::Index i = static_cast<Eigen::Index>(2 * k);
    Scalar v = (t(i, i + 1) - t(i + 1, i)) / Scalar(2);
    if (v < Scalar(0)) {
      z.col(i).swap(z.col(i + 1));
      v = -v;
    }
    nu[k] = v;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nu[a] > nu[b]; });

  MatrixX<Scalar> z_sorted(z.rows(), z.cols());
  BasicWilliamson<Scalar> out;
  out.nu.resize(n);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> inv_sqrt(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const Eigen::Index src = static_cast<Eigen::Index>(2 * order[k]);
    const Eigen::Index dst = static_cast<Eigen::Index>(2 * k);
    z_sorted.col(dst) = z.col(src);
    z_sorted.col(dst + 1) = z.col(src + 1);
    const Scalar raw = nu[order[k]];
    inv_sqrt(dst) = inv_sqrt(dst + 1) = Scalar(1) / std::sqrt(raw);
    out.nu[k] = validate_and_clamp(raw);
  }
  out.s = form.sqrt_cov * z_sorted * inv_sqrt.asDiagonal();
  return out;
}

}  // namespace gqi::detail

#endif  // GQI_SRC_WILLIAMSON_IMPL_HPP
