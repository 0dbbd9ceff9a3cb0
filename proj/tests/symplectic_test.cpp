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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gqi/errors.hpp"
#include "support/random_states.hpp"

namespace gqi {
namespace {

TEST(SymplecticForm, TwoModeLayout) {
  Matrix expected(4, 4);
  expected << 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0;
  EXPECT_EQ(symplectic_form(2), expected);
}

TEST(SymplecticEigenvalues, ThermalModes) {
  const auto nu = symplectic_eigenvalues(GaussianState::thermal(2.0).cov());
  ASSERT_EQ(nu.size(), 1u);
  EXPECT_NEAR(nu[0], 5.0, 1e-12);

  Matrix v = Matrix::Zero(4, 4);
  v.diagonal() << 3, 3, 7, 7;
  const auto pair = symplectic_eigenvalues(v);
  EXPECT_NEAR(pair[0], 7.0, 1e-12);
  EXPECT_NEAR(pair[1], 3.0, 1e-12);
}

TEST(SymplecticEigenvalues, VacuumIsPure) {
  for (double nu : symplectic_eigenvalues(Matrix::Identity(4, 4))) EXPECT_NEAR(nu, 1.0, 1e-14);
}

TEST(SymplecticEigenvalues, SqueezedVacuumStaysPure) {
  const SymplecticMatrix s = single_mode_squeezer(3.0, 0, 1);
  const Matrix v = s.entries() * s.entries().transpose();
  EXPECT_NEAR(symplectic_eigenvalues(v)[0], 1.0, 1e-12);
}

TEST(SymplecticEigenvalues, RejectsUnphysical) {
  Matrix v = Matrix::Identity(2, 2) * 0.5;
  EXPECT_THROW(symplectic_eigenvalues(v), ValidationError);
}

TEST(SymplecticEigenvalues, RejectsAsymmetric) {
  Matrix v = Matrix::Identity(2, 2) * 3.0;
  v(0, 1) = 0.5;
  EXPECT_THROW(symplectic_eigenvalues(v), ValidationError);
}

TEST(SymplecticEigenvalues, RejectsOddDimension) {
  EXPECT_THROW(symplectic_eigenvalues(Matrix::Identity(3, 3)), ValidationError);
}

TEST(SymplecticEigenvalues, ClampsRoundingBelowOne) {
  const auto nu = symplectic_eigenvalues(Matrix::Identity(2, 2) * (1.0 - 1e-11));
  EXPECT_EQ(nu[0], 1.0);
}

TEST(Williamson, ReconstructsRandomCovariances) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Matrix v = testing::random_physical_cov(rng, 2);
    const WilliamsonDecomposition w = williamson(v);
    const Matrix& s = w.s_matrix.entries();
    Vector d(4);
    d << w.spectrum[0], w.spectrum[0], w.spectrum[1], w.spectrum[1];
    EXPECT_LT((s * d.asDiagonal() * s.transpose() - v).norm() / v.norm(), 1e-9);
    EXPECT_LT(symplectic_residual(s) / std::max(1.0, s.squaredNorm()), 1e-10);
    EXPECT_GE(w.spectrum[0], w.spectrum[1]);
  }
}

TEST(Williamson, SpectrumInvariantUnderSymplecticCongruence) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const Matrix v = testing::random_physical_cov(rng, 2);
    const Matrix s = testing::random_symplectic(rng, 2);
    const auto a = symplectic_eigenvalues(v);
    const auto b = symplectic_eigenvalues(s * v * s.transpose());
    EXPECT_NEAR(a[0], b[0], 1e-8 * a[0]);
    EXPECT_NEAR(a[1], b[1], 1e-8 * a[1]);
  }
}

TEST(Williamson, DiagonalThermalIsTrivial) {
  Matrix v = Matrix::Identity(2, 2) * 5.0;
  const WilliamsonDecomposition w = williamson(v);
  EXPECT_NEAR(w.spectrum[0], 5.0, 1e-12);
  EXPECT_LT((w.s_matrix.entries().cwiseAbs() - Matrix::Identity(2, 2)).norm(), 1e-12);
}

TEST(SymplecticMatrix, RejectsNonSymplectic) {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 0) = 2.0;
  EXPECT_THROW(SymplecticMatrix{m}, ValidationError);
}

TEST(SymplecticMatrix, ProductsStaySymplectic) {
  std::mt19937_64 rng(3);
  SymplecticMatrix acc = SymplecticMatrix::identity(2);
  for (int i = 0; i < 10; ++i) {
    acc = acc * SymplecticMatrix(testing::random_symplectic(rng, 2));
    EXPECT_LT(symplectic_residual(acc.entries()) / std::max(1.0, acc.entries().squaredNorm()), 1e-10);
  }
}

TEST(Squeezer, AddsRequestedPhotonsToVacuum) {
  for (double n : {0.0, 0.25, 1.0, 3.0, 100.0}) {
    const GaussianState s = apply_symplectic(GaussianState::vacuum(1), single_mode_squeezer(n, 0, 1));
    const double photons = (s.cov().trace() - 2.0) / 4.0;
    EXPECT_NEAR(photons, n, 1e-12 * std::max(1.0, n));
    EXPECT_LT(symplectic_residual(single_mode_squeezer(n, 0, 1).entries()), 1e-10);
  }
}

TEST(Squeezer, ParameterRoundTrip) {
  for (double r : {0.0, 0.1, 0.8813735870195430, 2.0}) {
    EXPECT_NEAR(squeezing_from_photons(photons_from_squeezing(r)), r, 1e-14);
  }
  EXPECT_NEAR(photons_from_squeezing(std::asinh(1.0)), 1.0, 1e-14);
}

TEST(Squeezer, RejectsNegativePhotons) { EXPECT_THROW(single_mode_squeezer(-0.1, 0, 1), ValidationError); }

TEST(GaussianState, RejectsMeanSizeMismatch) {
  EXPECT_THROW(GaussianState(Vector::Zero(3), Matrix::Identity(2, 2)), ValidationError);
}

}  // namespace
}  // namespace gqi
