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

#include "gqi/discrimination.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "gqi/errors.hpp"
#include "gqi/experiment.hpp"

namespace gqi {
namespace {

TEST(ChernoffFunctions, FrozenValues) {
  EXPECT_NEAR(g_func(0.5, 3.0), 2.41421356237309504880, 1e-14);
  EXPECT_NEAR(lambda_func(0.5, 3.0), 5.82842712474619009760, 1e-13);
}

TEST(ChernoffFunctions, PureAndUnitPowerLimits) {
  for (double p : {0.1, 0.5, 1.0}) {
    EXPECT_DOUBLE_EQ(g_func(p, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(lambda_func(p, 1.0), 1.0);
  }
  for (double x : {1.5, 3.0, 1e4}) {
    EXPECT_NEAR(g_func(1.0, x), 1.0, 1e-12);
    EXPECT_NEAR(lambda_func(1.0, x), x, 1e-12 * x);
  }
}

TEST(ChernoffFunctions, RejectOutOfDomain) {
  EXPECT_THROW(g_func(0.0, 2.0), ValidationError);
  EXPECT_THROW(g_func(0.5, 0.5), ValidationError);
  EXPECT_THROW(lambda_func(1.5, 2.0), ValidationError);
}

TEST(VOfP, UnitPowerReturnsCovariance) {
  const Matrix v = make_hypotheses(ProbeSpec::astm(1.0, 1.0), TargetScenario{0.1, 2.0, 1.0}).rho_a.cov();
  EXPECT_LT((v_of_p(v, 1.0) - v).norm() / v.norm(), 1e-10);
}

TEST(QuantumChernoff, IdenticalStatesGiveOne) {
  const GaussianState a = make_hypotheses(ProbeSpec::tmsv(1.0), TargetScenario{0.1, 1.0, 1.0}).rho_a;
  for (double s : {0.0, 0.2, 0.5, 1.0}) EXPECT_NEAR(q_s(HypothesisPair{a, a}, s), 1.0, 1e-12);
}

TEST(QuantumChernoff, PureCoherentStatesUseOverlap) {
  // Noise-free coherent probe: both hypotheses are pure, Q_s = exp(-kappa N_S)
  // for every s, endpoints included.
  const HypothesisPair h = make_hypotheses(ProbeSpec::coherent(2.0), TargetScenario{0.1, 0.0, 1.0});
  for (double s : {0.0, 0.3, 0.5, 1.0}) EXPECT_NEAR(log_q_s(h, s), -0.2, 1e-12) << "s = " << s;
}

TEST(QuantumChernoff, EndpointsAreOneForFullRankStates) {
  const HypothesisPair h = make_hypotheses(ProbeSpec::astm(0.1, 2.0), TargetScenario{0.01, 30.0, 1.0});
  EXPECT_NEAR(q_s(h, 0.0), 1.0, 1e-8);
  EXPECT_NEAR(q_s(h, 1.0), 1.0, 1e-8);
}

TEST(QuantumChernoff, BoundedByOneInside) {
  const HypothesisPair h = make_hypotheses(ProbeSpec::astm(1.0, 1.0), TargetScenario{0.3, 0.4, 1.0});
  for (int i = 1; i < 20; ++i) EXPECT_LE(q_s(h, i / 20.0), 1.0);
}

TEST(QuantumChernoff, RejectsMismatchedModes) {
  const HypothesisPair h{GaussianState::vacuum(1), GaussianState::vacuum(2)};
  EXPECT_THROW(ChernoffEvaluator{h}, ValidationError);
}

TEST(ChernoffInfimum, CoherentClosedForm) {
  // Equal-covariance displaced thermal states: ln Q_min = -kappa N_S (sqrt(N_B+1) - sqrt(N_B))^2 at s = 1/2.
  for (double nb : {0.5, 30.0, 3800.0}) {
    const HypothesisPair h = make_hypotheses(ProbeSpec::coherent(1.5), TargetScenario{0.01, nb, 1.0});
    const ChernoffMinimum m = chernoff_infimum(h);
    const double gap = std::sqrt(nb + 1.0) - std::sqrt(nb);
    const double expected = -0.01 * 1.5 * gap * gap;
    EXPECT_NEAR(m.log_q_min, expected, 1e-9 * std::abs(expected));
    EXPECT_NEAR(m.s_star, 0.5, 1e-4);
  }
}

TEST(ChernoffInfimum, SwapSymmetry) {
  const HypothesisPair h = make_hypotheses(ProbeSpec::astm(0.5, 1.0), TargetScenario{0.05, 10.0, 1.0});
  const ChernoffMinimum a = chernoff_infimum(h);
  const ChernoffMinimum b = chernoff_infimum(HypothesisPair{h.rho_b, h.rho_a});
  EXPECT_NEAR(a.log_q_min, b.log_q_min, 1e-10 * std::abs(a.log_q_min));
  EXPECT_NEAR(a.s_star, 1.0 - b.s_star, 1e-5);
}

TEST(LogHalfErfc, MatchesDirectEvaluation) {
  for (double x : {0.0, 1e-6, 0.3, 1.0, 10.0, 100.0, 600.0}) {
    EXPECT_NEAR(log_half_erfc_sqrt(x), std::log(0.5 * std::erfc(std::sqrt(x))), 1e-12 * std::max(1.0, x));
  }
  EXPECT_DOUBLE_EQ(log_half_erfc_sqrt(0.0), std::log(0.5));
}

TEST(SnrFromLogP, FrozenValues) {
  EXPECT_NEAR(snr_from_log_p(-1.0), 0.0569446755838248801, 1e-14);
  EXPECT_NEAR(snr_from_log_p(-10.0), 7.65948758688686971, 1e-12);
  EXPECT_NEAR(snr_from_log_p(-100.0), 96.4448832596616836, 1e-11);
  EXPECT_NEAR(snr_from_log_p(-1000.0), 995.282472841366465, 1e-10);
  EXPECT_NEAR(snr_from_log_p(-1e5), 99992.9780552546981, 1e-8);
  EXPECT_NEAR(snr_from_log_p(std::log(0.5 * std::erfc(1.0))), 1.0, 1e-13);
}

TEST(SnrFromLogP, InvertsLogHalfErfc) {
  for (double x : {1e-4, 0.5, 7.0, 61.0, 2000.0, 1e6}) {
    EXPECT_NEAR(snr_from_log_p(log_half_erfc_sqrt(x)), x, 1e-10 * std::max(1.0, x));
  }
  EXPECT_EQ(snr_from_log_p(std::log(0.5)), 0.0);
  EXPECT_THROW(snr_from_log_p(0.0), ValidationError);
}

TEST(Snr, CoherentFrozenValue) {
  const DiscriminationResult r = snr(ProbeSpec::coherent(1.0), TargetScenario{0.01, 3800.0, 1e7});
  EXPECT_NEAR(r.snr, 5.10916704088405347, 1e-8);
  EXPECT_NEAR(r.log_error_prob, 1e7 * r.log_q_min - std::log(2.0), 1e-6);
}

TEST(Snr, CoherentSlopeFrozenValue) {
  EXPECT_NEAR(coherent_slope(0.5, TargetScenario{0.01, 30.0, 1e7}), 819.463060728545390965, 1e-6);
}

TEST(Snr, TmsvBeatsCoherentAtLowBrightness) {
  const TargetScenario sc{0.01, 3800.0, 1e7};
  EXPECT_GT(snr(ProbeSpec::tmsv(1.0), sc).snr, snr(ProbeSpec::coherent(1.0), sc).snr);
}

TEST(Snr, IdlerSqueezingLeavesSnrUnchanged) {
  const TargetScenario sc{0.01, 3800.0, 1e7};
  const double base = snr(ProbeSpec::astm(1.0, 1.0 / 3.0), sc).snr;
  for (double n2 : {1.0, 2.0, 4.0}) {
    EXPECT_NEAR(snr(ProbeSpec::astm(1.0, 1.0 / 3.0, n2), sc).snr, base, 1e-6 * base);
  }
}

}  // namespace
}  // namespace gqi
