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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "gqi/errors.hpp"
#include "williamson_impl.hpp"

namespace gqi {
namespace {

template <typename Scalar>
void require_order(Scalar p) {
  if (!(p > Scalar(0) && p <= Scalar(1))) {
    throw ValidationError(fmt::format("order p must lie in (0, 1], got {}", static_cast<double>(p)));
  }
}

template <typename Scalar>
void require_spectrum_point(Scalar x) {
  if (!(x >= Scalar(1))) {
    throw ValidationError(fmt::format("symplectic eigenvalue argument must be >= 1, got {}", static_cast<double>(x)));
  }
}

// With t = ln((x + 1)/(x - 1)): (x + 1)^p - (x - 1)^p = (x - 1)^p expm1(p t).
template <typename Scalar>
Scalar log_g(Scalar p, Scalar x) {
  if (x == Scalar(1)) return Scalar(0);
  const Scalar t = std::log1p(Scalar(2) / (x - Scalar(1)));
  return p * std::numbers::ln2_v<Scalar> - p * std::log(x - Scalar(1)) - std::log(std::expm1(p * t));
}

template <typename Scalar>
Scalar lambda(Scalar p, Scalar x) {
  if (x == Scalar(1)) return Scalar(1);
  const Scalar t = std::log1p(Scalar(2) / (x - Scalar(1)));
  return Scalar(1) + Scalar(2) / std::expm1(p * t);
}

double validated_s(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw ValidationError(fmt::format("s must lie in [0, 1], got {}", s));
  return s;
}

}  // namespace

double g_func(double p, double x) {
  require_order(p);
  require_spectrum_point(x);
  return static_cast<double>(std::exp(log_g<long double>(p, x)));
}

double lambda_func(double p, double x) {
  require_order(p);
  require_spectrum_point(x);
  return static_cast<double>(lambda<long double>(p, x));
}

Matrix v_of_p(const Matrix& cov, double p) {
  require_order(p);
  const auto w = detail::williamson_decompose<double>(cov);
  Vector diag(cov.rows());
  for (std::size_t k = 0; k < w.nu.size(); ++k) {
    diag(2 * k) = diag(2 * k + 1) = lambda<double>(p, w.nu[k]);
  }
  Matrix out = w.s * diag.asDiagonal() * w.s.transpose();
  return (out + out.transpose()) / 2.0;
}

ChernoffEvaluator::ChernoffEvaluator(const HypothesisPair& pair) : n_modes_(pair.rho_a.n_modes()) {
  if (pair.rho_b.n_modes() != n_modes_) {
    throw ValidationError(fmt::format("hypotheses have different mode counts ({} vs {})", pair.rho_a.n_modes(),
                                      pair.rho_b.n_modes()));
  }
  auto prepare = [](const GaussianState& state) {
    Side side;
    side.cov = state.cov().cast<long double>();
    side.mean = state.mean().cast<long double>();
    auto w = detail::williamson_decompose<long double>(side.cov);
    side.s = std::move(w.s);
    side.nu = std::move(w.nu);
    return side;
  };
  a_ = prepare(pair.rho_a);
  b_ = prepare(pair.rho_b);
}

long double ChernoffEvaluator::log_q_interior(long double s) const {
  const long double t = 1.0L - s;
  const Eigen::Index dim = static_cast<Eigen::Index>(2 * n_modes_);
  LVector diag_a(dim);
  LVector diag_b(dim);
  long double log_q = static_cast<long double>(n_modes_) * std::numbers::ln2_v<long double>;
  for (std::size_t k = 0; k < n_modes_; ++k) {
    diag_a(2 * k) = diag_a(2 * k + 1) = lambda(s, a_.nu[k]);
    diag_b(2 * k) = diag_b(2 * k + 1) = lambda(t, b_.nu[k]);
    log_q += log_g(s, a_.nu[k]) + log_g(t, b_.nu[k]);
  }
  LMatrix sigma = a_.s * diag_a.asDiagonal() * a_.s.transpose() + b_.s * diag_b.asDiagonal() * b_.s.transpose();
  sigma = (sigma + sigma.transpose()) / 2.0L;
  const Eigen::LLT<LMatrix> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw ValidationError(fmt::format("V_A(s) + V_B(1 - s) is singular at s = {}", static_cast<double>(s)));
  }
  long double log_det = 0.0L;
  const LMatrix& l = llt.matrixL();
  for (Eigen::Index i = 0; i < dim; ++i) log_det += 2.0L * std::log(l(i, i));
  log_q -= log_det / 2.0L;

  const LVector d = a_.mean - b_.mean;
  if (d.squaredNorm() > 0.0L) log_q -= d.dot(llt.solve(d)) / 2.0L;
  return log_q;
}

// Limit of ln Tr(X^s Y) as s -> 0: X^0 is the projector onto the vacuum of
// the pure Williamson modes of X (identity on the mixed ones), so only the
// marginal of S_X^{-1} Y S_X^{-T} on those modes contributes.
long double ChernoffEvaluator::log_support_overlap(const Side& zero_power, const Side& other) {
  std::vector<Eigen::Index> rows;
  for (std::size_t k = 0; k < zero_power.nu.size(); ++k) {
    if (zero_power.nu[k] == 1.0L) {
      rows.push_back(static_cast<Eigen::Index>(2 * k));
      rows.push_back(static_cast<Eigen::Index>(2 * k + 1));
    }
  }
  if (rows.empty()) return 0.0L;

  const Eigen::PartialPivLU<LMatrix> lu(zero_power.s);
  const LMatrix cov = lu.solve(lu.solve(other.cov).transpose());
  const LVector shift = lu.solve(LVector(other.mean - zero_power.mean));

  const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
  LMatrix sub(m, m);
  LVector d(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    d(i) = shift(rows[i]);
    for (Eigen::Index j = 0; j < m; ++j) sub(i, j) = cov(rows[i], rows[j]);
  }
  sub += LMatrix::Identity(m, m);
  sub = (sub + sub.transpose()) / 2.0L;
  const Eigen::LLT<LMatrix> llt(sub);
  if (llt.info() != Eigen::Success) throw ValidationError("support overlap matrix is singular");
  long double log_det = 0.0L;
  const LMatrix& l = llt.matrixL();
  for (Eigen::Index i = 0; i < m; ++i) log_det += 2.0L * std::log(l(i, i));
  long double out = static_cast<long double>(m / 2) * std::numbers::ln2_v<long double> - log_det / 2.0L;
  if (d.squaredNorm() > 0.0L) out -= d.dot(llt.solve(d)) / 2.0L;
  return out;
}

double ChernoffEvaluator::log_q(double s) const {
  validated_s(s);
  long double out = 0.0L;
  if (s == 0.0) {
    out = log_support_overlap(a_, b_);
  } else if (s == 1.0) {
    out = log_support_overlap(b_, a_);
  } else {
    out = log_q_interior(static_cast<long double>(s));
  }
  // Q_s <= 1; anything above is rounding.
  return static_cast<double>(std::min(out, 0.0L));
}

double ChernoffEvaluator::q(double s) const { return std::exp(log_q(s)); }

double q_s(const HypothesisPair& pair, double s) { return ChernoffEvaluator(pair).q(validated_s(s)); }

double log_q_s(const HypothesisPair& pair, double s) { return ChernoffEvaluator(pair).log_q(validated_s(s)); }

ChernoffMinimum chernoff_infimum(const HypothesisPair& pair, double tol) {
  if (!(tol > 0.0)) throw ValidationError(fmt::format("chernoff_infimum: tolerance must be > 0, got {}", tol));
  const ChernoffEvaluator eval(pair);

  ChernoffMinimum best{0.0, 1.0, std::numeric_limits<double>::infinity()};
  auto visit = [&](double s) {
    const double v = eval.log_q(s);
    if (v < best.log_q_min) {
      best.log_q_min = v;
      best.s_star = s;
    }
    return v;
  };

  constexpr int kGuardPoints = 64;
  int best_index = 0;
  for (int i = 0; i <= kGuardPoints; ++i) {
    const double before = best.log_q_min;
    visit(static_cast<double>(i) / kGuardPoints);
    if (best.log_q_min < before) best_index = i;
  }

  double lo = static_cast<double>(std::max(best_index - 1, 0)) / kGuardPoints;
  double hi = static_cast<double>(std::min(best_index + 1, kGuardPoints)) / kGuardPoints;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = visit(x1);
  double f2 = visit(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = visit(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = visit(x2);
    }
  }
  best.q_min = std::exp(best.log_q_min);
  return best;
}

double log_half_erfc_sqrt(double x) {
  if (!(x >= 0.0)) throw ValidationError(fmt::format("log_half_erfc_sqrt: x must be >= 0, got {}", x));
  constexpr double kLn2 = std::numbers::ln2;
  const double y = std::sqrt(x);
  if (y < 0.5) return std::log1p(-std::erf(y)) - kLn2;
  if (y < 25.0) return std::log(std::erfc(y)) - kLn2;
  // erfc(y) = exp(-y^2) / (y sqrt(pi)) * sum_k (-1)^k (2k - 1)!! / (2 y^2)^k
  double term = 1.0;
  double series = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= -(2.0 * k - 1.0) / (2.0 * x);
    series += term;
    if (std::abs(term) < 1e-18) break;
  }
  return -x - std::log(y * std::sqrt(std::numbers::pi)) + std::log(series) - kLn2;
}

double snr_from_log_p(double log_p) {
  constexpr double kLogHalf = -std::numbers::ln2;
  if (std::isnan(log_p) || log_p > kLogHalf * (1.0 - 1e-15)) {
    throw ValidationError(fmt::format("log error probability must be <= ln(1/2), got {}", log_p));
  }
  if (log_p >= kLogHalf) return 0.0;
  if (std::isinf(log_p)) return std::numeric_limits<double>::infinity();

  auto residual = [&](double x) { return log_half_erfc_sqrt(x) - log_p; };
  double lo = 0.0;
  double hi = std::max(1.0, -log_p);
  while (residual(hi) > 0.0) hi *= 2.0;

  // Asymptotic seed: ln(erfc(sqrt x)/2) ~ -x - ln(sqrt(pi x)) - ln 2.
  double x = std::clamp(-log_p - 0.5 * std::log(std::numbers::pi * std::max(-log_p, 1.0)) - std::numbers::ln2,
                        lo, hi);
  if (x <= lo || x >= hi) x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = residual(x);
    if (f == 0.0) return x;
    if (f > 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double log_erfc = f + log_p + std::numbers::ln2;
    const double slope = -std::exp(-x - log_erfc) / std::sqrt(std::numbers::pi * x);
    double next = x - f / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * std::max(x, 1e-300) || hi - lo <= 1e-15 * hi) return next;
    x = next;
  }
  return x;
}

DiscriminationResult discriminate(const HypothesisPair& pair, double ensembles) {
  if (!(ensembles > 0.0) || !std::isfinite(ensembles)) {
    throw ValidationError(fmt::format("ensembles must be finite and > 0, got {}", ensembles));
  }
  const ChernoffMinimum m = chernoff_infimum(pair);
  DiscriminationResult out;
  out.s_star = m.s_star;
  out.q_min = m.q_min;
  out.log_q_min = m.log_q_min;
  out.log_error_prob = ensembles * m.log_q_min - std::numbers::ln2;
  out.snr = snr_from_log_p(out.log_error_prob);
  return out;
}

DiscriminationResult snr(const ProbeSpec& probe, const TargetScenario& scenario) {
  return discriminate(make_hypotheses(probe, scenario), scenario.ensembles);
}

}  // namespace gqi
