// Copyright 2026 The nqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nqec/experiments.hpp"

#include <cmath>
#include <iostream>
#include <limits>

#include <unsupported/Eigen/NonLinearOptimization>

#include "nqec/metrics.hpp"

namespace nqec::experiments {

std::vector<double> default_delay_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 23; ++i) g.push_back(10.0 * i);
  return g;
}

std::vector<double> delay_grid_for_gammas(const std::vector<double>& gammas, double T1_us) {
  std::vector<double> out;
  for (double g : gammas) {
    if (!(g >= 0.0 && g < 1.0)) throw OutOfRange("delay_grid_for_gammas");
    out.push_back(-T1_us * std::log1p(-g));
  }
  return out;
}

namespace {

RecoveryMap cycle_recovery(const MulticycleConfig& cfg, const QuantumCode& code,
                           const KrausChannel& noise) {
  switch (cfg.recovery) {
    case RecoveryKind::Identity: {
      RecoveryMap none;
      none.kind = RecoveryKind::Identity;
      none.codewords = code.codewords;
      none.completion = Mat::Identity(code.dim(), code.dim());
      return none;
    }
    case RecoveryKind::Petz: return recovery::petz(code, noise);
    case RecoveryKind::Leung: return recovery::leung_recovery(code, noise);
    case RecoveryKind::SyndromePetz:
    case RecoveryKind::PolarRE:
    case RecoveryKind::Restricted: {
      const auto orth =
          orthogonalizer::orthogonalize(noise, code, orthogonalizer::leung_order(noise));
      RecoveryMap r = cfg.recovery == RecoveryKind::PolarRE ? recovery::polar_recovery(orth)
                                                            : recovery::syndrome_petz(orth);
      if (!cfg.restrict_to_single_qubit_corrections) return r;
      std::size_t keep = 0;
      while (keep < orth.records.size() &&
             orthogonalizer::label_weight(orth.records[keep].label) <= 1) {
        ++keep;
      }
      return recovery::restricted(r, keep);
    }
    case RecoveryKind::StabilizerLookup: break;
  }
  throw OutOfRange("run_multicycle: unsupported recovery " + to_string(cfg.recovery));
}

}  // namespace

MulticycleResult run_multicycle(const MulticycleConfig& cfg) {
  if (cfg.cycles < 1) throw OutOfRange("run_multicycle: cycles < 1");
  if (!(cfg.T1_us > 0.0)) throw OutOfRange("run_multicycle: T1");
  const QuantumCode code = codes::leung_code();
  const Mat U_en = codes::encoding_unitary(codes::leung_truth_table());
  const Vec one = code.codeword(1);
  MulticycleResult res;
  for (double t : cfg.delay_grid_us) {
    const double step = t / cfg.cycles - cfg.dt_us;
    if (step < 0.0) {
      std::cerr << "warning: skipping t = " << t << " us (recovery time exceeds the cycle)\n";
      res.skipped_t_us.push_back(t);
      continue;
    }
    CurvePoint p;
    p.t_us = t;
    p.gamma_total = channels::gamma_from_delay(t, cfg.T1_us);
    p.gamma_step = channels::gamma_from_delay(step, cfg.T1_us);
    const KrausChannel noise =
        channels::n_fold_product(channels::amplitude_damping(p.gamma_step), code.n);
    const RecoveryMap R = cycle_recovery(cfg, code, noise);
    Mat rho = one * one.adjoint();
    for (int c = 0; c < cfg.cycles; ++c) rho = recovery::apply_recovery(R, channels::apply(noise, rho));
    p.fidelity = metrics::readout_probability(rho, U_en, 1, 1);
    res.points.push_back(p);
  }
  return res;
}

std::vector<CurvePoint> bare_qubit_curve(double T1_us, const std::vector<double>& delay_grid_us) {
  if (!(T1_us > 0.0)) throw OutOfRange("bare_qubit_curve: T1");
  std::vector<CurvePoint> out;
  for (double t : delay_grid_us) {
    CurvePoint p;
    p.t_us = t;
    p.gamma_total = p.gamma_step = channels::gamma_from_delay(t, T1_us);
    p.fidelity = std::exp(-t / T1_us);
    out.push_back(p);
  }
  return out;
}

namespace {

struct ExpResidual {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  const std::vector<double>& t;
  const std::vector<double>& f;

  int inputs() const { return 3; }
  int values() const { return static_cast<int>(t.size()); }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& r) const {
    for (std::size_t i = 0; i < t.size(); ++i) {
      r(static_cast<Eigen::Index>(i)) = x(0) + x(1) * std::exp(-t[i] / x(2)) - f[i];
    }
    return 0;
  }
  int df(const Eigen::VectorXd& x, Eigen::MatrixXd& J) const {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double e = std::exp(-t[i] / x(2));
      const auto k = static_cast<Eigen::Index>(i);
      J(k, 0) = 1.0;
      J(k, 1) = e;
      J(k, 2) = x(1) * e * t[i] / (x(2) * x(2));
    }
    return 0;
  }
};

// Least-squares (a, b) for fixed T.
Eigen::Vector2d linear_ab(const std::vector<double>& ts, const std::vector<double>& fs, double T) {
  Eigen::MatrixXd X(static_cast<Eigen::Index>(ts.size()), 2);
  Eigen::VectorXd y(static_cast<Eigen::Index>(ts.size()));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    X(static_cast<Eigen::Index>(i), 0) = 1.0;
    X(static_cast<Eigen::Index>(i), 1) = std::exp(-ts[i] / T);
    y(static_cast<Eigen::Index>(i)) = fs[i];
  }
  return X.colPivHouseholderQr().solve(y);
}

}  // namespace

LifetimeFit exp_fit(const std::vector<double>& ts, const std::vector<double>& fs, double T_guess) {
  if (ts.size() != fs.size()) throw DimensionMismatch("exp_fit: sizes");
  if (ts.size() < 4) throw OutOfRange("exp_fit: need at least 4 points");
  double tmin = ts.front(), tmax = ts.front();
  for (double t : ts) {
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }
  if (!(tmax > tmin)) throw OutOfRange("exp_fit: degenerate time grid");
  const double scale = T_guess > 0.0 ? T_guess : 0.5 * (tmax - tmin);
  ExpResidual functor{ts, fs};
  LifetimeFit best;
  double best_sse = std::numeric_limits<double>::infinity();
  bool any = false;
  for (double T0 : {scale / 4.0, scale, 4.0 * scale}) {
    const Eigen::Vector2d ab = linear_ab(ts, fs, T0);
    Eigen::VectorXd x(3);
    x << ab(0), ab(1), T0;
    Eigen::LevenbergMarquardt<ExpResidual> lm(functor);
    lm.parameters.xtol = 1e-12;
    lm.parameters.ftol = 1e-14;
    lm.parameters.maxfev = 4000;
    const auto status = lm.minimize(x);
    using namespace Eigen::LevenbergMarquardtSpace;
    const bool ok = status == RelativeReductionTooSmall || status == RelativeErrorTooSmall ||
                    status == RelativeErrorAndReductionTooSmall || status == CosinusTooSmall;
    if (!ok || !(x(2) > 0.0) || !std::isfinite(x(2))) continue;
    Eigen::VectorXd r(static_cast<Eigen::Index>(ts.size()));
    functor(x, r);
    const double sse = r.squaredNorm();
    if (sse < best_sse) {
      best_sse = sse;
      best = {x(0), x(1), x(2), r.cwiseAbs().maxCoeff()};
      any = true;
    }
  }
  if (!any) throw NoConvergence("exp_fit: no start converged");
  return best;
}

}  // namespace nqec::experiments
