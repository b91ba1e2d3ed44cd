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


#include <gtest/gtest.h>

#include "nqec/errors.hpp"
#include "nqec/experiments.hpp"
#include "nqec/metrics.hpp"

namespace nqec {
namespace {

MulticycleConfig config(int cycles, std::vector<double> grid) {
  MulticycleConfig cfg;
  cfg.cycles = cycles;
  cfg.delay_grid_us = std::move(grid);
  return cfg;
}

TEST(Multicycle, SingleCycleIsOneMinusGammaSquared) {
  const auto res = experiments::run_multicycle(config(1, experiments::default_delay_grid()));
  ASSERT_EQ(res.points.size(), 24u);
  for (const auto& p : res.points) {
    EXPECT_NEAR(p.fidelity, 1.0 - p.gamma_total * p.gamma_total, 1e-10) << p.t_us;
    EXPECT_NEAR(p.gamma_total, 1.0 - std::exp(-p.t_us / 155.0), 1e-15);
  }
}

TEST(Multicycle, FiveCyclesQuadraticCoefficient) {
  const auto gammas = metrics::default_gamma_grid();
  const auto res = experiments::run_multicycle(config(5, experiments::delay_grid_for_gammas(gammas, 155.0)));
  std::vector<double> g, f;
  for (const auto& p : res.points) {
    g.push_back(p.gamma_total);
    f.push_back(p.fidelity);
  }
  const auto fit = metrics::fidelity_poly_fit(g, f);
  EXPECT_NEAR(fit.coefficients[1], 0.2, 0.05);
}

TEST(Multicycle, MoreCyclesHelpAtLongDelays) {
  const std::vector<double> grid{160.0, 200.0, 250.0, 300.0};
  const auto one = experiments::run_multicycle(config(1, grid));
  const auto two = experiments::run_multicycle(config(2, grid));
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_GE(two.points[i].fidelity, one.points[i].fidelity);
}

TEST(Multicycle, RecoveryTimeSkipsShortDelays) {
  MulticycleConfig cfg = config(2, {0.0, 10.0, 50.0});
  cfg.dt_us = 10.0;
  const auto res = experiments::run_multicycle(cfg);
  EXPECT_EQ(res.skipped_t_us, (std::vector<double>{0.0, 10.0}));
  ASSERT_EQ(res.points.size(), 1u);
  EXPECT_NEAR(res.points[0].gamma_step, 1.0 - std::exp(-15.0 / 155.0), 1e-15);
}

TEST(Multicycle, NoRecoveryReproducesBareDecay) {
  MulticycleConfig cfg = config(1, {0.0, 50.0, 100.0});
  cfg.recovery = RecoveryKind::Identity;
  const auto res = experiments::run_multicycle(cfg);
  // Without recovery |1_L> keeps its readout only if no qubit decays.
  for (const auto& p : res.points) EXPECT_LE(p.fidelity, 1.0 - p.gamma_total * p.gamma_total + 1e-12);
}

TEST(Multicycle, RejectsBadConfig) {
  EXPECT_THROW(experiments::run_multicycle(config(0, {1.0})), OutOfRange);
  MulticycleConfig cfg = config(1, {1.0});
  cfg.T1_us = 0.0;
  EXPECT_THROW(experiments::run_multicycle(cfg), OutOfRange);
}

TEST(ExpFit, RoundTripsSyntheticData) {
  std::vector<double> ts, fs;
  for (int i = 0; i <= 30; ++i) {
    ts.push_back(10.0 * i);
    fs.push_back(0.1 + 0.85 * std::exp(-ts.back() / 420.0));
  }
  const auto fit = experiments::exp_fit(ts, fs);
  EXPECT_NEAR(fit.a, 0.1, 1e-4);
  EXPECT_NEAR(fit.b, 0.85, 1e-4);
  EXPECT_NEAR(fit.T, 420.0, 420.0 * 1e-4);
}

TEST(ExpFit, BareQubitCurveRecoversT1) {
  const auto curve = experiments::bare_qubit_curve(155.0, experiments::default_delay_grid());
  std::vector<double> ts, fs;
  for (const auto& p : curve) {
    ts.push_back(p.t_us);
    fs.push_back(p.fidelity);
  }
  const auto fit = experiments::exp_fit(ts, fs);
  EXPECT_NEAR(fit.T, 155.0, 0.155);
}

TEST(ExpFit, QecCurveOutlivesBareQubit) {
  const auto grid = experiments::default_delay_grid();
  const auto res = experiments::run_multicycle(config(1, grid));
  std::vector<double> ts, fs;
  for (const auto& p : res.points) {
    ts.push_back(p.t_us);
    fs.push_back(p.fidelity);
  }
  EXPECT_GT(experiments::exp_fit(ts, fs, 155.0).T, 2.0 * 155.0);
}

TEST(ExpFit, RejectsShortInput) {
  EXPECT_THROW(experiments::exp_fit({0.0, 1.0}, {1.0, 0.9}), OutOfRange);
  EXPECT_THROW(experiments::exp_fit({0.0, 1.0, 2.0}, {1.0, 0.9}), DimensionMismatch);
}

TEST(DelayGrid, InvertsGammaFromDelay) {
  const auto ts = experiments::delay_grid_for_gammas({0.0, 0.1, 0.5}, 155.0);
  EXPECT_DOUBLE_EQ(ts[0], 0.0);
  EXPECT_NEAR(1.0 - std::exp(-ts[1] / 155.0), 0.1, 1e-15);
  EXPECT_NEAR(1.0 - std::exp(-ts[2] / 155.0), 0.5, 1e-15);
  EXPECT_THROW(experiments::delay_grid_for_gammas({1.0}, 155.0), OutOfRange);
}

}  // namespace
}  // namespace nqec
