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

#pragma once

#include <vector>

#include "nqec/recovery.hpp"

namespace nqec {

struct MulticycleConfig {
  double T1_us = 155.0;
  std::vector<double> delay_grid_us;
  int cycles = 1;
  double dt_us = 0.0;
  // Identity disables the recovery step.
  RecoveryKind recovery = RecoveryKind::SyndromePetz;
  // Keep the no-error and weight-one Kraus operators only.
  bool restrict_to_single_qubit_corrections = true;
};

struct CurvePoint {
  double t_us = 0.0;
  double gamma_total = 0.0;  // 1 - exp(-t / T1)
  double gamma_step = 0.0;   // per-cycle damping strength
  double fidelity = 0.0;
};

struct MulticycleResult {
  std::vector<CurvePoint> points;
  std::vector<double> skipped_t_us;  // t / N - dt < 0
};

struct LifetimeFit {
  double a = 0.0;
  double b = 0.0;
  double T = 0.0;
  double residual = 0.0;  // max |model - data|
};

namespace experiments {

std::vector<double> default_delay_grid();
// Delays whose total damping strength hits each gamma.
std::vector<double> delay_grid_for_gammas(const std::vector<double>& gammas, double T1_us);

// Encoded |1_L> of the Leung code through N damp-recover cycles, read out
// through the inverse encoder on qubit 2.
MulticycleResult run_multicycle(const MulticycleConfig& cfg);
std::vector<CurvePoint> bare_qubit_curve(double T1_us, const std::vector<double>& delay_grid_us);

// f = a + b exp(-t / T). T_guess <= 0 uses half the time span.
LifetimeFit exp_fit(const std::vector<double>& ts, const std::vector<double>& fs, double T_guess = 0.0);

}  // namespace experiments
}  // namespace nqec
