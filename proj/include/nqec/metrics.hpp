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

#include <utility>
#include <vector>

#include "nqec/channels.hpp"
#include "nqec/codes.hpp"
#include "nqec/orthogonalizer.hpp"
#include "nqec/recovery.hpp"

namespace nqec {

// 1 - sum_i a_i x^i, i = 1..degree.
struct PolyFit {
  std::vector<double> coefficients;
  double residual = 0.0;   // max |model - data|
  double condition = 0.0;  // of the design matrix
};

struct FidelityReport {
  std::vector<double> gamma_grid;
  std::vector<double> f_ent;
  std::vector<double> f_min;
  PolyFit fit_ent;
  PolyFit fit_min;
};

struct WorstCase {
  double value = 1.0;
  Vec state;  // codeword-frame amplitudes
  double theta = 0.0;
  double phi = 0.0;
};

struct PetzDominance {
  double f_petz = 0.0;
  double f_syndrome = 0.0;
  double eta_petz = 0.0;
  double eta_syndrome = 0.0;
  bool holds = false;
};

struct ReadoutResult {
  double readout = 0.0;  // marginal probability of m on the readout qubit
  double direct = 0.0;   // <m_L| R(A(|m_L><m_L|)) |m_L>
};

namespace metrics {

// J = sum vec(B) vec(B)^dag over B = V^dag R_k A_l V (column-major vec).
// Every fidelity below is a quadratic form in J.
Mat fidelity_matrix(const RecoveryMap& R, const KrausChannel& noise, const QuantumCode& code);

double entanglement_fidelity(const Mat& J, int d);
double entanglement_fidelity(const RecoveryMap& R, const KrausChannel& noise, const QuantumCode& code);
// <psi| R(A(|psi><psi|)) |psi> for psi = V c.
double state_fidelity(const Mat& J, const Vec& c);

WorstCase worst_case_fidelity(const Mat& J, int d);
WorstCase worst_case_fidelity(const RecoveryMap& R, const KrausChannel& noise, const QuantumCode& code);

// Throws IllConditioned when the design condition number exceeds 1e12.
PolyFit fidelity_poly_fit(const std::vector<double>& gammas, const std::vector<double>& values,
                          int degree = 5);

std::vector<double> default_gamma_grid();

PetzDominance petz_dominance_certificate(const QuantumCode& code, const KrausChannel& noise,
                                    const OrthogonalizedNoise& orth);

// (worst-case fidelity of the polar recovery, (1/d^2) sum_k |Tr M~_kk|^2).
std::pair<double, double> polar_bound_diagnostic(const OrthogonalizedNoise& orth,
                                                 const KrausChannel& noise);

// Probability that `qubit` (0-based, most significant first) reads m
// after U_en^dagger.
double readout_probability(const Mat& rho, const Mat& U_en, int m, int qubit);

ReadoutResult logical_readout_fidelity(const QuantumCode& code, const KrausChannel& noise,
                                       const RecoveryMap& R, const Mat& U_en, int m,
                                       int qubit = 1);

}  // namespace metrics
}  // namespace nqec
