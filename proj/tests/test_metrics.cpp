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
#include "nqec/metrics.hpp"
#include "nqec/orthogonalizer.hpp"
#include "test_util.hpp"

namespace nqec {
namespace {

OrthogonalizedNoise leung_orth(double g) {
  const KrausChannel noise = testing::ad_noise(g, 4);
  return orthogonalizer::orthogonalize(noise, codes::leung_code(), orthogonalizer::leung_order(noise));
}

std::vector<RecoveryMap> leung_recoveries(double g) {
  const QuantumCode code = codes::leung_code();
  const KrausChannel noise = testing::ad_noise(g, 4);
  const auto orth = leung_orth(g);
  return {recovery::identity_recovery(code), recovery::petz(code, noise), recovery::syndrome_petz(orth),
          recovery::polar_recovery(orth), recovery::leung_recovery(code, noise)};
}

TEST(EntanglementFidelity, MatchesTraceFormulaOracle) {
  const double g = 0.1;
  const QuantumCode code = codes::leung_code();
  const KrausChannel noise = testing::ad_noise(g, 4);
  for (const auto& R : leung_recoveries(g)) {
    EXPECT_NEAR(metrics::entanglement_fidelity(R, noise, code), testing::direct_entanglement_fidelity(R, noise, code),
                1e-12)
        << to_string(R.kind);
  }
}

TEST(EntanglementFidelity, SixQubitDepolarizingOracle) {
  const QuantumCode code = codes::six_qubit_code();
  const KrausChannel noise = channels::depolarizing(0.05, 6);
  const auto orth = orthogonalizer::orthogonalize(noise, code, orthogonalizer::default_order(noise));
  const RecoveryMap R = recovery::syndrome_petz(orth);
  EXPECT_NEAR(metrics::entanglement_fidelity(R, noise, code), testing::direct_entanglement_fidelity(R, noise, code),
              1e-12);
}

TEST(EntanglementFidelity, IdentityNoiseIsPerfect) {
  const QuantumCode code = codes::leung_code();
  const KrausChannel noise = channels::identity_channel(16);
  EXPECT_NEAR(metrics::entanglement_fidelity(recovery::identity_recovery(code), noise, code), 1.0, 1e-14);
  EXPECT_NEAR(metrics::entanglement_fidelity(recovery::petz(code, noise), noise, code), 1.0, 1e-12);
}

TEST(StateFidelity, MatchesDensityMatrixOracle) {
  const double g = 0.12;
  const QuantumCode code = codes::leung_code();
  const KrausChannel noise = testing::ad_noise(g, 4);
  std::mt19937 rng(61);
  for (const auto& R : leung_recoveries(g)) {
    const Mat J = metrics::fidelity_matrix(R, noise, code);
    for (int trial = 0; trial < 5; ++trial) {
      const Vec c = testing::random_state(rng, 2);
      EXPECT_NEAR(metrics::state_fidelity(J, c), testing::direct_state_fidelity(R, noise, code.codewords * c), 1e-12)
          << to_string(R.kind);
    }
  }
}

TEST(StateFidelity, FrameChangeIsHonoured) {
  // A recovery whose codeword frame is rotated by a logical unitary.
  const double g = 0.1;
  const QuantumCode code = codes::leung_code();
  const KrausChannel noise = testing::ad_noise(g, 4);
  RecoveryMap R = recovery::syndrome_petz(leung_orth(g));
  Mat u(2, 2);
  u << 0.0, 1.0, 1.0, 0.0;
  R.codewords = code.codewords * u;
  const Vec c = (Vec(2) << 0.6, cplx(0.0, 0.8)).finished();
  const Mat J = metrics::fidelity_matrix(R, noise, code);
  EXPECT_NEAR(metrics::state_fidelity(J, c), testing::direct_state_fidelity(R, noise, code.codewords * c), 1e-12);
}

TEST(WorstCase, BelowEverySampledState) {
  const double g = 0.1;
  const QuantumCode code = codes::leung_code();
  const KrausChannel noise = testing::ad_noise(g, 4);
  std::mt19937 rng(67);
  for (const auto& R : leung_recoveries(g)) {
    const Mat J = metrics::fidelity_matrix(R, noise, code);
    const auto wc = metrics::worst_case_fidelity(J, 2);
    EXPECT_NEAR(metrics::state_fidelity(J, wc.state), wc.value, 1e-14);
    for (int trial = 0; trial < 200; ++trial) {
      EXPECT_LE(wc.value, metrics::state_fidelity(J, testing::random_state(rng, 2)) + 1e-12);
    }
    // The minimum never exceeds the average fidelity (d F_ent + 1) / (d + 1).
    EXPECT_LE(wc.value, (2.0 * metrics::entanglement_fidelity(J, 2) + 1.0) / 3.0 + 1e-12);
  }
}

TEST(WorstCase, RejectsLargerCodes) {
  EXPECT_THROW(metrics::worst_case_fidelity(Mat::Identity(9, 9), 3), UnsupportedDimension);
}

TEST(PolyFit, RecoversKnownPolynomial) {
  const std::vector<double> a{1e-7, 1.25, -0.5, 0.3, 2.0};
  std::vector<double> g = metrics::default_gamma_grid(), f;
  for (double x : g) {
    double s = 0.0, p = x;
    for (double c : a) {
      s += c * p;
      p *= x;
    }
    f.push_back(1.0 - s);
  }
  const PolyFit fit = metrics::fidelity_poly_fit(g, f);
  ASSERT_EQ(fit.coefficients.size(), 5u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(fit.coefficients[i], a[i], 1e-6);
  EXPECT_LT(fit.residual, 1e-12);
}

TEST(PolyFit, RejectsDegenerateGrid) {
  const std::vector<double> g(10, 0.1), f(10, 0.99);
  EXPECT_THROW(metrics::fidelity_poly_fit(g, f), IllConditioned);
  EXPECT_THROW(metrics::fidelity_poly_fit({0.1, 0.2}, {0.9, 0.8}), OutOfRange);
}

TEST(DefaultGrid, Range) {
  const auto g = metrics::default_gamma_grid();
  EXPECT_EQ(g.size(), 40u);
  EXPECT_NEAR(g.front(), 0.005, 1e-15);
  EXPECT_NEAR(g.back(), 0.2, 1e-15);
}

TEST(PetzDominance, HoldsOnLeungGrid) {
  const QuantumCode code = codes::leung_code();
  for (int i = 1; i <= 10; ++i) {
    const double g = 0.02 * i;
    const KrausChannel noise = testing::ad_noise(g, 4);
    const auto r = metrics::petz_dominance_certificate(code, noise, leung_orth(g));
    EXPECT_TRUE(r.holds) << g;
    EXPECT_GE(r.f_petz, r.f_syndrome * r.f_syndrome);
    EXPECT_LE(r.eta_petz, 2.0 * r.eta_syndrome);
  }
}

TEST(PetzDominance, SixQubitAmplitudeDamping) {
  const QuantumCode code = codes::six_qubit_code();
  const KrausChannel noise = testing::ad_noise(0.05, 6);
  const auto orth = orthogonalizer::orthogonalize(noise, code, orthogonalizer::default_order(noise));
  const auto r = metrics::petz_dominance_certificate(code, noise, orth);
  EXPECT_TRUE(r.holds);
  EXPECT_GT(r.f_petz, r.f_syndrome);
}

TEST(PolarBound, LowerBoundHoldsForLeung) {
  const auto orth = leung_orth(0.1);
  const auto [lhs, rhs] = metrics::polar_bound_diagnostic(orth, testing::ad_noise(0.1, 4));
  EXPECT_GE(lhs, rhs - 1e-12);
  EXPECT_GT(rhs, 0.0);
}

TEST(Readout, MatchesDirectFidelityForFullRecovery) {
  const QuantumCode code = codes::leung_code();
  const Mat U = codes::encoding_unitary(codes::leung_truth_table());
  for (double g : {0.05, 0.1}) {
    const KrausChannel noise = testing::ad_noise(g, 4);
    const RecoveryMap R = recovery::syndrome_petz(leung_orth(g));
    for (int m : {0, 1}) {
      const auto r = metrics::logical_readout_fidelity(code, noise, R, U, m);
      EXPECT_NEAR(r.readout, r.direct, 1e-10) << g << " " << m;
    }
  }
}

TEST(Readout, RestrictedRecoveryClosedForms) {
  const QuantumCode code = codes::leung_code();
  const Mat U = codes::encoding_unitary(codes::leung_truth_table());
  for (double g : {0.03, 0.1, 0.2}) {
    const KrausChannel noise = testing::ad_noise(g, 4);
    const RecoveryMap R = recovery::restricted(recovery::syndrome_petz(leung_orth(g)), 5);
    const auto one = metrics::logical_readout_fidelity(code, noise, R, U, 1);
    EXPECT_NEAR(one.readout, 1.0 - g * g, 1e-12);
    EXPECT_NEAR(one.direct, 1.0 - g * g, 1e-12);
    // |0_L>: no-damping, single damping and full decay channels, plus the completion's share.
    const double q = std::pow(1 - g, 4);
    const double alpha = 1.0 / std::sqrt(1.0 + q), beta = (1 - g) * (1 - g) * alpha;
    const double expect = (1 + q) / 2 + 2 * g * std::pow(1 - g, 3) + alpha * alpha * std::pow(g, 4) / 2 +
                          std::pow(beta - alpha, 2) * beta * beta * std::pow(g, 4) / 4;
    EXPECT_NEAR(metrics::logical_readout_fidelity(code, noise, R, U, 0).direct, expect, 1e-12);
  }
}

TEST(Readout, RejectsWrongEncoder) {
  const QuantumCode code = codes::leung_code();
  const KrausChannel noise = testing::ad_noise(0.1, 4);
  const RecoveryMap R = recovery::syndrome_petz(leung_orth(0.1));
  EXPECT_THROW(metrics::logical_readout_fidelity(code, noise, R, Mat::Identity(16, 16), 1), TruthTableMismatch);
}

TEST(ReadoutProbability, MarginalOfBasisState) {
  const Vec v = codes::basis_ket("0100");
  const Mat rho = v * v.adjoint();
  EXPECT_DOUBLE_EQ(metrics::readout_probability(rho, Mat::Identity(16, 16), 1, 1), 1.0);
  EXPECT_DOUBLE_EQ(metrics::readout_probability(rho, Mat::Identity(16, 16), 1, 0), 0.0);
  EXPECT_THROW(metrics::readout_probability(rho, Mat::Identity(16, 16), 1, 4), OutOfRange);
}

}  // namespace
}  // namespace nqec
