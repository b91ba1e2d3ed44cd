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

#include <algorithm>

#include "nqec/errors.hpp"
#include "nqec/orthogonalizer.hpp"
#include "test_util.hpp"

namespace nqec {
namespace {

OrthogonalizedNoise leung_orth(double g) {
  const KrausChannel noise = testing::ad_noise(g, 4);
  return orthogonalizer::orthogonalize(noise, codes::leung_code(), orthogonalizer::leung_order(noise));
}

double max_offdiag_overlap(const OrthogonalizedNoise& orth) {
  double worst = 0.0;
  for (std::size_t k = 0; k < orth.records.size(); ++k)
    for (std::size_t l = 0; l < orth.records.size(); ++l)
      if (k != l) worst = std::max(worst, matkernel::max_abs(orth.records[k].EV.adjoint() * orth.records[l].EV));
  return worst;
}

TEST(Orthogonalize, LeungTenRecordsAndOneDrop) {
  const auto orth = leung_orth(0.1);
  EXPECT_EQ(orth.records.size(), 10u);
  ASSERT_FALSE(orth.dropped.empty());
  EXPECT_EQ(orth.dropped.front(), "D_0011");
  const std::vector<std::string> expect{"D_0000", "D_0001", "D_0010", "D_0100", "D_1000",
                                        "D_1001", "D_0110", "D_0101", "D_1010", "D_1100"};
  EXPECT_EQ(orth.source_labels(), expect);
}

TEST(Orthogonalize, LeungLeadingRecordsAreUntouched) {
  const double g = 0.1;
  const KrausChannel noise = testing::ad_noise(g, 4);
  const auto orth = leung_orth(g);
  const Mat P = orth.code.projector();
  for (std::size_t k = 0; k < 9; ++k) {
    const auto& r = orth.records[k];
    EXPECT_LT(matkernel::max_abs(r.E_restricted - noise.apply_op(r.source_index, P)), 1e-12) << r.label;
  }
  // Only the last record is modified by the projection.
  const auto& last = orth.records.back();
  EXPECT_GT(matkernel::max_abs(last.E_restricted - noise.apply_op(last.source_index, P)), 1e-3);
}

TEST(Orthogonalize, NoDampingSupportIsWholeCodespace) {
  const auto orth = leung_orth(0.1);
  EXPECT_LT(matkernel::max_abs(orth.records[0].P_support - orth.code.projector()), 1e-12);
}

TEST(Orthogonalize, CertificatesHoldForLeung) {
  for (double g : {0.01, 0.05, 0.1, 0.2}) {
    const auto orth = leung_orth(g);
    EXPECT_LT(orth.certificate.orthogonality, 1e-10);
    EXPECT_LT(orth.certificate.polar_overlap, 1e-10);
    EXPECT_LT(orth.certificate.w_excess, 1e-10);
    EXPECT_GE(orth.certificate.mkk_gap, -1e-10);
    EXPECT_GE(orth.certificate.ap_ep_gap, -1e-10);
    EXPECT_LT(max_offdiag_overlap(orth), 1e-10);
  }
}

TEST(Orthogonalize, CodespaceDefectIsPsd) {
  const auto orth = leung_orth(0.1);
  Mat S = Mat::Zero(16, 16);
  for (const auto& r : orth.records) S += r.E_restricted.adjoint() * r.E_restricted;
  EXPECT_GE(matkernel::min_eigenvalue(Mat::Identity(16, 16) - S), -1e-12);
}

TEST(Orthogonalize, CumulativeWIsProjectorOntoSyndromeSpaces) {
  const auto orth = leung_orth(0.1);
  const Mat& W = orth.cumulative_W;
  EXPECT_LT(matkernel::max_abs(W * W - W), 1e-10);
  Mat sum = Mat::Zero(16, 16);
  for (const auto& r : orth.records) sum += r.U * r.P_support * r.U.adjoint();
  EXPECT_LT(matkernel::max_abs(sum - W), 1e-10);
  EXPECT_LT(matkernel::max_abs(orth.Q() * W), 1e-10);
}

TEST(Orthogonalize, PropertyRandomOrdersStayOrthogonal) {
  const KrausChannel noise = testing::ad_noise(0.08, 4);
  const QuantumCode code = codes::leung_code();
  std::mt19937 rng(101);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<std::string> order = noise.labels();
    std::shuffle(order.begin(), order.end(), rng);
    const auto orth = orthogonalizer::orthogonalize(noise, code, order);
    EXPECT_LT(orth.certificate.orthogonality, 1e-10);
    EXPECT_LT(orth.certificate.w_excess, 1e-10);
    EXPECT_GE(orth.certificate.mkk_gap, -1e-10);
    EXPECT_EQ(orth.records.size() + orth.dropped.size(), noise.size());
    double rank = 0.0;
    for (const auto& r : orth.records) rank += std::real(r.p_code.trace());
    EXPECT_NEAR(rank, std::real(orth.cumulative_W.trace()), 1e-8);
  }
}

TEST(Orthogonalize, PropertyRandomCodesStayOrthogonal) {
  std::mt19937 rng(103);
  const KrausChannel noise = testing::ad_noise(0.1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    QuantumCode code;
    code.n = 3;
    code.d = 2;
    code.codewords = matkernel::polar_decompose(testing::random_matrix(rng, 8, 8)).U.leftCols(2);
    const auto orth = orthogonalizer::orthogonalize(noise, code, orthogonalizer::default_order(noise));
    EXPECT_LT(orth.certificate.orthogonality, 1e-10);
    EXPECT_LT(orth.certificate.polar_overlap, 1e-10);
    EXPECT_GE(orth.certificate.ap_ep_gap, -1e-10);
  }
}

TEST(Orthogonalize, BiconvexFlowTwoSupports) {
  const double g = 0.1;
  const KrausChannel noise = testing::ad_noise(g, 4);
  const QuantumCode code = codes::biconvex_code(g);
  OrthOptions plain;
  const auto orth = orthogonalizer::orthogonalize(noise, code, orthogonalizer::biconvex_flow2_order(noise), plain);
  auto rank_of = [&](const OrthogonalizedNoise& o, const std::string& label) {
    for (const auto& r : o.records) {
      if (r.label == label) return matkernel::numeric_rank(r.p_code);
    }
    return 0;
  };
  EXPECT_EQ(rank_of(orth, "D_0101"), 2);
  // Two rank-2 weight-two supports never coexist here: the budget left after D_0110 is three.
  EXPECT_EQ(rank_of(orth, "D_1010"), 1);
  EXPECT_NE(std::find(orth.dropped.begin(), orth.dropped.end(), "D_0011"), orth.dropped.end());

  OrthOptions ov;
  ov.support_override = orthogonalizer::biconvex_flow2_override();
  const auto forced = orthogonalizer::orthogonalize(noise, code, orthogonalizer::biconvex_flow2_order(noise), ov);
  EXPECT_EQ(rank_of(forced, "D_0101"), 1);
  EXPECT_EQ(rank_of(forced, "D_1010"), 2);
  EXPECT_LT(forced.certificate.orthogonality, 1e-10);
}

TEST(Orthogonalize, SixQubitDepolarizingKeepsThirtyTwo) {
  const KrausChannel noise = channels::depolarizing(0.05, 6);
  const auto orth = orthogonalizer::orthogonalize(noise, codes::six_qubit_code(), orthogonalizer::default_order(noise));
  EXPECT_EQ(orth.records.size(), 32u);
  EXPECT_NEAR(std::real(orth.cumulative_W.trace()), 64.0, 1e-8);
}

TEST(Orthogonalize, RejectsBadInput) {
  const KrausChannel noise = testing::ad_noise(0.1, 4);
  const QuantumCode code = codes::leung_code();
  EXPECT_THROW(orthogonalizer::orthogonalize(noise, code, {"D_0000", "D_9999"}), ParseError);
  EXPECT_THROW(orthogonalizer::orthogonalize(noise, code, {"D_0000", "D_0000"}), ParseError);
  EXPECT_THROW(orthogonalizer::orthogonalize(testing::ad_noise(0.1, 3), code, {"D_000"}), DimensionMismatch);
  EXPECT_THROW(orthogonalizer::complete_order(noise, {"bogus"}), ParseError);
}

TEST(Orthogonalize, OrderHelpers) {
  const KrausChannel noise = testing::ad_noise(0.1, 4);
  const auto order = orthogonalizer::default_order(noise);
  ASSERT_EQ(order.size(), 16u);
  EXPECT_EQ(order.front(), "D_0000");
  EXPECT_EQ(order.back(), "D_1111");
  EXPECT_EQ(orthogonalizer::label_weight("D_0110"), 2);
  EXPECT_EQ(orthogonalizer::label_weight("X1Z4"), 2);
  EXPECT_EQ(orthogonalizer::label_weight("I"), 0);
  const auto lo = orthogonalizer::leung_order(noise);
  EXPECT_EQ(lo.size(), 16u);
  EXPECT_EQ(lo[10], "D_0011");
}

TEST(Orthogonalize, AsChannelAndCorrectableSet) {
  const auto orth = leung_orth(0.1);
  const KrausChannel e = orthogonalizer::as_channel(orth);
  EXPECT_EQ(e.size(), orth.records.size());
  EXPECT_EQ(e.tp_class(), TpClass::TraceNonIncreasing);
  EXPECT_EQ(orthogonalizer::correctable_set(orth, 1).size(), 5u);
}

}  // namespace
}  // namespace nqec
