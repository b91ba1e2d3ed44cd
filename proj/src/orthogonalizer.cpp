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

#include "nqec/orthogonalizer.hpp"

#include <algorithm>
#include <set>

namespace nqec {

std::vector<std::string> OrthogonalizedNoise::source_labels() const {
  std::vector<std::string> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.label);
  return out;
}

Mat OrthogonalizedNoise::Q() const {
  return Mat::Identity(cumulative_W.rows(), cumulative_W.cols()) - cumulative_W;
}

namespace orthogonalizer {

int label_weight(const std::string& label) {
  if (label.rfind("D_", 0) == 0) {
    return static_cast<int>(std::count(label.begin() + 2, label.end(), '1'));
  }
  if (label == "I") return 0;
  return static_cast<int>(std::count_if(label.begin(), label.end(), [](char c) {
    return c == 'X' || c == 'Y' || c == 'Z';
  }));
}

std::vector<std::string> default_order(const KrausChannel& noise) {
  std::vector<std::string> out = noise.labels();
  std::stable_sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return label_weight(a) < label_weight(b);
  });
  return out;
}

std::vector<std::string> complete_order(const KrausChannel& noise,
                                        const std::vector<std::string>& head) {
  std::vector<std::string> out;
  std::set<std::string> used;
  for (const auto& l : head) {
    if (!noise.index_of(l)) throw ParseError("unknown label in order: " + l);
    if (used.insert(l).second) out.push_back(l);
  }
  for (const auto& l : default_order(noise)) {
    if (!used.count(l)) out.push_back(l);
  }
  return out;
}

std::vector<std::string> leung_order(const KrausChannel& noise) {
  return complete_order(noise, {"D_0000", "D_0001", "D_0010", "D_0100", "D_1000", "D_1001",
                                "D_0110", "D_0101", "D_1010", "D_1100", "D_0011"});
}

std::vector<std::string> biconvex_flow1_order(const KrausChannel& noise) {
  return complete_order(noise, {"D_0000", "D_0001", "D_0010", "D_0100", "D_1000", "D_1001",
                                "D_0110", "D_0011", "D_1100", "D_1010", "D_0101"});
}

std::vector<std::string> biconvex_flow2_order(const KrausChannel& noise) {
  return complete_order(noise, {"D_0000", "D_0001", "D_0010", "D_0100", "D_1000", "D_1001",
                                "D_0110", "D_0101", "D_1010", "D_1100", "D_0011"});
}

std::map<std::string, Mat> biconvex_flow2_override() {
  // The first rank-2 weight-two record keeps only the |0_L> direction.
  Mat p0 = Mat::Zero(2, 2);
  p0(0, 0) = 1.0;
  return {{"D_0101", p0}};
}

namespace {

// Projector onto range(B) for a tall B.
Mat range_projector(const Mat& B) {
  Mat G = B.adjoint() * B;
  return B * matkernel::psd_power(G, -1.0) * B.adjoint();
}

}  // namespace

OrthogonalizedNoise orthogonalize(const KrausChannel& noise, const QuantumCode& code,
                                  const std::vector<std::string>& order,
                                  const OrthOptions& options) {
  codes::validate(code);
  if (noise.dim() != code.dim()) throw DimensionMismatch("orthogonalize: noise vs code");
  const Mat& V = code.codewords;
  const Eigen::Index D = code.dim();
  OrthogonalizedNoise out;
  out.code = code;
  out.cumulative_W = Mat::Zero(D, D);
  std::set<std::string> seen;
  bool full = false;

  for (const auto& label : order) {
    auto idx = noise.index_of(label);
    if (!idx) throw ParseError("orthogonalize: unknown label " + label);
    if (!seen.insert(label).second) throw ParseError("orthogonalize: repeated label " + label);
    if (full) {
      out.dropped.push_back(label);
      continue;
    }
    const Mat AV = noise.apply_op(*idx, V);
    const double nA = AV.norm();
    Mat EV = AV - out.cumulative_W * AV;
    if (nA == 0.0 || EV.norm() <= options.null_tol * nA) {
      out.dropped.push_back(label);
      continue;
    }
    OrthRecord r;
    r.label = label;
    r.source_index = *idx;
    const Mat m = EV.adjoint() * EV;
    auto ov = options.support_override.find(label);
    if (ov != options.support_override.end()) {
      if (ov->second.rows() != code.d || ov->second.cols() != code.d) {
        throw DimensionMismatch("support override must be d x d");
      }
      r.p_code = ov->second;
      r.overridden = true;
    } else {
      r.p_code = matkernel::support_projector(m);
    }
    const Mat EVp = EV * r.p_code;
    r.EV = EVp;
    r.m_code = r.p_code * m * r.p_code;
    r.E_restricted = EVp * V.adjoint();
    r.P_support = V * r.p_code * V.adjoint();
    r.M_tilde_kk = V * r.m_code * V.adjoint();
    r.U = matkernel::polar_decompose(Mat(EV * V.adjoint())).U;
    out.cumulative_W += range_projector(EVp);
    out.records.push_back(std::move(r));
    full = out.cumulative_W.trace().real() > static_cast<double>(D) - 0.5;
  }

  if (options.certify) {
    out.certificate = certify(out, noise);
    const auto& c = out.certificate;
    const double t = options.cert_tol;
    if (c.orthogonality >= t) throw ToleranceViolation("orthogonality certificate", c.orthogonality);
    if (c.polar_overlap >= t) throw ToleranceViolation("polar overlap certificate", c.polar_overlap);
    if (c.w_excess >= t) throw ToleranceViolation("W exceeds identity", c.w_excess);
    if (c.mkk_gap < -t) throw ToleranceViolation("M_kk - M~_kk not PSD", c.mkk_gap);
    if (c.ap_ep_gap < -t) throw ToleranceViolation("A(P) - E(P) not PSD on the syndrome blocks", c.ap_ep_gap);
  }
  return out;
}

OrthCertificate certify(const OrthogonalizedNoise& orth, const KrausChannel& noise) {
  OrthCertificate c;
  const Mat& V = orth.code.codewords;
  const auto& rs = orth.records;
  std::vector<Mat> UP(rs.size());
  for (std::size_t k = 0; k < rs.size(); ++k) UP[k] = rs[k].U * V * rs[k].p_code;
  for (std::size_t k = 0; k < rs.size(); ++k) {
    for (std::size_t l = 0; l < rs.size(); ++l) {
      if (k == l) continue;
      Mat x = rs[k].EV.adjoint() * rs[l].EV;
      c.orthogonality = std::max(c.orthogonality, matkernel::max_abs(V * x * V.adjoint()));
      Mat u = UP[k].adjoint() * UP[l];
      c.polar_overlap = std::max(c.polar_overlap, matkernel::max_abs(V * u * V.adjoint()));
    }
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (orth.cumulative_W + orth.cumulative_W.adjoint()),
                                         Eigen::EigenvaluesOnly);
  c.w_excess = std::max(0.0, es.eigenvalues().maxCoeff() - 1.0);

  c.mkk_gap = 0.0;
  for (const auto& r : rs) {
    Mat AV = noise.apply_op(r.source_index, V);
    Mat diff = AV.adjoint() * AV - r.m_code;
    c.mkk_gap = std::min(c.mkk_gap, matkernel::min_eigenvalue(diff));
  }
  const Eigen::Index D = orth.code.dim();
  Mat AP = Mat::Zero(D, D), EP = Mat::Zero(D, D);
  for (std::size_t k = 0; k < noise.size(); ++k) {
    Mat AV = noise.apply_op(k, V);
    AP.noalias() += AV * AV.adjoint();
  }
  for (const auto& r : rs) EP.noalias() += r.EV * r.EV.adjoint();
  const Mat diff = AP - EP;
  Mat pinched = Mat::Zero(D, D);
  for (const Mat& q : UP) {
    const Mat Q = q * q.adjoint();
    pinched.noalias() += Q * diff * Q;
  }
  c.ap_ep_gap = std::min(0.0, matkernel::min_eigenvalue(pinched));
  c.ap_ep_gap_direct = std::min(0.0, matkernel::min_eigenvalue(diff));
  const Mat PE = matkernel::support_projector(EP);
  const Mat gap = matkernel::psd_power(EP, -0.5) - matkernel::psd_power(AP, -0.5);
  c.inv_sqrt_gap = std::min(0.0, matkernel::min_eigenvalue(PE * gap * PE));
  return c;
}

KrausChannel as_channel(const OrthogonalizedNoise& orth) {
  std::vector<Mat> ops;
  std::vector<std::string> labels;
  for (const auto& r : orth.records) {
    ops.push_back(r.E_restricted);
    labels.push_back(r.label);
  }
  if (ops.empty()) {
    ops.push_back(Mat::Zero(orth.code.dim(), orth.code.dim()));
    labels.push_back("0");
  }
  return KrausChannel(std::move(ops), std::move(labels), TpClass::TraceNonIncreasing);
}

std::vector<std::string> correctable_set(const OrthogonalizedNoise& orth, int weight_cap) {
  std::vector<std::string> out;
  for (const auto& r : orth.records) {
    if (label_weight(r.label) <= weight_cap) out.push_back(r.label);
  }
  return out;
}

}  // namespace orthogonalizer
}  // namespace nqec
