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

#include <map>
#include <string>
#include <vector>

#include "nqec/channels.hpp"
#include "nqec/codes.hpp"

namespace nqec {

// One surviving operator. Full-space matrices are 2^n x 2^n; the *_code
// fields are the same objects in the codeword frame (V = codewords).
struct OrthRecord {
  std::string label;
  std::size_t source_index = 0;
  Mat E_restricted;  // E_k P_k
  Mat U;             // polar unitary of E_k P
  Mat P_support;     // P_k, inside the codespace
  Mat M_tilde_kk;    // P_k E_k^dagger E_k P_k
  Mat EV;            // E_k P_k V, 2^n x d
  Mat p_code;        // V^dagger P_k V
  Mat m_code;        // V^dagger M~_kk V
  bool overridden = false;
};

struct OrthCertificate {
  double orthogonality = 0.0;  // max_{k!=l} |P_k E_k^dag E_l P_l|_max
  double polar_overlap = 0.0;  // max_{k!=l} |P_k U_k^dag U_l P_l|_max
  double w_excess = 0.0;       // max(0, lambda_max(W) - 1)
  double mkk_gap = 0.0;        // min_k lambda_min(M_kk - M~_kk)
  // lambda_min of sum_k Q_k (A(P) - E(P)) Q_k with Q_k = U_k P_k U_k^dag.
  double ap_ep_gap = 0.0;
  // Diagnostics only; both can be negative for valid orders.
  double ap_ep_gap_direct = 0.0;  // lambda_min(A(P) - E(P))
  double inv_sqrt_gap = 0.0;      // lambda_min of E(P)^{-1/2} - A(P)^{-1/2} on supp E(P)
};

struct OrthogonalizedNoise {
  QuantumCode code;
  std::vector<OrthRecord> records;
  Mat cumulative_W;
  std::vector<std::string> dropped;
  OrthCertificate certificate;

  std::vector<std::string> source_labels() const;
  // I - W, rebuilt on demand.
  Mat Q() const;
};

struct OrthOptions {
  double null_tol = 1e-9;      // relative to |A_k P|_F
  double cert_tol = 1e-10;
  bool certify = true;
  // label -> projector in the codeword frame (d x d) replacing P_k.
  std::map<std::string, Mat> support_override;
};

namespace orthogonalizer {

// Number of damped qubits for "D_..." labels, Pauli weight otherwise.
int label_weight(const std::string& label);
// No-error first, then ascending weight, then channel order.
std::vector<std::string> default_order(const KrausChannel& noise);
// Prepends `head` and appends the remaining labels in default order.
std::vector<std::string> complete_order(const KrausChannel& noise,
                                        const std::vector<std::string>& head);
std::vector<std::string> leung_order(const KrausChannel& noise);
std::vector<std::string> biconvex_flow1_order(const KrausChannel& noise);
std::vector<std::string> biconvex_flow2_order(const KrausChannel& noise);
// Support override that reaches the optimal biconvex fidelity on flow 2.
std::map<std::string, Mat> biconvex_flow2_override();

OrthogonalizedNoise orthogonalize(const KrausChannel& noise, const QuantumCode& code,
                                  const std::vector<std::string>& order,
                                  const OrthOptions& options = {});

OrthCertificate certify(const OrthogonalizedNoise& orth, const KrausChannel& noise);

// Trace non-increasing channel with operators E_k P_k.
KrausChannel as_channel(const OrthogonalizedNoise& orth);

// Surviving labels with weight <= weight_cap.
std::vector<std::string> correctable_set(const OrthogonalizedNoise& orth, int weight_cap);

}  // namespace orthogonalizer
}  // namespace nqec
