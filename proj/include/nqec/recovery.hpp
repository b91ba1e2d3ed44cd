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

#include <optional>
#include <string>
#include <vector>

#include "nqec/channels.hpp"
#include "nqec/codes.hpp"
#include "nqec/orthogonalizer.hpp"

namespace nqec {

enum class RecoveryKind { Identity, Petz, SyndromePetz, PolarRE, Leung, StabilizerLookup, Restricted };

std::string to_string(RecoveryKind kind);

// Every Kraus operator except the completion maps into the codespace, so
// it is stored in the codeword frame: R_k = V * kraus_ops[k], with
// kraus_ops[k] of shape d x 2^n. The completion acts as the identity on
// the complement of supp(sum R_k^dag R_k).
struct RecoveryMap {
  RecoveryKind kind = RecoveryKind::Identity;
  Mat codewords;
  std::vector<Mat> kraus_ops;
  std::vector<std::string> labels;
  std::optional<Mat> completion;

  Mat full_op(std::size_t k) const { return codewords * kraus_ops.at(k); }
  // sum_k R_k^dag R_k, without the completion.
  Mat kraus_sum() const;
};

// Composite index [mu, k] = mu + d * k.
struct QecMatrix {
  int d = 0;
  int N = 0;
  Mat entries;
};

struct SyndromeRow {
  std::string error_label;
  int p1 = 0, p2 = 0;
  // -1: omitted or not a definite eigenvalue.
  int s1 = -1, s2 = -1;
  int recovery_index = 0;
};

struct SyndromeTable {
  std::vector<SyndromeRow> rows;
};

struct OptimalityReport {
  double commutator = 0.0;          // |[M, Tr_L(sqrt M) kron I_d]|_F
  double commutator_literal = 0.0;  // |[M, Tr_L(sqrt M kron I_d)]|_F = d |[M, sqrt M]|_F
};

namespace recovery {

constexpr double kTpTol = 1e-9;

RecoveryMap identity_recovery(const QuantumCode& code);
RecoveryMap petz(const QuantumCode& code, const KrausChannel& noise, double tol = matkernel::kRankTol);
// Same map from the QEC-matrix coefficient formula (dense, small channels).
RecoveryMap petz_coefficient_form(const QuantumCode& code, const KrausChannel& noise);
RecoveryMap syndrome_petz(const OrthogonalizedNoise& orth);
RecoveryMap polar_recovery(const OrthogonalizedNoise& orth);
// Same map written as M~^{-1/2} P_k E_k^dagger.
RecoveryMap polar_recovery_coefficient_form(const OrthogonalizedNoise& orth);
// Polar recovery from the no-error and weight-one operators only.
RecoveryMap leung_recovery(const QuantumCode& code, const KrausChannel& noise, double tol = 1e-10);
// Minimal-weight correction per syndrome; ties broken lexicographically.
RecoveryMap stabilizer_lookup_recovery(const QuantumCode& code, const StabilizerGroup& group,
                                       const std::vector<PauliString>& errors);
// Keeps the first `count` Kraus operators and recompletes.
RecoveryMap restricted(const RecoveryMap& base, std::size_t count);

// Recomputes the completion as I - supp(sum R^dag R).
void complete(RecoveryMap& map);

Mat apply_recovery(const RecoveryMap& map, const Mat& rho);

QecMatrix qec_matrix(const QuantumCode& code, const KrausChannel& noise);
QecMatrix qec_matrix(const OrthogonalizedNoise& orth);
OptimalityReport optimality_check(const QecMatrix& M);

SyndromeTable syndrome_table(const OrthogonalizedNoise& orth, const std::vector<std::string>& errors,
                             const std::vector<PauliString>& primary,
                             const std::vector<PauliString>& secondary);
std::string syndrome_table_csv(const SyndromeTable& table);

}  // namespace recovery
}  // namespace nqec
