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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nqec/matkernel.hpp"

namespace nqec {

// phase * coefficient * (P_1 kron ... kron P_n); letter 0 acts on the most
// significant bit of the computational index.
struct PauliString {
  cplx phase{1.0, 0.0};
  std::string letters;
  double coefficient = 1.0;

  // Accepts "XIZ", "+XIZ", "-XIZ", "iXIZ", "-iXIZ".
  static PauliString parse(const std::string& word);
  // Inverse of label(): "X1Z3" on n qubits; "I" is the identity.
  static PauliString from_label(const std::string& label, int n);

  int n() const { return static_cast<int>(letters.size()); }
  int weight() const;
  std::string label() const;

  Mat dense() const;
  // Signed permutation action on the rows of X.
  Mat apply(const Mat& X) const;
  // True when both strings commute as operators.
  bool commutes_with(const PauliString& other) const;
};

enum class TpClass { TracePreserving, TraceNonIncreasing };

// Kraus operators are held densely or as Pauli strings, never both.
class KrausChannel {
 public:
  KrausChannel(std::vector<Mat> ops, std::vector<std::string> labels,
               TpClass tp = TpClass::TracePreserving);
  KrausChannel(std::vector<PauliString> paulis,
               TpClass tp = TpClass::TracePreserving);

  std::size_t size() const { return labels_.size(); }
  int dim() const { return dim_; }
  TpClass tp_class() const { return tp_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_pauli() const { return !paulis_.empty(); }
  const std::vector<PauliString>& paulis() const { return paulis_; }

  Mat op(std::size_t k) const;
  // A_k X without densifying A_k.
  Mat apply_op(std::size_t k, const Mat& X) const;
  std::optional<std::size_t> index_of(const std::string& label) const;

  // max |sum A^dagger A - I|.
  double completeness_residual() const;

 private:
  std::vector<Mat> ops_;
  std::vector<PauliString> paulis_;
  std::vector<std::string> labels_;
  int dim_ = 0;
  TpClass tp_;
};

namespace channels {

KrausChannel identity_channel(int dim);
// Labels "D_0" (no decay) and "D_1" (decay).
KrausChannel amplitude_damping(double gamma);
// Labels "D_<i1...in>" from the single-channel indices.
KrausChannel n_fold_product(const KrausChannel& single, int n);
// Ordered by weight, then lexicographically with I < X < Y < Z.
KrausChannel depolarizing(double p, int n);

Mat apply(const KrausChannel& channel, const Mat& rho);
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);
// Drops operators with Frobenius norm below threshold.
KrausChannel prune(const KrausChannel& channel, double threshold = 1e-12);

double gamma_from_delay(double t, double T1);

}  // namespace channels
}  // namespace nqec
