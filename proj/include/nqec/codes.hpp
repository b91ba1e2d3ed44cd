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

#include <string>
#include <utility>
#include <vector>

#include "nqec/channels.hpp"
#include "nqec/matkernel.hpp"

namespace nqec {

struct QuantumCode {
  std::string name;
  int n = 0;
  int d = 0;
  Mat codewords;  // 2^n x d, orthonormal columns
  // Norm of |0_L> before renormalisation; 1 for codes built normalised.
  double prenormalization_norm = 1.0;

  Eigen::Index dim() const { return codewords.rows(); }
  Mat projector() const { return codewords * codewords.adjoint(); }
  Vec codeword(int i) const { return codewords.col(i); }
};

struct StabilizerGroup {
  std::vector<PauliString> generators;

  static StabilizerGroup from_words(const std::vector<std::string>& words);
  int n() const { return generators.empty() ? 0 : generators.front().n(); }
};

// One row of an encoder truth table: computational input -> output state.
struct TruthRow {
  std::string input;
  Vec output;
};

namespace codes {

// Throws NonOrthonormal when codewords are not orthonormal within 1e-10.
void validate(const QuantumCode& code);

Vec basis_ket(const std::string& bits);

QuantumCode leung_code();
// Built from the closed form in gamma and renormalised.
QuantumCode biconvex_code(double gamma);
QuantumCode stabilizer_codespace(const StabilizerGroup& group);
StabilizerGroup six_qubit_group();
QuantumCode six_qubit_code();

// JSON: {"n": 4, "d": 2, "vectors": [[[re, im], ...], ...]}.
QuantumCode parse_code_json(const std::string& text);
QuantumCode load_code(const std::string& path);
std::string code_to_json(const QuantumCode& code);

// Columns are the outputs for inputs in ascending computational order.
Mat encoding_unitary(const std::vector<TruthRow>& table);
// Encoder for the Leung code with the logical input on qubit 2.
std::vector<TruthRow> leung_truth_table();

}  // namespace codes
}  // namespace nqec
