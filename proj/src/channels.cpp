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

#include "nqec/channels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace nqec {

namespace {

const cplx kI{0.0, 1.0};

Mat single_pauli(char c) {
  Mat m = Mat::Zero(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -kI, kI, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw ParseError(std::string("unknown Pauli letter ") + c);
  }
  return m;
}

}  // namespace

PauliString PauliString::parse(const std::string& word) {
  PauliString p;
  std::size_t i = 0;
  if (i < word.size() && (word[i] == '+' || word[i] == '-')) {
    if (word[i] == '-') p.phase = -p.phase;
    ++i;
  }
  if (i < word.size() && word[i] == 'i') {
    p.phase *= kI;
    ++i;
  }
  p.letters = word.substr(i);
  if (p.letters.empty()) throw ParseError("empty Pauli word");
  for (char c : p.letters) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw ParseError("bad Pauli word: " + word);
    }
  }
  return p;
}

PauliString PauliString::from_label(const std::string& label, int n) {
  PauliString p;
  p.letters.assign(static_cast<std::size_t>(n), 'I');
  if (label == "I") return p;
  std::size_t i = 0;
  while (i < label.size()) {
    char c = label[i++];
    if (c != 'X' && c != 'Y' && c != 'Z') throw ParseError("bad label " + label);
    std::size_t j = i;
    while (j < label.size() && std::isdigit(static_cast<unsigned char>(label[j]))) ++j;
    if (j == i) throw ParseError("bad label " + label);
    int q = std::stoi(label.substr(i, j - i));
    if (q < 1 || q > n) throw ParseError("qubit out of range in " + label);
    p.letters[static_cast<std::size_t>(q - 1)] = c;
    i = j;
  }
  return p;
}

int PauliString::weight() const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                        [](char c) { return c != 'I'; }));
}

std::string PauliString::label() const {
  std::string s;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    if (letters[q] != 'I') s += letters[q] + std::to_string(q + 1);
  }
  return s.empty() ? "I" : s;
}

Mat PauliString::dense() const {
  Mat m = Mat::Identity(1, 1);
  for (char c : letters) m = matkernel::kron(m, single_pauli(c));
  return phase * coefficient * m;
}

Mat PauliString::apply(const Mat& X) const {
  const int nq = n();
  const std::int64_t dim = std::int64_t{1} << nq;
  if (X.rows() != dim) throw DimensionMismatch("PauliString::apply");
  std::int64_t flip = 0;
  for (int q = 0; q < nq; ++q) {
    char c = letters[static_cast<std::size_t>(q)];
    if (c == 'X' || c == 'Y') flip |= std::int64_t{1} << (nq - 1 - q);
  }
  Mat out(X.rows(), X.cols());
  const cplx global = phase * coefficient;
  for (std::int64_t x = 0; x < dim; ++x) {
    cplx f = global;
    for (int q = 0; q < nq; ++q) {
      const int bit = static_cast<int>((x >> (nq - 1 - q)) & 1);
      switch (letters[static_cast<std::size_t>(q)]) {
        case 'Y': f *= bit ? -kI : kI; break;
        case 'Z': if (bit) f = -f; break;
        default: break;
      }
    }
    out.row(x ^ flip) = f * X.row(x);
  }
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.n() != n()) throw DimensionMismatch("commutes_with");
  int anti = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    char a = letters[q], b = other.letters[q];
    if (a != 'I' && b != 'I' && a != b) ++anti;
  }
  return anti % 2 == 0;
}

KrausChannel::KrausChannel(std::vector<Mat> ops, std::vector<std::string> labels,
                           TpClass tp)
    : ops_(std::move(ops)), labels_(std::move(labels)), tp_(tp) {
  if (ops_.empty()) throw DimensionMismatch("KrausChannel: no operators");
  if (labels_.size() != ops_.size()) {
    throw DimensionMismatch("KrausChannel: label count mismatch");
  }
  dim_ = static_cast<int>(ops_.front().rows());
  for (const auto& A : ops_) {
    if (A.rows() != dim_ || A.cols() != dim_) {
      throw DimensionMismatch("KrausChannel: operators differ in dimension");
    }
  }
}

KrausChannel::KrausChannel(std::vector<PauliString> paulis, TpClass tp)
    : paulis_(std::move(paulis)), tp_(tp) {
  if (paulis_.empty()) throw DimensionMismatch("KrausChannel: no operators");
  const int n = paulis_.front().n();
  dim_ = 1 << n;
  labels_.reserve(paulis_.size());
  for (const auto& p : paulis_) {
    if (p.n() != n) throw DimensionMismatch("KrausChannel: mixed qubit counts");
    labels_.push_back(p.label());
  }
}

Mat KrausChannel::op(std::size_t k) const {
  return is_pauli() ? paulis_.at(k).dense() : ops_.at(k);
}

Mat KrausChannel::apply_op(std::size_t k, const Mat& X) const {
  if (X.rows() != dim_) throw DimensionMismatch("apply_op");
  return is_pauli() ? paulis_.at(k).apply(X) : Mat(ops_.at(k) * X);
}

std::optional<std::size_t> KrausChannel::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

double KrausChannel::completeness_residual() const {
  if (is_pauli()) {
    // Pauli strings are unitary up to their coefficient.
    double s = 0.0;
    for (const auto& p : paulis_) s += p.coefficient * p.coefficient * std::norm(p.phase);
    return std::abs(s - 1.0);
  }
  Mat S = Mat::Zero(dim_, dim_);
  for (const auto& A : ops_) S += A.adjoint() * A;
  return matkernel::max_abs(S - Mat::Identity(dim_, dim_));
}

namespace channels {

KrausChannel identity_channel(int dim) {
  return KrausChannel({Mat::Identity(dim, dim)}, {"I"});
}

KrausChannel amplitude_damping(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw OutOfRange("amplitude_damping: gamma " + std::to_string(gamma));
  }
  Mat D0 = Mat::Zero(2, 2), D1 = Mat::Zero(2, 2);
  D0(0, 0) = 1.0;
  D0(1, 1) = std::sqrt(1.0 - gamma);
  D1(0, 1) = std::sqrt(gamma);
  return KrausChannel({D0, D1}, {"D_0", "D_1"});
}

KrausChannel n_fold_product(const KrausChannel& single, int n) {
  if (single.dim() != 2) throw DimensionMismatch("n_fold_product: need qubit channel");
  if (n < 1) throw OutOfRange("n_fold_product: n < 1");
  if (n == 1) return single;
  const std::size_t m = single.size();
  if (m > 10) throw OutOfRange("n_fold_product: too many single-qubit operators");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  std::vector<Mat> ops;
  std::vector<std::string> labels;
  ops.reserve(total);
  labels.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::string digits(static_cast<std::size_t>(n), '0');
    std::size_t r = idx;
    for (int q = n - 1; q >= 0; --q) {
      digits[static_cast<std::size_t>(q)] = static_cast<char>('0' + r % m);
      r /= m;
    }
    Mat A = Mat::Identity(1, 1);
    for (char c : digits) A = matkernel::kron(A, single.op(static_cast<std::size_t>(c - '0')));
    ops.push_back(std::move(A));
    labels.push_back("D_" + digits);
  }
  return KrausChannel(std::move(ops), std::move(labels), single.tp_class());
}

KrausChannel depolarizing(double p, int n) {
  if (!(p >= 0.0 && p <= 1.0)) throw OutOfRange("depolarizing: p " + std::to_string(p));
  if (n < 1 || n > 12) throw OutOfRange("depolarizing: n out of range");
  static const char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  std::size_t total = std::size_t{1} << (2 * n);
  std::vector<PauliString> all;
  all.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    PauliString s;
    s.letters.assign(static_cast<std::size_t>(n), 'I');
    std::size_t r = idx;
    for (int q = n - 1; q >= 0; --q) {
      s.letters[static_cast<std::size_t>(q)] = kLetters[r % 4];
      r /= 4;
    }
    const int w = s.weight();
    s.coefficient = std::sqrt(std::pow(p / 3.0, w) * std::pow(1.0 - p, n - w));
    all.push_back(std::move(s));
  }
  // idx order is already lexicographic with I < X < Y < Z.
  std::stable_sort(all.begin(), all.end(), [](const PauliString& a, const PauliString& b) {
    return a.weight() < b.weight();
  });
  return KrausChannel(std::move(all));
}

Mat apply(const KrausChannel& channel, const Mat& rho) {
  if (rho.rows() != channel.dim() || rho.cols() != channel.dim()) {
    throw DimensionMismatch("apply: state dimension");
  }
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (std::size_t k = 0; k < channel.size(); ++k) {
    Mat Ar = channel.apply_op(k, rho);                          // A rho
    out += channel.apply_op(k, Mat(Ar.adjoint())).adjoint();    // A rho A^dagger
  }
  return out;
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  if (second.dim() != first.dim()) throw DimensionMismatch("compose");
  std::vector<Mat> ops;
  std::vector<std::string> labels;
  ops.reserve(second.size() * first.size());
  for (std::size_t j = 0; j < second.size(); ++j) {
    for (std::size_t k = 0; k < first.size(); ++k) {
      ops.push_back(second.apply_op(j, first.op(k)));
      labels.push_back(second.labels()[j] + "*" + first.labels()[k]);
    }
  }
  TpClass tp = (second.tp_class() == TpClass::TracePreserving &&
                first.tp_class() == TpClass::TracePreserving)
                   ? TpClass::TracePreserving
                   : TpClass::TraceNonIncreasing;
  return KrausChannel(std::move(ops), std::move(labels), tp);
}

KrausChannel prune(const KrausChannel& channel, double threshold) {
  std::vector<Mat> ops;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < channel.size(); ++k) {
    Mat A = channel.op(k);
    if (A.norm() >= threshold) {
      ops.push_back(std::move(A));
      labels.push_back(channel.labels()[k]);
    }
  }
  if (ops.empty()) {
    ops.push_back(Mat::Zero(channel.dim(), channel.dim()));
    labels.push_back("0");
  }
  return KrausChannel(std::move(ops), std::move(labels), channel.tp_class());
}

double gamma_from_delay(double t, double T1) {
  if (!(t >= 0.0) || !(T1 > 0.0)) throw OutOfRange("gamma_from_delay");
  return -std::expm1(-t / T1);
}

}  // namespace channels
}  // namespace nqec
