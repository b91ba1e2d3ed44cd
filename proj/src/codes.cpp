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

#include "nqec/codes.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nqec::codes {

namespace {

using json = nlohmann::json;

constexpr double kOrthoTol = 1e-10;

// Deterministic basis of range(P): Gram-Schmidt over P|x> in index order.
Mat range_basis(const Mat& P, int rank) {
  Mat basis(P.rows(), rank);
  int found = 0;
  for (Eigen::Index x = 0; x < P.cols() && found < rank; ++x) {
    Vec v = P.col(x);
    for (int j = 0; j < found; ++j) v -= basis.col(j) * basis.col(j).dot(v);
    double nv = v.norm();
    if (nv < 1e-8) continue;
    v /= nv;
    // Fix the phase of the first significant amplitude to real positive.
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) > 1e-8) {
        v *= std::conj(v(i)) / std::abs(v(i));
        break;
      }
    }
    basis.col(found++) = v;
  }
  if (found != rank) throw InconsistentGroup("range_basis: rank deficit");
  return basis;
}

}  // namespace

void validate(const QuantumCode& code) {
  if (code.d < 1 || code.codewords.cols() != code.d ||
      code.codewords.rows() != (Eigen::Index{1} << code.n)) {
    throw DimensionMismatch("code: shape does not match n and d");
  }
  Mat G = code.codewords.adjoint() * code.codewords;
  double res = matkernel::max_abs(G - Mat::Identity(code.d, code.d));
  if (res >= kOrthoTol) {
    throw NonOrthonormal("codewords not orthonormal, residual " + std::to_string(res));
  }
}

Vec basis_ket(const std::string& bits) {
  Vec v = Vec::Zero(Eigen::Index{1} << bits.size());
  Eigen::Index idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("bad bitstring " + bits);
    idx = 2 * idx + (c - '0');
  }
  v(idx) = 1.0;
  return v;
}

QuantumCode leung_code() {
  const double s = 1.0 / std::sqrt(2.0);
  QuantumCode c{"leung", 4, 2, Mat(16, 2), 1.0};
  c.codewords.col(0) = s * (basis_ket("0000") + basis_ket("1111"));
  c.codewords.col(1) = s * (basis_ket("0011") + basis_ket("1100"));
  return c;
}

QuantumCode biconvex_code(double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw OutOfRange("biconvex_code: gamma");
  const double under = 1.0 - 1.0 / (2.0 * (1.0 - gamma * gamma));
  if (under < 0.0) throw OutOfRange("biconvex_code: |0000> coefficient not real");
  Vec zero = std::sqrt(under) * basis_ket("0000") +
             (1.0 / (std::sqrt(2.0) * (1.0 - gamma))) * basis_ket("1111");
  QuantumCode c{"biconvex", 4, 2, Mat(16, 2), zero.norm()};
  c.codewords.col(0) = zero / c.prenormalization_norm;
  c.codewords.col(1) = 0.5 * (basis_ket("0011") + basis_ket("1100") +
                              basis_ket("0101") - basis_ket("1010"));
  validate(c);
  return c;
}

}  // namespace nqec::codes

namespace nqec {

StabilizerGroup StabilizerGroup::from_words(const std::vector<std::string>& words) {
  StabilizerGroup g;
  for (const auto& w : words) g.generators.push_back(PauliString::parse(w));
  return g;
}

}  // namespace nqec

namespace nqec::codes {

QuantumCode stabilizer_codespace(const StabilizerGroup& group) {
  if (group.generators.empty()) throw InconsistentGroup("no generators");
  const int n = group.n();
  for (std::size_t i = 0; i < group.generators.size(); ++i) {
    const auto& g = group.generators[i];
    if (g.n() != n) throw InconsistentGroup("generators differ in length");
    if (g.weight() == 0 && std::abs(g.phase + 1.0) < 1e-12) {
      throw InconsistentGroup("generator equals -I");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!g.commutes_with(group.generators[j])) {
        throw InconsistentGroup("generators " + std::to_string(j) + " and " +
                                std::to_string(i) + " anticommute");
      }
    }
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat P = Mat::Identity(dim, dim);
  for (const auto& g : group.generators) {
    P = 0.5 * (P + g.apply(P));  // (I + S) P / 2; factors commute
  }
  const int expected = 1 << (n - static_cast<int>(group.generators.size()));
  const double tr = P.trace().real();
  if (std::abs(tr - expected) > 1e-8) {
    throw InconsistentGroup("projector rank " + std::to_string(tr) + " != " +
                            std::to_string(expected));
  }
  QuantumCode c{"stabilizer", n, expected, range_basis(P, expected), 1.0};
  validate(c);
  return c;
}

StabilizerGroup six_qubit_group() {
  return StabilizerGroup::from_words({"YIZXXY", "ZXIIXZ", "IZXXXX", "IIIZIZ", "ZZZIZI"});
}

QuantumCode six_qubit_code() {
  QuantumCode c = stabilizer_codespace(six_qubit_group());
  c.name = "six_qubit";
  return c;
}

QuantumCode parse_code_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("code file: ") + e.what());
  }
  QuantumCode c;
  try {
    c.name = j.value("name", std::string("file"));
    c.n = j.at("n").get<int>();
    c.d = j.at("d").get<int>();
    const auto& vs = j.at("vectors");
    if (c.n < 1 || c.n > 12 || c.d < 1) throw ParseError("code file: bad n or d");
    if (static_cast<int>(vs.size()) != c.d) throw ParseError("code file: vector count != d");
    const Eigen::Index dim = Eigen::Index{1} << c.n;
    c.codewords.resize(dim, c.d);
    for (int k = 0; k < c.d; ++k) {
      const auto& v = vs.at(static_cast<std::size_t>(k));
      if (static_cast<Eigen::Index>(v.size()) != dim) {
        throw ParseError("code file: vector length != 2^n");
      }
      for (Eigen::Index i = 0; i < dim; ++i) {
        const auto& z = v.at(static_cast<std::size_t>(i));
        c.codewords(i, k) = cplx(z.at(0).get<double>(), z.at(1).get<double>());
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("code file: ") + e.what());
  }
  validate(c);
  return c;
}

QuantumCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open code file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_code_json(ss.str());
}

std::string code_to_json(const QuantumCode& code) {
  json j;
  j["name"] = code.name;
  j["n"] = code.n;
  j["d"] = code.d;
  j["vectors"] = json::array();
  for (int k = 0; k < code.d; ++k) {
    json v = json::array();
    for (Eigen::Index i = 0; i < code.codewords.rows(); ++i) {
      v.push_back({code.codewords(i, k).real(), code.codewords(i, k).imag()});
    }
    j["vectors"].push_back(v);
  }
  return j.dump(1);
}

Mat encoding_unitary(const std::vector<TruthRow>& table) {
  if (table.empty()) throw DimensionMismatch("empty truth table");
  const int n = static_cast<int>(table.front().input.size());
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (static_cast<Eigen::Index>(table.size()) != dim) {
    throw DimensionMismatch("truth table must list every input");
  }
  Mat U = Mat::Zero(dim, dim);
  std::vector<bool> seen(static_cast<std::size_t>(dim), false);
  for (const auto& row : table) {
    Vec in = basis_ket(row.input);
    Eigen::Index idx;
    in.cwiseAbs().maxCoeff(&idx);
    if (seen[static_cast<std::size_t>(idx)]) throw NonUnitary("duplicate input " + row.input);
    seen[static_cast<std::size_t>(idx)] = true;
    if (row.output.size() != dim) throw DimensionMismatch("truth row output length");
    U.col(idx) = row.output;
  }
  double res = matkernel::max_abs(U.adjoint() * U - Mat::Identity(dim, dim));
  if (res > 1e-10) throw NonUnitary("outputs not orthonormal, residual " + std::to_string(res));
  return U;
}

std::vector<TruthRow> leung_truth_table() {
  const QuantumCode c = leung_code();
  const double s = 1.0 / std::sqrt(2.0);
  const Vec z = c.codeword(0), o = c.codeword(1);
  const Vec zt = s * (basis_ket("0000") - basis_ket("1111"));
  const Vec ot = s * (basis_ket("1100") - basis_ket("0011"));
  const PauliString x1 = PauliString::parse("XIII"), x4 = PauliString::parse("IIIX");
  auto X1 = [&](const Vec& v) { return Vec(x1.apply(v)); };
  auto X4 = [&](const Vec& v) { return Vec(x4.apply(v)); };
  return {
      {"0000", z},          {"0001", X1(z)},      {"0010", X4(z)},      {"0011", zt},
      {"1000", X4(zt)},     {"1001", X1(X4(z))},  {"1010", X1(zt)},     {"1011", X1(X4(zt))},
      {"0100", o},          {"0101", X1(o)},      {"0110", X4(o)},      {"0111", ot},
      {"1100", X4(ot)},     {"1101", X1(X4(o))},  {"1110", X1(ot)},     {"1111", X1(X4(ot))},
  };
}

}  // namespace nqec::codes
