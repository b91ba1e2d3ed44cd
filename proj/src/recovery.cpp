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

#include "nqec/recovery.hpp"

#include <map>
#include <sstream>

namespace nqec {

std::string to_string(RecoveryKind kind) {
  switch (kind) {
    case RecoveryKind::Identity: return "identity";
    case RecoveryKind::Petz: return "petz";
    case RecoveryKind::SyndromePetz: return "syndrome_petz";
    case RecoveryKind::PolarRE: return "polar";
    case RecoveryKind::Leung: return "leung";
    case RecoveryKind::StabilizerLookup: return "lookup";
    case RecoveryKind::Restricted: return "restricted";
  }
  return "unknown";
}

Mat RecoveryMap::kraus_sum() const {
  const Eigen::Index D = codewords.rows();
  Mat S = Mat::Zero(D, D);
  for (const auto& L : kraus_ops) S.noalias() += L.adjoint() * L;
  return S;
}

namespace recovery {

namespace {

Mat range_projector(const Mat& B) {
  return B * matkernel::psd_power(B.adjoint() * B, -1.0) * B.adjoint();
}

}  // namespace

void complete(RecoveryMap& map) {
  const Mat S = map.kraus_sum();
  const Eigen::Index D = S.rows();
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (S + S.adjoint()), Eigen::EigenvaluesOnly);
  const double excess = es.eigenvalues().maxCoeff() - 1.0;
  if (excess > 1e-10) throw ToleranceViolation("sum R^dag R exceeds identity", excess);
  Mat Q = Mat::Identity(D, D) - matkernel::support_projector(S);
  if (Q.norm() > 1e-12) {
    map.completion = Q;
  } else {
    map.completion.reset();
  }
}

RecoveryMap identity_recovery(const QuantumCode& code) {
  RecoveryMap r;
  r.kind = RecoveryKind::Identity;
  r.codewords = code.codewords;
  r.kraus_ops.push_back(code.codewords.adjoint());
  r.labels.push_back("P");
  complete(r);
  return r;
}

RecoveryMap petz(const QuantumCode& code, const KrausChannel& noise, double tol) {
  if (noise.dim() != code.dim()) throw DimensionMismatch("petz: noise vs code");
  const Mat& V = code.codewords;
  const Eigen::Index D = code.dim();
  const Eigen::Index d = code.d;
  std::vector<std::size_t> live;
  std::vector<Mat> AV;
  for (std::size_t k = 0; k < noise.size(); ++k) {
    Mat a = noise.apply_op(k, V);
    if (a.norm() == 0.0) continue;
    live.push_back(k);
    AV.push_back(std::move(a));
  }
  if (AV.empty()) throw ToleranceViolation("petz: A(P) vanishes", 0.0);
  Mat F(D, d * static_cast<Eigen::Index>(AV.size()));
  for (std::size_t j = 0; j < AV.size(); ++j) F.middleCols(d * static_cast<Eigen::Index>(j), d) = AV[j];
  // (A_k V)^dag A(P)^{-1/2} is the k-th block of the isometric factor of F, adjointed.
  const Mat X = matkernel::isometric_factor(F, tol);
  RecoveryMap r;
  r.kind = RecoveryKind::Petz;
  r.codewords = V;
  for (std::size_t j = 0; j < AV.size(); ++j) {
    r.kraus_ops.push_back(X.middleCols(d * static_cast<Eigen::Index>(j), d).adjoint());
    r.labels.push_back(noise.labels()[live[j]]);
  }
  complete(r);
  Mat total = r.kraus_sum();
  if (r.completion) total += *r.completion;
  const double res = matkernel::max_abs(total - Mat::Identity(D, D));
  if (res > kTpTol) throw ToleranceViolation("petz: not trace preserving", res);
  return r;
}

RecoveryMap petz_coefficient_form(const QuantumCode& code, const KrausChannel& noise) {
  const QecMatrix M = qec_matrix(code, noise);
  const Mat Mih = matkernel::psd_power(M.entries, -0.5);
  const Mat& V = code.codewords;
  const int d = code.d;
  Mat F(code.dim(), static_cast<Eigen::Index>(d) * M.N);
  for (int k = 0; k < M.N; ++k) {
    F.middleCols(static_cast<Eigen::Index>(d) * k, d) = noise.apply_op(static_cast<std::size_t>(k), V);
  }
  // Row [a,k] of M^{-1/2} F^dagger is sum_{nu,l} (M^{-1/2})_{[a,k],[nu,l]} (A_l v_nu)^dagger.
  const Mat stacked = Mih * F.adjoint();
  RecoveryMap r;
  r.kind = RecoveryKind::Petz;
  r.codewords = V;
  for (int k = 0; k < M.N; ++k) {
    Mat L = stacked.middleRows(static_cast<Eigen::Index>(d) * k, d);
    if (F.middleCols(static_cast<Eigen::Index>(d) * k, d).norm() == 0.0) continue;
    r.kraus_ops.push_back(L);
    r.labels.push_back(noise.labels()[static_cast<std::size_t>(k)]);
  }
  complete(r);
  return r;
}

RecoveryMap syndrome_petz(const OrthogonalizedNoise& orth) {
  RecoveryMap r;
  r.kind = RecoveryKind::SyndromePetz;
  r.codewords = orth.code.codewords;
  for (const auto& rec : orth.records) {
    // m^{-1/2} EV^dag with m = EV^dag EV, taken from the SVD of EV.
    r.kraus_ops.push_back(matkernel::isometric_factor(rec.EV).adjoint());
    r.labels.push_back(rec.label);
  }
  // Each R_k = G_k Pi_k with Pi_k = R_k^dag R_k idempotent.
  for (const auto& L : r.kraus_ops) {
    Mat Pi = L.adjoint() * L;
    const double res = matkernel::max_abs(Pi * Pi - Pi);
    if (res > 1e-9) throw ToleranceViolation("syndrome_petz: Pi_k not idempotent", res);
  }
  complete(r);
  return r;
}

RecoveryMap polar_recovery(const OrthogonalizedNoise& orth) {
  RecoveryMap r;
  r.kind = RecoveryKind::PolarRE;
  r.codewords = orth.code.codewords;
  const Mat& V = orth.code.codewords;
  std::vector<Mat> Pi;
  for (const auto& rec : orth.records) {
    // V^dag P_k U_k^dag = p_k V^dag U_k^dag.
    r.kraus_ops.push_back(rec.p_code * V.adjoint() * rec.U.adjoint());
    r.labels.push_back(rec.label);
    Pi.push_back(rec.U * rec.P_support * rec.U.adjoint());
  }
  for (std::size_t k = 0; k < Pi.size(); ++k) {
    for (std::size_t l = k + 1; l < Pi.size(); ++l) {
      const double res = matkernel::max_abs(Pi[k] * Pi[l]);
      if (res > 1e-10) throw ToleranceViolation("polar_recovery: Pi_k not orthogonal", res);
    }
  }
  complete(r);
  return r;
}

RecoveryMap polar_recovery_coefficient_form(const OrthogonalizedNoise& orth) {
  RecoveryMap r;
  r.kind = RecoveryKind::PolarRE;
  r.codewords = orth.code.codewords;
  for (const auto& rec : orth.records) {
    r.kraus_ops.push_back(matkernel::psd_power(rec.m_code, -0.5) * rec.p_code * rec.EV.adjoint());
    r.labels.push_back(rec.label);
  }
  complete(r);
  return r;
}

RecoveryMap leung_recovery(const QuantumCode& code, const KrausChannel& noise, double tol) {
  if (noise.dim() != code.dim()) throw DimensionMismatch("leung_recovery: noise vs code");
  std::vector<std::string> subset;
  std::vector<Mat> images;
  for (const auto& l : orthogonalizer::default_order(noise)) {
    if (orthogonalizer::label_weight(l) > 1) continue;
    Mat AV = noise.apply_op(*noise.index_of(l), code.codewords);
    for (std::size_t j = 0; j < images.size(); ++j) {
      const double ov = matkernel::max_abs(images[j].adjoint() * AV);
      if (ov > tol) {
        throw SubspacesOverlap("images of " + subset[j] + " and " + l + " overlap by " +
                               std::to_string(ov));
      }
    }
    subset.push_back(l);
    images.push_back(std::move(AV));
  }
  OrthogonalizedNoise orth = orthogonalizer::orthogonalize(noise, code, subset);
  RecoveryMap r = polar_recovery(orth);
  r.kind = RecoveryKind::Leung;
  return r;
}

RecoveryMap stabilizer_lookup_recovery(const QuantumCode& code, const StabilizerGroup& group,
                                       const std::vector<PauliString>& errors) {
  const int n = group.n();
  if (code.n != n) throw DimensionMismatch("lookup: code vs group");
  const Eigen::Index D = code.dim();
  std::map<std::vector<int>, PauliString> table;
  std::vector<std::vector<int>> order;
  for (const auto& e : errors) {
    std::vector<int> s;
    for (const auto& g : group.generators) s.push_back(g.commutes_with(e) ? 0 : 1);
    if (!table.count(s)) {
      PauliString unit = e;
      unit.coefficient = 1.0;
      unit.phase = 1.0;
      table.emplace(s, unit);
      order.push_back(s);
    }
  }
  RecoveryMap r;
  r.kind = RecoveryKind::StabilizerLookup;
  r.codewords = code.codewords;
  for (const auto& s : order) {
    Mat Pi = Mat::Identity(D, D);
    for (std::size_t i = 0; i < group.generators.size(); ++i) {
      const double sign = s[i] ? -1.0 : 1.0;
      Pi = 0.5 * (Pi + sign * group.generators[i].apply(Pi));
    }
    const PauliString& e = table.at(s);
    r.kraus_ops.push_back(code.codewords.adjoint() * e.apply(Pi));
    r.labels.push_back(e.label());
  }
  complete(r);
  return r;
}

RecoveryMap restricted(const RecoveryMap& base, std::size_t count) {
  RecoveryMap r;
  r.kind = RecoveryKind::Restricted;
  r.codewords = base.codewords;
  for (std::size_t k = 0; k < std::min(count, base.kraus_ops.size()); ++k) {
    r.kraus_ops.push_back(base.kraus_ops[k]);
    r.labels.push_back(base.labels[k]);
  }
  complete(r);
  return r;
}

Mat apply_recovery(const RecoveryMap& map, const Mat& rho) {
  const Mat& V = map.codewords;
  if (rho.rows() != V.rows() || rho.cols() != V.rows()) throw DimensionMismatch("apply_recovery");
  Mat inner = Mat::Zero(V.cols(), V.cols());
  for (const auto& L : map.kraus_ops) inner.noalias() += L * rho * L.adjoint();
  Mat out = V * inner * V.adjoint();
  if (map.completion) out.noalias() += *map.completion * rho * *map.completion;
  return out;
}

QecMatrix qec_matrix(const QuantumCode& code, const KrausChannel& noise) {
  if (noise.dim() != code.dim()) throw DimensionMismatch("qec_matrix: noise vs code");
  const int d = code.d;
  const int N = static_cast<int>(noise.size());
  Mat F(code.dim(), static_cast<Eigen::Index>(d) * N);
  for (int k = 0; k < N; ++k) {
    F.middleCols(static_cast<Eigen::Index>(d) * k, d) =
        noise.apply_op(static_cast<std::size_t>(k), code.codewords);
  }
  return {d, N, F.adjoint() * F};
}

QecMatrix qec_matrix(const OrthogonalizedNoise& orth) {
  const int d = orth.code.d;
  const int N = static_cast<int>(orth.records.size());
  Mat F(orth.code.dim(), static_cast<Eigen::Index>(d) * N);
  for (int k = 0; k < N; ++k) {
    F.middleCols(static_cast<Eigen::Index>(d) * k, d) = orth.records[static_cast<std::size_t>(k)].EV;
  }
  return {d, N, F.adjoint() * F};
}

OptimalityReport optimality_check(const QecMatrix& M) {
  const Mat S = matkernel::psd_power(M.entries, 0.5);
  const Mat T = matkernel::partial_trace_logical(S, M.d, M.N);
  const Mat K = matkernel::kron(T, Mat::Identity(M.d, M.d));
  OptimalityReport r;
  r.commutator = (M.entries * K - K * M.entries).norm();
  r.commutator_literal = M.d * (M.entries * S - S * M.entries).norm();
  return r;
}

SyndromeTable syndrome_table(const OrthogonalizedNoise& orth, const std::vector<std::string>& errors,
                             const std::vector<PauliString>& primary,
                             const std::vector<PauliString>& secondary) {
  if (primary.size() != 2 || secondary.size() != 2) {
    throw DimensionMismatch("syndrome_table: expected two primary and two secondary checks");
  }
  // +1 -> 0, -1 -> 1, anything else -> -1.
  auto bit = [](const PauliString& O, const Mat& Pi) {
    const Mat OP = O.apply(Pi);
    const double lambda = (Pi * OP).trace().real() / Pi.trace().real();
    if (matkernel::max_abs(OP - lambda * Pi) > 1e-9) return -1;
    if (std::abs(lambda - 1.0) < 1e-9) return 0;
    if (std::abs(lambda + 1.0) < 1e-9) return 1;
    return -1;
  };
  SyndromeTable t;
  for (const auto& label : errors) {
    std::size_t k = 0;
    while (k < orth.records.size() && orth.records[k].label != label) ++k;
    if (k == orth.records.size()) throw OutOfRange("syndrome_table: no record for " + label);
    const Mat Pi = range_projector(orth.records[k].EV);
    SyndromeRow row;
    row.error_label = label;
    row.recovery_index = static_cast<int>(k);
    row.p1 = bit(primary[0], Pi);
    row.p2 = bit(primary[1], Pi);
    if (row.p1 < 0 || row.p2 < 0) {
      throw NotEigenspace("image of " + label + " is not an eigenspace of the primary checks");
    }
    if (row.p1 != 0 || row.p2 != 0) {
      row.s1 = bit(secondary[0], Pi);
      row.s2 = bit(secondary[1], Pi);
    }
    t.rows.push_back(row);
  }
  return t;
}

std::string syndrome_table_csv(const SyndromeTable& table) {
  std::ostringstream os;
  auto cell = [](int b) { return b < 0 ? std::string("x") : std::to_string(b); };
  os << "error,p1,p2,s1,s2,recovery\n";
  for (const auto& r : table.rows) {
    os << r.error_label << ',' << r.p1 << ',' << r.p2 << ',' << cell(r.s1) << ',' << cell(r.s2)
       << ",G" << r.recovery_index << '\n';
  }
  return os.str();
}

}  // namespace recovery
}  // namespace nqec
