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

#include "nqec/metrics.hpp"

#include <array>
#include <cmath>

namespace nqec::metrics {

namespace {

// Adds (I_d kron L) S (I_d kron L)^dagger to J.
void accumulate(Mat& J, const Mat& S, const Mat& L, int d) {
  const Eigen::Index D = L.cols();
  Mat Lbig = Mat::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * D);
  for (int a = 0; a < d; ++a) Lbig.block(a * d, a * D, d, D) = L;
  J.noalias() += Lbig * S * Lbig.adjoint();
}

Vec bloch_state(double theta, double phi) {
  Vec c(2);
  c(0) = std::cos(theta / 2.0);
  c(1) = std::polar(1.0, phi) * std::sin(theta / 2.0);
  return c;
}

}  // namespace

Mat fidelity_matrix(const RecoveryMap& R, const KrausChannel& noise, const QuantumCode& code) {
  if (noise.dim() != code.dim() || R.codewords.rows() != code.dim()) {
    throw DimensionMismatch("fidelity_matrix");
  }
  const Mat& V = code.codewords;
  const int d = code.d;
  const Eigen::Index D = code.dim();
  const Eigen::Index dD = static_cast<Eigen::Index>(d) * D;
  // R's codeword frame may differ from code's by a unitary; map it over.
  const Mat frame = V.adjoint() * R.codewords;
  Mat F(dD, static_cast<Eigen::Index>(noise.size()));
  for (std::size_t l = 0; l < noise.size(); ++l) {
    F.col(static_cast<Eigen::Index>(l)) = matkernel::vec(noise.apply_op(l, V));
  }
  const Mat S = F * F.adjoint();
  Mat J = Mat::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
  for (const auto& L : R.kraus_ops) accumulate(J, S, frame * L, d);
  if (R.completion) accumulate(J, S, V.adjoint() * *R.completion, d);
  return 0.5 * (J + J.adjoint());
}

double entanglement_fidelity(const Mat& J, int d) {
  const Vec v = matkernel::vec(Mat::Identity(d, d));
  return (v.adjoint() * J * v)(0).real() / (static_cast<double>(d) * d);
}

double entanglement_fidelity(const RecoveryMap& R, const KrausChannel& noise, const QuantumCode& code) {
  return entanglement_fidelity(fidelity_matrix(R, noise, code), code.d);
}

double state_fidelity(const Mat& J, const Vec& c) {
  const Eigen::Index d = c.size();
  if (J.rows() != d * d) throw DimensionMismatch("state_fidelity");
  Vec w(d * d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) w(i + d * j) = c(i) * std::conj(c(j));
  }
  return (w.adjoint() * J * w)(0).real();
}

WorstCase worst_case_fidelity(const Mat& J, int d) {
  if (d != 2) throw UnsupportedDimension("worst_case_fidelity: only d = 2");
  constexpr int kTheta = 64, kPhi = 128;
  const double pi = std::acos(-1.0);
  WorstCase best;
  best.value = 2.0;
  for (int i = 0; i < kTheta; ++i) {
    const double th = pi * i / (kTheta - 1);
    for (int j = 0; j < kPhi; ++j) {
      const double ph = 2.0 * pi * j / kPhi;
      const double f = state_fidelity(J, bloch_state(th, ph));
      if (f < best.value) best = {f, Vec(), th, ph};
    }
  }
  // Compass pattern search; the objective is smooth on the sphere.
  double step = pi / kTheta;
  const std::array<std::array<double, 2>, 4> dirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  while (step > 1e-7) {
    bool improved = false;
    for (const auto& dvec : dirs) {
      const double th = best.theta + step * dvec[0];
      const double ph = best.phi + step * dvec[1];
      const double f = state_fidelity(J, bloch_state(th, ph));
      if (f < best.value) {
        best = {f, Vec(), th, ph};
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  best.state = bloch_state(best.theta, best.phi);
  return best;
}

WorstCase worst_case_fidelity(const RecoveryMap& R, const KrausChannel& noise, const QuantumCode& code) {
  if (code.d != 2) throw UnsupportedDimension("worst_case_fidelity: only d = 2");
  return worst_case_fidelity(fidelity_matrix(R, noise, code), code.d);
}

PolyFit fidelity_poly_fit(const std::vector<double>& gammas, const std::vector<double>& values,
                          int degree) {
  if (degree < 1) throw OutOfRange("fidelity_poly_fit: degree");
  if (gammas.size() != values.size()) throw DimensionMismatch("fidelity_poly_fit: sizes");
  if (gammas.size() < static_cast<std::size_t>(degree) + 1) {
    throw OutOfRange("fidelity_poly_fit: need degree + 1 points");
  }
  const Eigen::Index m = static_cast<Eigen::Index>(gammas.size());
  Eigen::MatrixXd X(m, degree);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    double g = gammas[static_cast<std::size_t>(i)], p = g;
    for (int j = 0; j < degree; ++j, p *= g) X(i, j) = p;
    y(i) = 1.0 - values[static_cast<std::size_t>(i)];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  PolyFit fit;
  fit.condition = s(s.size() - 1) > 0 ? s(0) / s(s.size() - 1) : INFINITY;
  if (!(fit.condition <= 1e12)) {
    throw IllConditioned("fidelity_poly_fit: condition " + std::to_string(fit.condition));
  }
  Eigen::VectorXd a = svd.solve(y);
  fit.coefficients.assign(a.data(), a.data() + a.size());
  fit.residual = (X * a - y).cwiseAbs().maxCoeff();
  return fit;
}

std::vector<double> default_gamma_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 40; ++i) g.push_back(0.005 * i);
  return g;
}

PetzDominance petz_dominance_certificate(const QuantumCode& code, const KrausChannel& noise,
                                    const OrthogonalizedNoise& orth) {
  PetzDominance r;
  r.f_petz = entanglement_fidelity(recovery::petz(code, noise), noise, code);
  r.f_syndrome = entanglement_fidelity(recovery::syndrome_petz(orth), noise, code);
  r.eta_petz = 1.0 - r.f_petz;
  r.eta_syndrome = 1.0 - r.f_syndrome;
  r.holds = r.f_petz >= r.f_syndrome * r.f_syndrome - 1e-9 &&
            r.eta_petz <= 2.0 * r.eta_syndrome + 1e-9;
  return r;
}

std::pair<double, double> polar_bound_diagnostic(const OrthogonalizedNoise& orth,
                                                 const KrausChannel& noise) {
  const double lhs = worst_case_fidelity(recovery::polar_recovery(orth), noise, orth.code).value;
  const double d = orth.code.d;
  double rhs = 0.0;
  for (const auto& r : orth.records) rhs += std::norm(r.m_code.trace());
  return {lhs, rhs / (d * d)};
}

double readout_probability(const Mat& rho, const Mat& U_en, int m, int qubit) {
  const Mat sigma = U_en.adjoint() * rho * U_en;
  const Eigen::Index D = sigma.rows();
  int n = 0;
  while ((Eigen::Index{1} << n) < D) ++n;
  if (qubit < 0 || qubit >= n) throw OutOfRange("readout_probability: qubit");
  double p = 0.0;
  for (Eigen::Index x = 0; x < D; ++x) {
    if (((x >> (n - 1 - qubit)) & 1) == m) p += sigma(x, x).real();
  }
  return p;
}

ReadoutResult logical_readout_fidelity(const QuantumCode& code, const KrausChannel& noise,
                                       const RecoveryMap& R, const Mat& U_en, int m, int qubit) {
  if (m < 0 || m >= code.d || code.d != 2) throw OutOfRange("logical_readout_fidelity: m");
  std::string bits(static_cast<std::size_t>(code.n), '0');
  bits[static_cast<std::size_t>(qubit)] = static_cast<char>('0' + m);
  const Vec mapped = U_en * codes::basis_ket(bits);
  const Vec mL = code.codeword(m);
  if ((mapped - mL).norm() > 1e-10) {
    throw TruthTableMismatch("encoder does not send |" + bits + "> to the logical state");
  }
  const Mat rho = mL * mL.adjoint();
  const Mat out = recovery::apply_recovery(R, channels::apply(noise, rho));
  ReadoutResult r;
  r.readout = readout_probability(out, U_en, m, qubit);
  r.direct = (mL.adjoint() * out * mL)(0).real();
  return r;
}

}  // namespace nqec::metrics
