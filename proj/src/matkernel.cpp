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

#include "nqec/matkernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nqec::matkernel {

double max_abs(const Mat& A) {
  return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const Mat& H) {
  return max_abs(H - H.adjoint());
}

double rank_cutoff(const Eigen::VectorXd& eigenvalues, double tol) {
  double scale = eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
  return tol * std::max(1.0, scale);
}

SpectralDecomposition hermitian_eig(const Mat& H) {
  if (H.rows() != H.cols()) {
    throw DimensionMismatch("hermitian_eig: matrix is not square");
  }
  double res = hermiticity_residual(H);
  if (res >= 1e-10 * std::max(1.0, max_abs(H))) {
    throw NonHermitianInput("hermitian_eig: residual " + std::to_string(res));
  }
  Mat Hs = 0.5 * (H + H.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(Hs);
  return {es.eigenvalues(), es.eigenvectors()};
}

namespace {

// Rejects spectra that dip below -cutoff.
void require_psd(const Eigen::VectorXd& w, double cutoff) {
  if (w.size() > 0 && w.minCoeff() < -cutoff) {
    throw NegativeSpectrum("eigenvalue " + std::to_string(w.minCoeff()) +
                           " below -" + std::to_string(cutoff));
  }
}

}  // namespace

Mat support_projector(const Mat& H, double tol) {
  auto sd = hermitian_eig(H);
  double c = rank_cutoff(sd.eigenvalues, tol);
  require_psd(sd.eigenvalues, c);
  Mat P = Mat::Zero(H.rows(), H.cols());
  for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
    if (sd.eigenvalues(i) > c) {
      P += sd.eigenvectors.col(i) * sd.eigenvectors.col(i).adjoint();
    }
  }
  return P;
}

int numeric_rank(const Mat& H, double tol) {
  auto sd = hermitian_eig(H);
  double c = rank_cutoff(sd.eigenvalues, tol);
  return static_cast<int>((sd.eigenvalues.array() > c).count());
}

Mat psd_power(const Mat& H, double p, double tol) {
  auto sd = hermitian_eig(H);
  double c = rank_cutoff(sd.eigenvalues, tol);
  require_psd(sd.eigenvalues, c);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    if (sd.eigenvalues(i) > c) f(i) = std::pow(sd.eigenvalues(i), p);
  }
  return sd.eigenvectors * f.asDiagonal() * sd.eigenvectors.adjoint();
}

Mat isometric_factor(const Mat& B, double tol) {
  Eigen::JacobiSVD<Mat> svd(B, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cut = rank_cutoff(s.cwiseAbs2(), tol);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) * s(r) > cut) ++r;
  return svd.matrixU().leftCols(r) * svd.matrixV().leftCols(r).adjoint();
}

PolarDecomposition polar_decompose(const Mat& A, double /*tol*/) {
  if (A.rows() != A.cols()) {
    throw DimensionMismatch("polar_decompose: matrix is not square");
  }
  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Mat& u = svd.matrixU();
  const Mat& v = svd.matrixV();
  Mat U = u * v.adjoint();
  Mat S = v * svd.singularValues().cast<cplx>().asDiagonal() * v.adjoint();
  return {U, 0.5 * (S + S.adjoint())};
}

Mat kron(const Mat& A, const Mat& B) {
  Mat K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
  }
  return K;
}

Mat dagger(const Mat& A) { return A.adjoint(); }

Mat matmul(const Mat& A, const Mat& B) {
  if (A.cols() != B.rows()) {
    throw DimensionMismatch("matmul: " + std::to_string(A.cols()) + " vs " +
                            std::to_string(B.rows()));
  }
  return A * B;
}

Mat identity(Eigen::Index n) { return Mat::Identity(n, n); }

Mat partial_trace_logical(const Mat& M, int d, int N) {
  if (d <= 0 || N <= 0 || M.rows() != d * N || M.cols() != d * N) {
    throw DimensionMismatch("partial_trace_logical: expected (d*N)x(d*N)");
  }
  Mat T = Mat::Zero(N, N);
  for (int k = 0; k < N; ++k) {
    for (int l = 0; l < N; ++l) {
      for (int mu = 0; mu < d; ++mu) T(k, l) += M(mu + d * k, mu + d * l);
    }
  }
  return T;
}

Vec vec(const Mat& A) {
  return Eigen::Map<const Vec>(A.data(), A.size());
}

double min_eigenvalue(const Mat& H) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (H + H.adjoint()),
                                         Eigen::EigenvaluesOnly);
  return es.eigenvalues().size() ? es.eigenvalues()(0) : 0.0;
}

}  // namespace nqec::matkernel
