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

#include <complex>

#include <Eigen/Dense>

#include "nqec/errors.hpp"

namespace nqec {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

namespace matkernel {

// Eigenvalues at or below kRankTol * max(1, max|lambda|) count as zero.
inline constexpr double kRankTol = 1e-10;

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  Mat eigenvectors;             // columns, unitary
};

struct PolarDecomposition {
  Mat U;  // unitary; arbitrary on the null space of S
  Mat S;  // sqrt(A^dagger A)
};

double max_abs(const Mat& A);
double hermiticity_residual(const Mat& H);
double rank_cutoff(const Eigen::VectorXd& eigenvalues, double tol);

SpectralDecomposition hermitian_eig(const Mat& H);

// Sum of |c_i><c_i| over eigenvalues above the relative cutoff.
Mat support_projector(const Mat& H, double tol = kRankTol);
int numeric_rank(const Mat& H, double tol = kRankTol);

// H^p on the support of H; zero on its kernel.
Mat psd_power(const Mat& H, double p, double tol = kRankTol);

// For B = U S W^dag returns U_r W_r^dag over singular values with s^2 above the
// rank cutoff of B B^dag. Equals (B B^dag)^{-1/2} B without squaring the condition number.
Mat isometric_factor(const Mat& B, double tol = kRankTol);

PolarDecomposition polar_decompose(const Mat& A, double tol = kRankTol);

Mat kron(const Mat& A, const Mat& B);
Mat dagger(const Mat& A);
Mat matmul(const Mat& A, const Mat& B);
Mat identity(Eigen::Index n);

// T_kl = sum_mu M_[mu,k],[mu,l]; mu is the fast index.
Mat partial_trace_logical(const Mat& M, int d, int N);

// Column-major vectorisation, vec(A X B) = (B^T kron A) vec(X).
Vec vec(const Mat& A);

double min_eigenvalue(const Mat& H);

}  // namespace matkernel
}  // namespace nqec
