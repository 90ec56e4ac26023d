// Copyright 2026 The ffq Authors
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

#include <Eigen/Dense>
#include <complex>

namespace ffq {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

struct EigenDecomposition {
  Vector values;   // ascending
  Matrix vectors;  // orthonormal columns
};

/// Cyclic Jacobi eigensolver for real symmetric matrices.
///
/// Rotations are applied until the off-diagonal Frobenius norm falls below
/// 1e-14 * ||A||_F, so the eigenvector matrix is orthogonal to machine
/// precision by construction.  Eigenvalues come back sorted ascending and
/// every eigenvector is normalized so its largest-magnitude component is
/// positive.
EigenDecomposition jacobi_eigensolve(const Matrix& a);

/// Matrix exponential by scaling-and-squaring with a truncated Taylor
/// series (series tolerance 1e-12); intended for small dense matrices.
ComplexMatrix expm(const ComplexMatrix& a);

/// Max-norm of A - A^T.
double symmetry_defect(const Matrix& a);

/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace ffq
