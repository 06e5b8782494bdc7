// Copyright 2026 The schurlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex linear algebra used throughout the library.
//
// Conventions:
//   * kron(a, b) flattens (i, k) -> i * b.rows() + k (left factor is the slow index),
//     so H_M (x) l2(G) keeps the algebra index first.
//   * vec stacks columns: vec(A X B) = (B^T (x) A) vec(X).

#include <complex>
#include <cstddef>
#include <functional>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace schurlab {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using SparseCMatrix = Eigen::SparseMatrix<cplx, Eigen::ColMajor>;

/// Default cap on either side of a Kronecker product.
inline constexpr int kDefaultKronCap = 4096;

CMatrix kron(const CMatrix& a, const CMatrix& b, int cap = kDefaultKronCap);
SparseCMatrix kron(const SparseCMatrix& a, const SparseCMatrix& b, int cap = kDefaultKronCap);

/// Largest singular value. Throws InputError on NaN/inf entries.
double operator_norm(const CMatrix& a);

CVector vec(const CMatrix& a);
/// Inverse of vec for a square matrix; throws ShapeError if the length is not a square.
CMatrix unvec(const CVector& v);
/// Inverse of vec for an explicit shape.
CMatrix unvec(const CVector& v, int rows, int cols);

/// Choi matrix sum_ij E_ij (x) Phi(E_ij) of the superoperator acting on vec coordinates of M_d.
CMatrix choi_from_superoperator(const CMatrix& superop, int d);

CMatrix matrix_unit(int n, int i, int j);
CMatrix identity(int n);

bool all_finite(const CMatrix& a);
double max_abs(const CMatrix& a);
double min_hermitian_eigenvalue(const CMatrix& a);

/// For Z acting on C^k (x) C^n, returns sum_{ab} E_ab (x) f(Z_(ab)) where Z_(ab) are the n x n slices
/// over the right factor. f must map n x n matrices to m x m matrices.
CMatrix tensor_apply_right(const CMatrix& z, int k, int n,
                           const std::function<CMatrix(const CMatrix&)>& f);
/// For Z acting on C^k (x) C^n, returns sum_{pq} f(Z^(pq)) (x) E_pq where Z^(pq) are the k x k
/// slices over the left factor.
/// f must be linear; zero slices after the first are skipped.
CMatrix tensor_apply_left(const CMatrix& z, int k, int n,
                          const std::function<CMatrix(const CMatrix&)>& f);

/// Orthonormal basis of the null space of a (columns), via SVD; singular values below tol count as zero.
CMatrix null_space(const CMatrix& a, double tol = 1e-10);
int numerical_rank(const CMatrix& a, double tol = 1e-10);

}  // namespace schurlab
