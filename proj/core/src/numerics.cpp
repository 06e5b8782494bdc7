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

#include "schurlab/numerics.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "schurlab/errors.hpp"

namespace schurlab {

namespace {

void check_kron_cap(Eigen::Index ra, Eigen::Index ca, Eigen::Index rb, Eigen::Index cb, int cap) {
  const auto rows = ra * rb;
  const auto cols = ca * cb;
  if (rows > cap || cols > cap) {
    throw SizeError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b, int cap) {
  check_kron_cap(a.rows(), a.cols(), b.rows(), b.cols(), cap);
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

SparseCMatrix kron(const SparseCMatrix& a, const SparseCMatrix& b, int cap) {
  check_kron_cap(a.rows(), a.cols(), b.rows(), b.cols(), cap);
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (int ka = 0; ka < a.outerSize(); ++ka) {
    for (SparseCMatrix::InnerIterator ia(a, ka); ia; ++ia) {
      for (int kb = 0; kb < b.outerSize(); ++kb) {
        for (SparseCMatrix::InnerIterator ib(b, kb); ib; ++ib) {
          trips.emplace_back(static_cast<int>(ia.row() * b.rows() + ib.row()),
                             static_cast<int>(ia.col() * b.cols() + ib.col()),
                             ia.value() * ib.value());
        }
      }
    }
  }
  SparseCMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

bool all_finite(const CMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
    }
  }
  return true;
}

double operator_norm(const CMatrix& a) {
  if (!all_finite(a)) throw InputError("operator_norm: non-finite entries");
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

CVector vec(const CMatrix& a) {
  // Eigen storage is column-major, which is exactly column stacking.
  return Eigen::Map<const CVector>(a.data(), a.size());
}

CMatrix unvec(const CVector& v) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (n * n != v.size()) {
    throw ShapeError("unvec: length " + std::to_string(v.size()) + " is not a perfect square");
  }
  return unvec(v, static_cast<int>(n), static_cast<int>(n));
}

CMatrix unvec(const CVector& v, int rows, int cols) {
  if (static_cast<Eigen::Index>(rows) * cols != v.size()) {
    throw ShapeError("unvec: length " + std::to_string(v.size()) + " does not match " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

CMatrix choi_from_superoperator(const CMatrix& superop, int d) {
  if (superop.rows() != d * d || superop.cols() != d * d) {
    throw ShapeError("choi: superoperator must be d^2 x d^2");
  }
  CMatrix c = CMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      // Phi(E_ij) is column (i + j d) of the superoperator.
      c.block(i * d, j * d, d, d) = unvec(superop.col(i + j * d), d, d);
    }
  }
  return c;
}

CMatrix matrix_unit(int n, int i, int j) {
  CMatrix e = CMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

CMatrix identity(int n) { return CMatrix::Identity(n, n); }

double max_abs(const CMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double min_hermitian_eigenvalue(const CMatrix& a) {
  const CMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

CMatrix tensor_apply_right(const CMatrix& z, int k, int n,
                           const std::function<CMatrix(const CMatrix&)>& f) {
  if (z.rows() != k * n || z.cols() != k * n) throw ShapeError("tensor_apply_right: shape");
  CMatrix out;
  int m = -1;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const CMatrix img = f(z.block(a * n, b * n, n, n));
      if (m < 0) {
        m = static_cast<int>(img.rows());
        out = CMatrix::Zero(k * m, k * m);
      }
      out.block(a * m, b * m, m, m) = img;
    }
  }
  return out;
}

CMatrix tensor_apply_left(const CMatrix& z, int k, int n,
                          const std::function<CMatrix(const CMatrix&)>& f) {
  if (z.rows() != k * n || z.cols() != k * n) throw ShapeError("tensor_apply_left: shape");
  CMatrix out;
  int m = -1;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      CMatrix slice(k, k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) slice(i, j) = z(i * n + p, j * n + q);
      }
      if (m >= 0 && slice.isZero(0.0)) continue;  // f is linear
      const CMatrix img = f(slice);
      if (m < 0) {
        m = static_cast<int>(img.rows());
        out = CMatrix::Zero(m * n, m * n);
      }
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) out(i * n + p, j * n + q) = img(i, j);
      }
    }
  }
  return out;
}

CMatrix null_space(const CMatrix& a, double tol) {
  if (a.cols() == 0) return CMatrix(0, 0);
  if (a.rows() == 0) return CMatrix::Identity(a.cols(), a.cols());
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double scale = std::max(1.0, s(0));
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * scale) ++rank;
  }
  return svd.matrixV().rightCols(a.cols() - rank);
}

int numerical_rank(const CMatrix& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& s = svd.singularValues();
  const double scale = std::max(1.0, s(0));
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * scale) ++rank;
  }
  return rank;
}

}  // namespace schurlab
