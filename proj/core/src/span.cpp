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

#include "schurlab/span.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schurlab/errors.hpp"

namespace schurlab {

SparseCMatrix to_sparse(const CMatrix& a, double drop_tol) {
  std::vector<Eigen::Triplet<cplx>> trips;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (std::abs(a(i, j)) > drop_tol) trips.emplace_back(static_cast<int>(i), static_cast<int>(j), a(i, j));
    }
  }
  SparseCMatrix s(a.rows(), a.cols());
  s.setFromTriplets(trips.begin(), trips.end());
  return s;
}

SparseCMatrix sparse_vec(const SparseCMatrix& a) {
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(static_cast<std::size_t>(a.nonZeros()));
  for (int k = 0; k < a.outerSize(); ++k) {
    for (SparseCMatrix::InnerIterator it(a, k); it; ++it) {
      trips.emplace_back(static_cast<int>(it.row() + it.col() * a.rows()), 0, it.value());
    }
  }
  SparseCMatrix v(a.rows() * a.cols(), 1);
  v.setFromTriplets(trips.begin(), trips.end());
  return v;
}

namespace {

SparseCMatrix stack_vecs(int ambient, const std::vector<SparseCMatrix>& elements) {
  std::vector<Eigen::Triplet<cplx>> trips;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const auto& e = elements[k];
    if (e.rows() != ambient || e.cols() != ambient) throw ShapeError("SpanBasis: element shape mismatch");
    for (int c = 0; c < e.outerSize(); ++c) {
      for (SparseCMatrix::InnerIterator it(e, c); it; ++it) {
        trips.emplace_back(static_cast<int>(it.row() + it.col() * ambient), static_cast<int>(k), it.value());
      }
    }
  }
  SparseCMatrix v(static_cast<Eigen::Index>(ambient) * ambient, static_cast<Eigen::Index>(elements.size()));
  v.setFromTriplets(trips.begin(), trips.end());
  return v;
}

}  // namespace

SpanBasis::SpanBasis(int ambient_dim, std::vector<SparseCMatrix> elements, double independence_tol)
    : ambient_(ambient_dim), elements_(std::move(elements)) {
  for (auto& e : elements_) e.makeCompressed();
  vecs_ = stack_vecs(ambient_, elements_);
  const CMatrix gram = CMatrix(vecs_.adjoint() * vecs_);
  if (!elements_.empty()) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues()(0);
    const double hi = es.eigenvalues()(es.eigenvalues().size() - 1);
    conditioning_ = hi > 0 ? lo / hi : 0.0;
    if (conditioning_ <= independence_tol) {
      throw DegeneracyError("SpanBasis: family of " + std::to_string(elements_.size()) +
                            " matrices is numerically dependent (Gram ratio " +
                            std::to_string(conditioning_) + ")");
    }
  }
  // Explicit inverse: independence was checked above, and a matrix-vector
  // product is much cheaper per query than the factored solve.
  gram_inv_ = gram.ldlt().solve(CMatrix::Identity(gram.rows(), gram.cols()));
}

CVector SpanBasis::coords(const CMatrix& x, double* residual) const {
  if (x.rows() != ambient_ || x.cols() != ambient_) throw ShapeError("SpanBasis::coords: shape mismatch");
  if (elements_.empty()) {
    if (residual) *residual = x.norm();
    return CVector(0);
  }
  const CVector v = vec(x);
  const CVector rhs = vecs_.adjoint() * v;
  CVector c = gram_inv_ * rhs;
  if (residual) *residual = (v - vecs_ * c).norm();
  return c;
}

CVector SpanBasis::coords(const SparseCMatrix& x, double* residual) const {
  if (x.rows() != ambient_ || x.cols() != ambient_) throw ShapeError("SpanBasis::coords: shape mismatch");
  const SparseCMatrix v = sparse_vec(x);
  if (elements_.empty()) {
    if (residual) *residual = v.norm();
    return CVector(0);
  }
  const CVector rhs = CMatrix(vecs_.adjoint() * v);
  CVector c = gram_inv_ * rhs;
  if (residual) {
    // |v - Bc|^2 = |v|^2 - 2 Re <Bc, v> + |Bc|^2
    const CVector bc = vecs_ * c;
    double r2 = v.squaredNorm() + bc.squaredNorm();
    for (int k = 0; k < v.outerSize(); ++k) {
      for (SparseCMatrix::InnerIterator it(v, k); it; ++it) {
        r2 -= 2.0 * std::real(std::conj(bc(it.row())) * it.value());
      }
    }
    *residual = std::sqrt(std::max(0.0, r2));
  }
  return c;
}

SparseCMatrix SpanBasis::combine(const CVector& c) const {
  SparseCMatrix out(ambient_, ambient_);
  for (int k = 0; k < size(); ++k) {
    if (c(k) != cplx(0.0)) out += c(k) * elements_[static_cast<std::size_t>(k)];
  }
  return out;
}

CMatrix SpanBasis::combine_dense(const CVector& c) const {
  CMatrix out = CMatrix::Zero(ambient_, ambient_);
  for (int k = 0; k < size(); ++k) {
    if (c(k) == cplx(0.0)) continue;
    const auto& e = elements_[static_cast<std::size_t>(k)];
    for (int j = 0; j < e.outerSize(); ++j) {
      for (SparseCMatrix::InnerIterator it(e, j); it; ++it) out(it.row(), it.col()) += c(k) * it.value();
    }
  }
  return out;
}

namespace {

cplx sparse_inner(const Eigen::SparseVector<cplx>& a, const Eigen::SparseVector<cplx>& b) {
  cplx acc = 0.0;
  Eigen::SparseVector<cplx>::InnerIterator ia(a);
  Eigen::SparseVector<cplx>::InnerIterator ib(b);
  while (ia && ib) {
    if (ia.index() < ib.index()) {
      ++ia;
    } else if (ib.index() < ia.index()) {
      ++ib;
    } else {
      acc += std::conj(ia.value()) * ib.value();
      ++ia;
      ++ib;
    }
  }
  return acc;
}

}  // namespace

bool IndependentSetBuilder::add(const SparseCMatrix& x) {
  Eigen::SparseVector<cplx> v(x.rows() * x.cols());
  for (int k = 0; k < x.outerSize(); ++k) {
    for (SparseCMatrix::InnerIterator it(x, k); it; ++it) v.insert(it.row() + it.col() * x.rows()) = it.value();
  }
  const double self = v.squaredNorm();
  if (self <= 0) return false;
  const auto m = static_cast<Eigen::Index>(accepted_.size());
  CVector g(m);
  for (Eigen::Index i = 0; i < m; ++i) g(i) = sparse_inner(accepted_[static_cast<std::size_t>(i)], v);
  const CVector w = m > 0 ? CVector(lower_.triangularView<Eigen::Lower>().solve(g)) : CVector(0);
  const double rest = self - w.squaredNorm();
  if (rest <= tol_ * self) return false;
  CMatrix grown = CMatrix::Zero(m + 1, m + 1);
  grown.topLeftCorner(m, m) = lower_;
  grown.block(m, 0, 1, m) = w.adjoint();
  grown(m, m) = std::sqrt(rest);
  lower_ = std::move(grown);
  accepted_.push_back(std::move(v));
  return true;
}

std::vector<int> SpanBasis::greedy_independent(const std::vector<SparseCMatrix>& candidates, double tol) {
  IndependentSetBuilder builder(tol);
  std::vector<int> accepted;
  for (int k = 0; k < static_cast<int>(candidates.size()); ++k) {
    if (builder.add(candidates[static_cast<std::size_t>(k)])) accepted.push_back(k);
  }
  return accepted;
}

}  // namespace schurlab
