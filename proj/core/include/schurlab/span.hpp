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

#include <vector>

#include "schurlab/numerics.hpp"

namespace schurlab {

/// A linearly independent family of K x K matrices with a coordinate solver.
///
/// Coordinates are computed from the Hilbert-Schmidt Gram system, so every
/// query reports the residual of the projection onto the span.
class SpanBasis {
 public:
  SpanBasis() = default;
  /// Throws DegeneracyError when the family is numerically dependent.
  SpanBasis(int ambient_dim, std::vector<SparseCMatrix> elements, double independence_tol = 1e-10);

  int ambient_dim() const { return ambient_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const SparseCMatrix& element(int k) const { return elements_[static_cast<std::size_t>(k)]; }
  const std::vector<SparseCMatrix>& elements() const { return elements_; }

  /// Coordinates of the orthogonal projection of x onto the span; residual is the
  /// Frobenius distance between x and that projection.
  CVector coords(const CMatrix& x, double* residual = nullptr) const;
  CVector coords(const SparseCMatrix& x, double* residual = nullptr) const;

  SparseCMatrix combine(const CVector& c) const;
  CMatrix combine_dense(const CVector& c) const;

  /// Smallest/largest eigenvalue ratio of the Gram matrix.
  double conditioning() const { return conditioning_; }

  /// Indices of a maximal independent subfamily, greedily in the given order.
  static std::vector<int> greedy_independent(const std::vector<SparseCMatrix>& candidates,
                                             double tol = 1e-10);

 private:
  int ambient_ = 0;
  std::vector<SparseCMatrix> elements_;
  SparseCMatrix vecs_;  // K^2 x m, column k = vec(element k)
  CMatrix gram_inv_;
  double conditioning_ = 1.0;
};

/// Incremental greedy selection of an independent subfamily; memory grows
/// with the number of accepted elements only.
class IndependentSetBuilder {
 public:
  explicit IndependentSetBuilder(double tol = 1e-10) : tol_(tol) {}
  /// Accepts x when its distance to the current span exceeds tol * |x|.
  bool add(const SparseCMatrix& x);
  int size() const { return static_cast<int>(accepted_.size()); }

 private:
  double tol_;
  std::vector<Eigen::SparseVector<cplx>> accepted_;
  CMatrix lower_;
};

SparseCMatrix to_sparse(const CMatrix& a, double drop_tol = 0.0);
SparseCMatrix sparse_vec(const SparseCMatrix& a);

}  // namespace schurlab
