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

#include "schurlab/random.hpp"

#include <cmath>

namespace schurlab {

CMatrix random_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix a(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = nd(rng);
      const double im = nd(rng);
      a(i, j) = cplx(s * re, s * im);
    }
  }
  return a;
}

CVector random_vector(int n, Rng& rng) { return random_matrix(n, 1, rng).col(0); }

CMatrix random_unitary(int n, Rng& rng) {
  const CMatrix z = random_matrix(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

CMatrix random_element(const FdVnAlgebra& alg, Rng& rng) { return alg.element(random_vector(alg.dim(), rng)); }

CbMap random_map_on(const FdVnAlgebra& alg, Rng& rng) {
  return CbMap::from_restricted(alg, random_matrix(alg.dim(), alg.dim(), rng));
}

}  // namespace schurlab
