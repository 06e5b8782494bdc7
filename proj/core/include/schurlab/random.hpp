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

// Seeded random test data. All generators draw from a caller-owned engine so
// runs are reproducible from a single seed.

#include <random>

#include "schurlab/fdvn.hpp"

namespace schurlab {

using Rng = std::mt19937_64;

/// Entries (g1 + i g2) / sqrt(2) with g1, g2 standard normal.
CMatrix random_matrix(int rows, int cols, Rng& rng);
CVector random_vector(int n, Rng& rng);
/// Haar-distributed unitary via QR with phase correction.
CMatrix random_unitary(int n, Rng& rng);
CMatrix random_element(const FdVnAlgebra& alg, Rng& rng);
/// A map M -> M with Gaussian matrix in matrix-unit coordinates.
CbMap random_map_on(const FdVnAlgebra& alg, Rng& rng);

}  // namespace schurlab
