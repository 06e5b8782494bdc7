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

// Dense primal-dual interior-point solver for small semidefinite programs
//
//   (P)  min <C, X>   s.t. <A_i, X> = b_i,  X psd
//   (D)  max b^T y    s.t. Z = C - sum_i y_i A_i psd
//
// over block-diagonal real symmetric matrices. Directions are HKM with a
// Mehrotra predictor-corrector step.

#include <vector>

#include "schurlab/numerics.hpp"

namespace schurlab {

/// One entry of a symmetric block matrix; (row, col) and (col, row) both receive value.
struct SdpEntry {
  int block;
  int row;
  int col;
  double value;
};

struct SdpProblem {
  std::vector<int> block_sizes;
  std::vector<SdpEntry> objective;                // C
  std::vector<std::vector<SdpEntry>> constraints;  // A_i
  RVector b;
};

struct SdpOptions {
  double tol = 1e-9;
  int max_iterations = 100;
};

enum class SdpStatus { Optimal, PrimalInfeasible, DualInfeasible };

struct SdpResult {
  SdpStatus status = SdpStatus::Optimal;
  double primal = 0.0;  // <C, X>
  double dual = 0.0;    // b^T y
  double gap = 0.0;     // |primal - dual|
  RVector y;
  std::vector<RMatrix> x;
  std::vector<RMatrix> z;
  int iterations = 0;
};

/// Throws InputError on malformed problems and NumericalError (carrying the
/// best dual and primal values) when the iteration cap is reached.
SdpResult sdp_solve(const SdpProblem& p, const SdpOptions& opts = {});

/// Embeds a Hermitian matrix as the real symmetric [[Re, -Im], [Im, Re]].
RMatrix hermitian_to_real(const CMatrix& h);

}  // namespace schurlab
