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

// Completely bounded norms through the factorization SDP
//
//   min t  s.t.  [[Y0, C], [C^*, Y1]] psd,  t I - Tr_1 Y0_pp psd,  t I - Tr_1 Y1_pp psd,
//
// where C is the Choi matrix of a map (one diagonal block p), or the block
// operator whose (y, x) block is the Choi matrix of phi(x, y) for a Schur
// symbol (one diagonal block p per point). Tr_1 traces out the input index.

#include "schurlab/herzschur.hpp"
#include "schurlab/random.hpp"
#include "schurlab/schur.hpp"
#include "schurlab/sdp.hpp"

namespace schurlab {

/// Cap on D^2 |X|, the side of C.
inline constexpr int kDefaultNormSdpCap = 48;

struct NormResult {
  double value = 0.0;  // upper bound from the dual feasible point
  double lower = 0.0;  // lower bound from the primal feasible point
  double gap = 0.0;
  int iterations = 0;
};

/// Scalar grid c(x, y): the cb norm of S(E_yx) = c(x, y) E_yx.
NormResult schur_cb_norm(const CMatrix& c, const SdpOptions& opts = {}, int cap = kDefaultNormSdpCap);
/// Operator-valued symbol on M_D.
NormResult schur_symbol_cb_norm(const SchurSymbol& phi, const SdpOptions& opts = {}, int cap = kDefaultNormSdpCap);
/// Map on M_D. Throws SizeError when D^2 exceeds cap.
NormResult cb_norm(const CbMap& map, const SdpOptions& opts = {}, int cap = kDefaultNormSdpCap);
/// Norm of the Herz-Schur multiplier with symbol F, computed on its transferred Schur multiplier.
NormResult hs_cb_norm(const CrossedProductModel& model, const HsSymbol& f, const SdpOptions& opts = {},
                      int cap = kDefaultNormSdpCap);

/// max |(map (x) id_k)(U)| over random unitaries U in M_{D k}; a lower bound for the cb norm
/// (for k = 1, a lower bound for the plain norm).
double amplified_lower_bound(const CbMap& map, int k, Rng& rng, int trials = 200);
/// max |S(U)| over random unitaries on C^D (x) C^n.
double schur_lower_bound(const AmbientMap& s, Rng& rng, int trials = 200);

}  // namespace schurlab
