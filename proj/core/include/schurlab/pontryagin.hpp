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

// Abelian groups: B(l2 G) as a crossed product in two ways, the Weyl basis
// m_gamma lambda_r, and maps that are Herz-Schur multipliers in both pictures.
//
// Maps on B(l2 G) are n^2 x n^2 matrices acting on vec coordinates.

#include <functional>

#include "schurlab/herzschur.hpp"

namespace schurlab {

/// m_gamma = diag(<gamma, s>)
CMatrix character_multiplier(const DualGroup& dual, int gamma);

struct WeylBasis {
  DualGroup dual;
  std::vector<CMatrix> elements;  // index gamma * n + r, element m_gamma lambda_r
  CMatrix vecs;                   // column k = vec(elements[k])
  double commutation_residual = 0.0;

  int order() const { return dual.base().order(); }
  const CMatrix& at(int gamma, int r) const { return elements[static_cast<std::size_t>(gamma * order() + r)]; }
};

/// Throws DomainError for nonabelian groups, DegeneracyError if the basis fails to span.
WeylBasis weyl_basis(const FiniteGroup& g);

/// Matrix of f on B(l2 G) in vec coordinates.
CMatrix vec_map_from_function(int n, const std::function<CMatrix(const CMatrix&)>& f);

/// S(m_gamma lambda_r) = u(gamma, r) m_gamma lambda_r; u has rows gamma and columns r.
CMatrix simultaneous_multiplier(const WeylBasis& w, const CMatrix& u);

/// Both crossed-product pictures of B(l2 G) and the transported maps.
struct PontryaginPictures {
  CrossedProductModel translation;  // alpha_G on L^infty(G)
  CrossedProductModel dual;         // alpha_{G^} on L^infty(G^)
  CMatrix j_translation;            // span coords -> vec, pi(delta_a) lambda~_r -> E_aa lambda_r
  CMatrix j_dual;                   // pi(delta_g) lambda~_gamma -> F^* E_gg F m_gamma
  LiftedModule translation_module;  // A(G^) by character projections
  LiftedModule dual_module;         // A(G) by evaluation projections
};

PontryaginPictures pontryagin_pictures(const WeylBasis& w);

/// S^alpha = J^{-1} S J in the translation picture.
CMatrix translation_picture(const PontryaginPictures& p, const CMatrix& s);
CMatrix dual_picture(const PontryaginPictures& p, const CMatrix& s);

struct SimultaneousReport {
  double hs_translation = 0.0;
  double module_translation = 0.0;
  double hs_dual = 0.0;
  double module_dual = 0.0;
  double weyl_offdiagonal = 0.0;
  bool flags[4] = {false, false, false, false};
  bool weyl_diagonal = false;

  bool picture_translation() const { return flags[0] && flags[1]; }
  bool picture_dual() const { return flags[2] && flags[3]; }
  /// Both pictures agree with each other and with Weyl-diagonality.
  bool equivalence_holds() const {
    return picture_translation() == picture_dual() && picture_translation() == weyl_diagonal;
  }
};

SimultaneousReport verify_simultaneous(const CMatrix& s, const WeylBasis& w, const PontryaginPictures& p,
                                       double tol = 1e-10);
SimultaneousReport verify_simultaneous(const CMatrix& s, const WeylBasis& w, double tol = 1e-10);

/// Reads u off the Weyl-diagonal entries. Throws DomainError when S is not Weyl-diagonal.
CMatrix bisymbol_roundtrip(const CMatrix& s, const WeylBasis& w, double tol = 1e-10);

}  // namespace schurlab
