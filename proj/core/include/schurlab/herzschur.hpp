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

// Herz-Schur multipliers of an action. Maps on the crossed product are
// stored as matrices in the span coordinates of CrossedProductModel.

#include <functional>
#include <vector>

#include "schurlab/crossed.hpp"

namespace schurlab {

/// Fiber symbol r -> F(r), each a map on M.
struct HsSymbol {
  std::vector<CbMap> fibers;

  const CbMap& at(int r) const { return fibers[static_cast<std::size_t>(r)]; }
  int size() const { return static_cast<int>(fibers.size()); }
};

HsSymbol identity_hs_symbol(const FdVnAlgebra& alg, int order);
/// F(r) = v(r) id_M
HsSymbol scalar_hs_symbol(const FdVnAlgebra& alg, const CVector& v);
double hs_symbol_distance(const HsSymbol& a, const HsSymbol& b, const FdVnAlgebra& alg);

/// S(pi_alpha(a) lambda~_r) = pi_alpha(F(r)(a)) lambda~_r, as a span-coordinate matrix.
/// Throws DomainError if some F(r) does not preserve M.
CMatrix hs_map(const CrossedProductModel& model, const HsSymbol& f, double tol = 1e-10);

/// Matrix of f on the span; throws DomainError if f leaves the span.
CMatrix span_map_from_function(const CrossedProductModel& model, const std::function<CMatrix(const CMatrix&)>& f,
                               double tol = 1e-10);
CMatrix apply_span_map(const CrossedProductModel& model, const CMatrix& s, const CMatrix& x, double tol = 1e-10);

struct HsCheck {
  bool holds = false;
  double residual = 0.0;
};

/// Residual of pi_dual(S x) = (S (x) id) pi_dual(x) over the span basis, where pi_dual is the dual coaction.
HsCheck verify_hs_condition(const CrossedProductModel& model, const CMatrix& s, double tol = 1e-10);

/// Throws NotHerzSchurError when the condition fails.
HsSymbol extract_hs_symbol(const CrossedProductModel& model, const CMatrix& s, double tol = 1e-10);

/// u * x, scaling the lambda~_r component of x by u(r). Throws DomainError outside the span.
CMatrix falg_star_action(const CrossedProductModel& model, const CVector& u, const CMatrix& x, double tol = 1e-10);

/// Largest residual of S(u * x) - u * S(x) over point masses u and basis elements x.
double star_module_residual(const CrossedProductModel& model, const CMatrix& s);

/// Module operators transported to the span: b . pi_alpha(a) lambda~_r = pi_alpha(b . a) lambda~_r.
struct LiftedModule {
  std::vector<CMatrix> left;
  std::vector<CMatrix> right;
};

/// Throws CompatibilityError when the operators do not commute with the action.
LiftedModule lift_module_action(const CrossedProductModel& model, const ModuleStructure& mod, double tol = 1e-10);

ModuleCheck hs_module_check(const CrossedProductModel& model, const CMatrix& s, const LiftedModule& mod,
                            double tol = 1e-10);

}  // namespace schurlab
