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

#include "schurlab/herzschur.hpp"

#include <algorithm>
#include <string>

#include "schurlab/errors.hpp"

namespace schurlab {

HsSymbol identity_hs_symbol(const FdVnAlgebra& alg, int order) {
  return HsSymbol{std::vector<CbMap>(static_cast<std::size_t>(order), CbMap::identity(alg.total_dim()))};
}

HsSymbol scalar_hs_symbol(const FdVnAlgebra& alg, const CVector& v) {
  HsSymbol f;
  for (Eigen::Index r = 0; r < v.size(); ++r) f.fibers.push_back(CbMap::scalar(alg.total_dim(), v(r)));
  return f;
}

double hs_symbol_distance(const HsSymbol& a, const HsSymbol& b, const FdVnAlgebra& alg) {
  if (a.size() != b.size()) throw ShapeError("fiber symbols differ in length");
  double worst = 0.0;
  for (int r = 0; r < a.size(); ++r) {
    worst = std::max(worst, (a.at(r).restricted(alg) - b.at(r).restricted(alg)).cwiseAbs().maxCoeff());
  }
  return worst;
}

CMatrix hs_map(const CrossedProductModel& model, const HsSymbol& f, double tol) {
  const int n = model.group_order();
  const int m = model.base_dim();
  if (f.size() != n) throw ShapeError("fiber symbol needs one map per group element");
  CMatrix s = CMatrix::Zero(model.dim(), model.dim());
  for (int r = 0; r < n; ++r) {
    const double leak = f.at(r).preservation_residual(model.algebra());
    if (leak > tol) throw DomainError("F(" + std::to_string(r) + ") does not preserve the algebra");
    s.block(r * m, r * m, m, m) = f.at(r).restricted(model.algebra());
  }
  return s;
}

CMatrix span_map_from_function(const CrossedProductModel& model, const std::function<CMatrix(const CMatrix&)>& f,
                               double tol) {
  CMatrix s(model.dim(), model.dim());
  for (int k = 0; k < model.dim(); ++k) s.col(k) = model.checked_coords(f(model.basis_element(k)), tol, "span map");
  return s;
}

CMatrix apply_span_map(const CrossedProductModel& model, const CMatrix& s, const CMatrix& x, double tol) {
  return model.element(s * model.checked_coords(x, tol, "apply_span_map"));
}

HsCheck verify_hs_condition(const CrossedProductModel& model, const CMatrix& s, double tol) {
  if (s.rows() != model.dim() || s.cols() != model.dim()) throw ShapeError("span map has wrong shape");
  const int m = model.base_dim();
  HsCheck out;
  for (int k = 0; k < model.dim(); ++k) {
    const int r = k / m;
    const CMatrix sx = model.element(s.col(k));
    const CMatrix lhs = dual_coaction(model, sx);
    const CMatrix rhs = kron(sx, left_regular(model.group(), r));
    out.residual = std::max(out.residual, (lhs - rhs).norm());
  }
  out.holds = out.residual <= tol;
  return out;
}

HsSymbol extract_hs_symbol(const CrossedProductModel& model, const CMatrix& s, double tol) {
  const HsCheck check = verify_hs_condition(model, s, tol);
  if (!check.holds) {
    throw NotHerzSchurError("map is not a Herz-Schur multiplier (residual " + std::to_string(check.residual) + ")");
  }
  const int m = model.base_dim();
  HsSymbol f;
  for (int r = 0; r < model.group_order(); ++r) {
    f.fibers.push_back(CbMap::from_restricted(model.algebra(), s.block(r * m, r * m, m, m)));
  }
  return f;
}

CMatrix falg_star_action(const CrossedProductModel& model, const CVector& u, const CMatrix& x, double tol) {
  if (u.size() != model.group_order()) throw ShapeError("function on G has wrong length");
  CVector c = model.checked_coords(x, tol, "falg_star_action");
  const int m = model.base_dim();
  for (int r = 0; r < model.group_order(); ++r) c.segment(r * m, m) *= u(r);
  return model.element(c);
}

double star_module_residual(const CrossedProductModel& model, const CMatrix& s) {
  const int n = model.group_order();
  const int m = model.base_dim();
  double worst = 0.0;
  for (int r = 0; r < n; ++r) {
    // Point mass u = delta_r acts as the coordinate projection onto fiber r.
    CMatrix proj = CMatrix::Zero(model.dim(), model.dim());
    proj.block(r * m, r * m, m, m).setIdentity();
    worst = std::max(worst, (s * proj - proj * s).cwiseAbs().maxCoeff());
  }
  return worst;
}

LiftedModule lift_module_action(const CrossedProductModel& model, const ModuleStructure& mod, double tol) {
  const double compat = module_compatibility_residual(model.action(), mod);
  if (compat > tol) {
    throw CompatibilityError("module action does not commute with the group action (residual " +
                             std::to_string(compat) + ")");
  }
  const int m = model.base_dim();
  auto lift = [&](const CbMap& op) {
    const CMatrix r = op.restricted(model.algebra());
    CMatrix out = CMatrix::Zero(model.dim(), model.dim());
    for (int g = 0; g < model.group_order(); ++g) out.block(g * m, g * m, m, m) = r;
    return out;
  };
  LiftedModule out;
  for (const auto& op : mod.left) out.left.push_back(lift(op));
  for (const auto& op : mod.right) out.right.push_back(lift(op));
  return out;
}

ModuleCheck hs_module_check(const CrossedProductModel& model, const CMatrix& s, const LiftedModule& mod, double tol) {
  if (s.rows() != model.dim() || s.cols() != model.dim()) throw ShapeError("span map has wrong shape");
  double worst = 0.0;
  for (const auto& op : mod.left) worst = std::max(worst, (s * op - op * s).cwiseAbs().maxCoeff());
  for (const auto& op : mod.right) worst = std::max(worst, (s * op - op * s).cwiseAbs().maxCoeff());
  return {worst <= tol, worst};
}

}  // namespace schurlab
