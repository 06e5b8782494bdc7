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

#include "schurlab/pontryagin.hpp"

#include <algorithm>
#include <string>

#include "schurlab/errors.hpp"

namespace schurlab {

CMatrix character_multiplier(const DualGroup& dual, int gamma) {
  return mult_operator(dual.base(), dual.table().row(gamma).transpose());
}

WeylBasis weyl_basis(const FiniteGroup& g) {
  DualGroup dual = dual_group(g);
  const int n = g.order();
  WeylBasis w{std::move(dual), {}, CMatrix(n * n, n * n), 0.0};
  for (int gamma = 0; gamma < n; ++gamma) {
    const CMatrix m = character_multiplier(w.dual, gamma);
    for (int r = 0; r < n; ++r) {
      const CMatrix l = left_regular(g, r);
      w.elements.push_back(m * l);
      w.vecs.col(gamma * n + r) = vec(w.elements.back());
      // lambda_r m_gamma = conj<gamma, r> m_gamma lambda_r
      const CMatrix diff = l * m - std::conj(w.dual.character(gamma, r)) * m * l;
      w.commutation_residual = std::max(w.commutation_residual, diff.cwiseAbs().maxCoeff());
    }
  }
  if (numerical_rank(w.vecs) != n * n) throw DegeneracyError("Weyl family does not span B(l2 G)");
  return w;
}

CMatrix vec_map_from_function(int n, const std::function<CMatrix(const CMatrix&)>& f) {
  CMatrix s(n * n, n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) s.col(i + j * n) = vec(f(matrix_unit(n, i, j)));
  }
  return s;
}

CMatrix simultaneous_multiplier(const WeylBasis& w, const CMatrix& u) {
  const int n = w.order();
  if (u.rows() != n || u.cols() != n) throw ShapeError("bisymbol must be |G| x |G|");
  CVector diag(n * n);
  for (int gamma = 0; gamma < n; ++gamma) {
    for (int r = 0; r < n; ++r) diag(gamma * n + r) = u(gamma, r);
  }
  // The Weyl vectors are orthogonal with squared norm n.
  return w.vecs * diag.asDiagonal() * w.vecs.adjoint() / static_cast<double>(n);
}

namespace {

ModuleStructure projection_module(const FdVnAlgebra& alg, const CMatrix& vectors, std::string name) {
  // Column k spans one eigenline; the operator is the orthogonal projection onto it.
  ModuleStructure mod{std::move(name), {}, {}};
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    const CVector v = vectors.col(k);
    mod.left.push_back(CbMap::from_restricted(alg, v * v.adjoint() / v.squaredNorm()));
  }
  return mod;
}

}  // namespace

PontryaginPictures pontryagin_pictures(const WeylBasis& w) {
  const auto& g = w.dual.base();
  const auto& gd = w.dual.group();
  const int n = g.order();
  const GroupAction ta = translation_action(g);
  const GroupAction da = translation_action(gd);
  CrossedProductModel tm = build_crossed_product(ta);
  CrossedProductModel dm = build_crossed_product(da);
  const CMatrix f = w.dual.fourier_unitary();

  CMatrix jt(n * n, n * n);
  CMatrix jd(n * n, n * n);
  for (int r = 0; r < n; ++r) {
    for (int a = 0; a < n; ++a) {
      jt.col(tm.basis_index(r, a)) = vec(CMatrix(matrix_unit(n, a, a) * left_regular(g, r)));
      jd.col(dm.basis_index(r, a)) =
          vec(CMatrix(f.adjoint() * matrix_unit(n, a, a) * f * character_multiplier(w.dual, r)));
    }
  }
  // Characters of G as functions on G are the rows of the table; characters of G^ are its columns.
  LiftedModule tmod = lift_module_action(tm, projection_module(tm.algebra(), w.dual.table().transpose(), "A(G^)"));
  LiftedModule dmod = lift_module_action(dm, projection_module(dm.algebra(), w.dual.table(), "A(G)"));
  return PontryaginPictures{std::move(tm), std::move(dm), std::move(jt), std::move(jd), std::move(tmod),
                            std::move(dmod)};
}

CMatrix translation_picture(const PontryaginPictures& p, const CMatrix& s) {
  return p.j_translation.partialPivLu().solve(s * p.j_translation);
}

CMatrix dual_picture(const PontryaginPictures& p, const CMatrix& s) {
  return p.j_dual.partialPivLu().solve(s * p.j_dual);
}

SimultaneousReport verify_simultaneous(const CMatrix& s, const WeylBasis& w, const PontryaginPictures& p, double tol) {
  const int n = w.order();
  if (s.rows() != n * n || s.cols() != n * n) throw ShapeError("map on B(l2 G) must be n^2 x n^2");
  SimultaneousReport rep;
  const CMatrix st = translation_picture(p, s);
  const CMatrix sd = dual_picture(p, s);
  rep.hs_translation = verify_hs_condition(p.translation, st, tol).residual;
  rep.module_translation = hs_module_check(p.translation, st, p.translation_module, tol).residual;
  rep.hs_dual = verify_hs_condition(p.dual, sd, tol).residual;
  rep.module_dual = hs_module_check(p.dual, sd, p.dual_module, tol).residual;
  rep.flags[0] = rep.hs_translation <= tol;
  rep.flags[1] = rep.module_translation <= tol;
  rep.flags[2] = rep.hs_dual <= tol;
  rep.flags[3] = rep.module_dual <= tol;
  CMatrix d = w.vecs.adjoint() * s * w.vecs / static_cast<double>(n);
  d.diagonal().setZero();
  rep.weyl_offdiagonal = d.cwiseAbs().maxCoeff();
  rep.weyl_diagonal = rep.weyl_offdiagonal <= tol;
  return rep;
}

SimultaneousReport verify_simultaneous(const CMatrix& s, const WeylBasis& w, double tol) {
  return verify_simultaneous(s, w, pontryagin_pictures(w), tol);
}

CMatrix bisymbol_roundtrip(const CMatrix& s, const WeylBasis& w, double tol) {
  const int n = w.order();
  if (s.rows() != n * n || s.cols() != n * n) throw ShapeError("map on B(l2 G) must be n^2 x n^2");
  const CMatrix d = w.vecs.adjoint() * s * w.vecs / static_cast<double>(n);
  CMatrix off = d;
  off.diagonal().setZero();
  const double res = off.cwiseAbs().maxCoeff();
  if (res > tol) throw DomainError("map is not diagonal in the Weyl basis (residual " + std::to_string(res) + ")");
  CMatrix u(n, n);
  for (int gamma = 0; gamma < n; ++gamma) {
    for (int r = 0; r < n; ++r) u(gamma, r) = d(gamma * n + r, gamma * n + r);
  }
  return u;
}

}  // namespace schurlab
