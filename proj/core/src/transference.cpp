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

#include "schurlab/transference.hpp"

#include <algorithm>
#include <string>

#include "schurlab/errors.hpp"

namespace schurlab {

SchurSymbol transfer_symbol(const GroupAction& action, const HsSymbol& f) {
  const auto& g = action.group();
  if (f.size() != g.order()) throw ShapeError("fiber symbol needs one map per group element");
  return make_symbol(g.order(), [&](int s, int t) {
    const int ti = g.inv(t);
    return action.automorphism(ti).compose(f.at(g.mul(t, g.inv(s)))).compose(action.automorphism(t));
  });
}

AmbientMap sbar(const CrossedProductModel& model, const DualityIso& phi, const CMatrix& s) {
  if (s.rows() != model.dim() || s.cols() != model.dim()) throw ShapeError("span map has wrong shape");
  const int n = model.group_order();
  const int side = model.ambient_dim();
  KernelSpace space(model.algebra(), n);
  auto slice_map = [&](const CMatrix& z) {
    return model.element(s * model.checked_coords(z, 1e-8, "sbar slice"));
  };
  CMatrix mat(space.dim(), space.dim());
  for (int k = 0; k < space.dim(); ++k) {
    const CMatrix z = phi.apply(space.basis_element(k));
    const CMatrix lifted = tensor_apply_left(z, side, n, slice_map);
    mat.col(k) = space.checked_coords(phi.inverse(lifted), 1e-8, "sbar");
  }
  return AmbientMap{space, std::move(mat)};
}

AmbientMap sbar(const GroupAction& action, const CMatrix& s) {
  const CrossedProductModel model = build_crossed_product(action);
  const DualityIso phi = takai_phi(action);
  return sbar(model, phi, s);
}

std::vector<CMatrix> second_dual_matrices(const GroupAction& action) {
  const auto& g = action.group();
  KernelSpace space(action.algebra(), g.order());
  std::vector<CMatrix> out;
  for (int r = 0; r < g.order(); ++r) {
    const SparseCMatrix w = to_sparse(kron(action.implementing_unitary(r), right_regular(g, r)), 1e-15);
    const SparseCMatrix wa = w.adjoint();
    out.push_back(ambient_map_from_function(space, [&](const CMatrix& x) {
                    const CMatrix wx = w * x;
                    return CMatrix(wx * wa);
                  }).matrix);
  }
  return out;
}

InvarianceCheck check_invariance(const AmbientMap& r, const GroupAction& action, double tol) {
  if (r.space.points() != action.group().order() || !(r.space.algebra() == action.algebra())) {
    throw ShapeError("map and action live on different spaces");
  }
  InvarianceCheck out;
  for (const auto& b : second_dual_matrices(action)) {
    const SparseCMatrix sb = to_sparse(b, 1e-15);
    const CMatrix comm = sb * r.matrix - CMatrix(r.matrix * sb);
    out.residual = std::max(out.residual, comm.cwiseAbs().maxCoeff());
  }
  out.invariant = out.residual <= tol;
  return out;
}

AmbientMap invariant_average(const AmbientMap& r, const GroupAction& action) {
  std::vector<SparseCMatrix> mats;
  for (const auto& b : second_dual_matrices(action)) mats.push_back(to_sparse(b, 1e-15));
  const auto& g = action.group();
  CMatrix acc = CMatrix::Zero(r.matrix.rows(), r.matrix.cols());
  for (int s = 0; s < g.order(); ++s) {
    const CMatrix left = mats[static_cast<std::size_t>(g.inv(s))] * r.matrix;
    acc += left * mats[static_cast<std::size_t>(s)];
  }
  return AmbientMap{r.space, acc / static_cast<double>(g.order())};
}

double span_preservation_residual(const AmbientMap& r, const CrossedProductModel& model) {
  double worst = 0.0;
  for (int k = 0; k < model.dim(); ++k) {
    double res = 0.0;
    model.coords(r.apply(model.basis_element(k)), &res);
    worst = std::max(worst, res);
  }
  return worst;
}

CMatrix restrict_to_crossed(const AmbientMap& r, const CrossedProductModel& model, double tol) {
  const InvarianceCheck inv = check_invariance(r, model.action(), tol);
  if (!inv.invariant) {
    throw InvarianceViolationError("map does not commute with alpha (x) Ad(rho) (residual " +
                                   std::to_string(inv.residual) + ")");
  }
  const BimoduleReport bim = verify_bimodule(r);
  if (!bim.passes(tol)) {
    throw NotSchurMultiplierError("map is not a Schur multiplier (residual " + std::to_string(bim.diagonal_residual) + ")");
  }
  CMatrix s(model.dim(), model.dim());
  for (int k = 0; k < model.dim(); ++k) {
    double res = 0.0;
    s.col(k) = model.coords(r.apply(model.basis_element(k)), &res);
    if (res > tol) {
      throw InvarianceViolationError("map does not preserve the crossed-product span (residual " +
                                     std::to_string(res) + ")");
    }
  }
  return s;
}

BetaPicture beta_picture(const AmbientMap& s, const FiniteGroup& g, double tol) {
  const auto& alg = s.space.algebra();
  if (s.space.points() != g.order()) throw ShapeError("Schur map is not indexed by the group");
  const BimoduleReport bim = verify_bimodule(s);
  if (!bim.passes(tol)) {
    throw NotSchurMultiplierError("map is not a Schur multiplier (residual " + std::to_string(bim.diagonal_residual) + ")");
  }
  GroupAction beta = beta_action(alg, g);
  CrossedProductModel model = build_crossed_product(beta);
  DualityIso psi = svn_psi(alg, g);
  CMatrix st(model.dim(), model.dim());
  for (int k = 0; k < model.dim(); ++k) {
    const CMatrix img = psi.inverse(s.apply(psi.apply(model.basis_element(k))));
    st.col(k) = model.checked_coords(img, 1e-8, "beta_picture");
  }
  const HsCheck check = verify_hs_condition(model, st, tol);
  if (!check.holds) {
    throw NotHerzSchurError("transported map fails the Herz-Schur condition (residual " +
                            std::to_string(check.residual) + ")");
  }
  HsSymbol fibers = extract_hs_symbol(model, st, tol);
  return BetaPicture{std::move(beta), std::move(model), std::move(psi), std::move(st), std::move(fibers),
                     check.residual};
}

HsSymbol beta_fiber_symbol(const SchurSymbol& phi, const FdVnAlgebra& alg, const FiniteGroup& g) {
  const int n = g.order();
  const int m = alg.dim();
  const GroupAction beta = beta_action(alg, g);
  HsSymbol out;
  for (int r = 0; r < n; ++r) {
    CMatrix restricted = CMatrix::Zero(m * n, m * n);
    for (int s = 0; s < n; ++s) {
      restricted.block(s * m, s * m, m, m) = phi.at(g.mul(g.inv(r), s), s).restricted(alg);
    }
    out.fibers.push_back(CbMap::from_restricted(beta.algebra(), restricted));
  }
  return out;
}

}  // namespace schurlab
