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

#include "schurlab/crossed.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "schurlab/errors.hpp"
#include "schurlab/random.hpp"

namespace schurlab {

namespace {

// Block (s, t) of an operator on C^d (x) C^n with index p * n + s.
CMatrix get_block(const CMatrix& x, int d, int n, int s, int t) {
  CMatrix out(d, d);
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) out(p, q) = x(p * n + s, q * n + t);
  }
  return out;
}

void put_block(CMatrix& x, int d, int n, int s, int t, const CMatrix& b) {
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) x(p * n + s, q * n + t) = b(p, q);
  }
}

constexpr double kMembershipTol = 1e-8;

}  // namespace

CMatrix pi_alpha(const GroupAction& action, const CMatrix& a, double tol) {
  const auto& alg = action.algebra();
  const auto& g = action.group();
  alg.require_member(a, tol, "pi_alpha");
  const int d = alg.total_dim();
  const int n = g.order();
  CMatrix out = CMatrix::Zero(d * n, d * n);
  for (int s = 0; s < n; ++s) put_block(out, d, n, s, s, action.apply(g.inv(s), a));
  return out;
}

CMatrix lambda_tilde(const GroupAction& action, int r) {
  return kron(identity(action.algebra().total_dim()), left_regular(action.group(), r));
}

CMatrix mult_tilde(const GroupAction& action, const CVector& f) {
  return kron(identity(action.algebra().total_dim()), mult_operator(action.group(), f));
}

// ---------------------------------------------------------------------------
// CrossedProductModel

CMatrix CrossedProductModel::basis_element(int k) const {
  if (k < 0 || k >= dim()) throw InputError("crossed-product basis index out of range");
  CVector c = CVector::Zero(dim());
  c(k) = 1.0;
  return element(c);
}

CMatrix CrossedProductModel::element(const CVector& c) const {
  if (c.size() != dim()) throw ShapeError("CrossedProductModel::element: coordinate length mismatch");
  const auto& g = group();
  const int d = algebra().total_dim();
  const int n = group_order();
  const int m = base_dim();
  CMatrix out = CMatrix::Zero(d * n, d * n);
  for (int r = 0; r < n; ++r) {
    const CVector cr = c.segment(static_cast<Eigen::Index>(r) * m, m);
    if (cr.isZero(0.0)) continue;
    for (int s = 0; s < n; ++s) {
      // pi(a) lambda~_r has block (s, r^{-1} s) equal to alpha_{s^{-1}}(a).
      const CMatrix blk = algebra().element(alpha_inv_[static_cast<std::size_t>(s)] * cr);
      const int t = g.mul(g.inv(r), s);
      CMatrix cur = get_block(out, d, n, s, t);
      put_block(out, d, n, s, t, cur + blk);
    }
  }
  return out;
}

CVector CrossedProductModel::coords(const CMatrix& x, double* residual) const {
  const int d = algebra().total_dim();
  const int n = group_order();
  const int m = base_dim();
  if (x.rows() != d * n || x.cols() != d * n) throw ShapeError("CrossedProductModel::coords: shape mismatch");
  CVector c(dim());
  for (int r = 0; r < n; ++r) {
    c.segment(static_cast<Eigen::Index>(r) * m, m) = algebra().coords(get_block(x, d, n, 0, group().inv(r)));
  }
  if (residual) *residual = (x - element(c)).norm();
  return c;
}

CVector CrossedProductModel::checked_coords(const CMatrix& x, double tol, const char* what) const {
  double res = 0.0;
  CVector c = coords(x, &res);
  if (res > tol * std::max(1.0, x.norm())) {
    throw DomainError(std::string(what) + ": operator lies outside the crossed-product span (residual " +
                      std::to_string(res) + ")");
  }
  return c;
}

CrossedProductModel build_crossed_product(const GroupAction& action, double tol) {
  CrossedProductModel model(action);
  const auto& g = action.group();
  for (int s = 0; s < g.order(); ++s) {
    model.alpha_inv_.push_back(action.automorphism(g.inv(s)).restricted(action.algebra()));
  }
  const int dim = model.dim();

  // The coordinate map is a left inverse of the basis map, which certifies independence.
  for (int k = 0; k < dim; ++k) {
    double res = 0.0;
    CVector c = model.coords(model.basis_element(k), &res);
    c(k) -= 1.0;
    if (res > tol || c.cwiseAbs().maxCoeff() > tol) {
      throw DegeneracyError("crossed-product span basis is not independent at index " + std::to_string(k));
    }
  }

  // Closure under products and adjoints, on all pairs or a deterministic sample.
  std::vector<CMatrix> basis;
  for (int k = 0; k < dim; ++k) basis.push_back(model.basis_element(k));
  const long long pairs = static_cast<long long>(dim) * dim;
  const long long budget = 4096;
  Rng rng(0xC105ULL);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  double worst = 0.0;
  for (long long p = 0; p < std::min(pairs, budget); ++p) {
    const int i = pairs <= budget ? static_cast<int>(p / dim) : pick(rng);
    const int j = pairs <= budget ? static_cast<int>(p % dim) : pick(rng);
    double res = 0.0;
    model.coords(basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)], &res);
    worst = std::max(worst, res);
  }
  for (const auto& b : basis) {
    double res = 0.0;
    model.coords(CMatrix(b.adjoint()), &res);
    worst = std::max(worst, res);
  }
  model.closure_ = worst;
  if (worst > tol) throw DegeneracyError("crossed-product span is not closed (residual " + std::to_string(worst) + ")");
  return model;
}

CMatrix dual_coaction(const CrossedProductModel& model, const CMatrix& x, double tol) {
  const CVector c = model.checked_coords(x, tol, "dual_coaction");
  const int n = model.group_order();
  const int m = model.base_dim();
  const int side = model.ambient_dim();
  CMatrix out = CMatrix::Zero(side * n, side * n);
  for (int r = 0; r < n; ++r) {
    CVector cr = CVector::Zero(model.dim());
    cr.segment(static_cast<Eigen::Index>(r) * m, m) = c.segment(static_cast<Eigen::Index>(r) * m, m);
    if (cr.isZero(0.0)) continue;
    out += kron(model.element(cr), left_regular(model.group(), r));
  }
  return out;
}

GroupAction second_dual_action(const GroupAction& action) {
  const auto& alg = action.algebra();
  const auto& g = action.group();
  const int n = g.order();
  std::vector<int> blocks;
  for (int b : alg.blocks()) blocks.push_back(b * n);
  FdVnAlgebra big(blocks, alg.total_dim() * n);
  std::vector<CMatrix> unitaries;
  std::vector<std::vector<int>> perms;
  for (int r = 0; r < n; ++r) {
    const CMatrix u = action.implementing_unitary(r) * alg.block_permutation_matrix(action.block_perm(r)).adjoint();
    unitaries.push_back(kron(u, right_regular(g, r)));
    perms.push_back(action.block_perm(r));
  }
  return make_action(g, big, unitaries, perms);
}

CMatrix swap_unitary(int n, int d) {
  CMatrix u = CMatrix::Zero(n * d, n * d);
  for (int s = 0; s < n; ++s) {
    for (int i = 0; i < d; ++i) u(i * n + s, s * d + i) = 1.0;
  }
  return u;
}

// ---------------------------------------------------------------------------
// DualityIso

DualityIso::DualityIso(Kind kind, int domain_dim, int codomain_dim, const std::vector<GeneratorGroup>& groups,
                       int required_rank, int max_len, double tol)
    : kind_(kind), tol_(tol) {
  for (const auto& grp : groups) {
    if (grp.domain.size() != grp.image.size()) throw ShapeError("generator group " + grp.label + " has mismatched images");
  }
  IndependentSetBuilder builder(tol);
  std::vector<SparseCMatrix> dom_words;
  std::vector<SparseCMatrix> img_words;

  SparseCMatrix id_dom = to_sparse(identity(domain_dim));
  SparseCMatrix id_img = to_sparse(identity(codomain_dim));
  std::function<void(std::size_t, int, const SparseCMatrix&, const SparseCMatrix&, const std::string&)> walk;
  walk = [&](std::size_t gi, int letters, const SparseCMatrix& dw, const SparseCMatrix& iw, const std::string& label) {
    if (builder.size() >= required_rank) return;
    if (gi == groups.size()) {
      if (builder.add(dw)) {
        dom_words.push_back(dw);
        img_words.push_back(iw);
        words_.push_back(label.empty() ? "1" : label);
      }
      return;
    }
    walk(gi + 1, letters, dw, iw, label);
    if (letters >= max_len) return;
    const auto& grp = groups[gi];
    for (std::size_t k = 0; k < grp.domain.size(); ++k) {
      SparseCMatrix nd = dw * grp.domain[k];
      SparseCMatrix ni = iw * grp.image[k];
      nd.prune(cplx(0.0), 1e-14);
      ni.prune(cplx(0.0), 1e-14);
      walk(gi + 1, letters + 1, nd, ni, (label.empty() ? "" : label + ".") + grp.label + "(" + std::to_string(k) + ")");
      if (builder.size() >= required_rank) return;
    }
  };
  walk(0, 0, id_dom, id_img, "");

  if (builder.size() < required_rank) {
    throw ExtensionError("word basis spans " + std::to_string(builder.size()) + " of " + std::to_string(required_rank) +
                             " required dimensions",
                         builder.size(), required_rank);
  }
  IndependentSetBuilder image_check(tol);
  for (const auto& w : img_words) image_check.add(w);
  if (image_check.size() < required_rank) {
    throw ExtensionError("generator images of the word basis are dependent (rank " +
                             std::to_string(image_check.size()) + " of " + std::to_string(required_rank) + ")",
                         image_check.size(), required_rank);
  }
  domain_ = SpanBasis(domain_dim, std::move(dom_words), tol);
  codomain_ = SpanBasis(codomain_dim, std::move(img_words), tol);
}

CMatrix DualityIso::apply(const CMatrix& x) const {
  double res = 0.0;
  const CVector c = domain_.coords(x, &res);
  if (res > kMembershipTol * std::max(1.0, x.norm())) {
    throw DomainError("duality map: argument outside the domain span (residual " + std::to_string(res) + ")");
  }
  return codomain_.combine_dense(c);
}

CMatrix DualityIso::inverse(const CMatrix& y) const {
  double res = 0.0;
  const CVector c = codomain_.coords(y, &res);
  if (res > kMembershipTol * std::max(1.0, y.norm())) {
    throw DomainError("duality map inverse: argument outside the image span (residual " + std::to_string(res) + ")");
  }
  return domain_.combine_dense(c);
}

double IsoReport::worst() const { return std::max({unital, adjoint, multiplicative, roundtrip}); }

IsoReport verify_duality_iso(const DualityIso& iso, int samples, unsigned long long seed) {
  IsoReport rep;
  Rng rng(seed);
  const auto& dom = iso.domain_span();
  const int k = dom.size();
  std::uniform_int_distribution<int> pick(0, k - 1);

  const CMatrix one = identity(iso.domain_dim());
  rep.unital = (iso.apply(one) - identity(iso.codomain_dim())).norm();

  auto sample = [&](int t) -> CMatrix {
    if (t % 2 == 0) return CMatrix(dom.element(pick(rng)));
    CMatrix x = dom.combine_dense(random_vector(k, rng));
    return x / x.norm();
  };
  for (int t = 0; t < samples; ++t) {
    const CMatrix x = sample(t);
    const CMatrix y = sample(t);
    const CMatrix fx = iso.apply(x);
    const CMatrix fy = iso.apply(y);
    rep.multiplicative = std::max(rep.multiplicative, (iso.apply(CMatrix(x * y)) - fx * fy).norm());
    rep.adjoint = std::max(rep.adjoint, (iso.apply(CMatrix(x.adjoint())) - fx.adjoint()).norm());
    rep.roundtrip = std::max(rep.roundtrip, (iso.inverse(fx) - x).norm());
  }
  rep.bijective = iso.domain_span().size() == iso.codomain_span().size();
  return rep;
}

DualityIso takai_phi(const GroupAction& action, int max_len) {
  const auto& alg = action.algebra();
  const auto& g = action.group();
  const int d = alg.total_dim();
  const int n = g.order();
  const CMatrix id_n = identity(n);

  DualityIso::GeneratorGroup pi{"pi", {}, {}};
  for (int i = 0; i < alg.dim(); ++i) {
    const CMatrix p = pi_alpha(action, alg.basis_element(i));
    pi.domain.push_back(to_sparse(p));
    pi.image.push_back(to_sparse(kron(p, id_n)));
  }
  DualityIso::GeneratorGroup mult{"m", {}, {}};
  for (int s = 0; s < n; ++s) {
    const CMatrix e = matrix_unit(n, s, s);
    mult.domain.push_back(to_sparse(kron(identity(d), e)));
    mult.image.push_back(to_sparse(kron(identity(d * n), e)));
  }
  DualityIso::GeneratorGroup lam{"lambda", {}, {}};
  for (int r = 0; r < n; ++r) {
    const CMatrix l = left_regular(g, r);
    lam.domain.push_back(to_sparse(kron(identity(d), l)));
    lam.image.push_back(to_sparse(kron(kron(identity(d), l), l)));
  }
  return DualityIso(DualityIso::Kind::Phi, d * n, d * n * n, {pi, mult, lam}, alg.dim() * n * n, max_len);
}

GroupAction beta_action(const FdVnAlgebra& alg, const FiniteGroup& g) {
  const int n = g.order();
  const int nb = alg.num_blocks();
  std::vector<int> blocks;
  for (int s = 0; s < n; ++s) blocks.insert(blocks.end(), alg.blocks().begin(), alg.blocks().end());
  FdVnAlgebra big(blocks, alg.total_dim() * n);
  std::vector<std::vector<int>> perms(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      for (int b = 0; b < nb; ++b) perms[static_cast<std::size_t>(r)].push_back(g.mul(r, s) * nb + b);
    }
  }
  return make_action(g, big, {}, perms);
}

DualityIso svn_psi(const FdVnAlgebra& alg, const FiniteGroup& g, int max_len) {
  const GroupAction beta = beta_action(alg, g);
  const auto& big = beta.algebra();
  const int d = alg.total_dim();
  const int n = g.order();
  const CMatrix u = swap_unitary(n, d);

  DualityIso::GeneratorGroup pi{"pi", {}, {}};
  for (int k = 0; k < big.dim(); ++k) {
    const CMatrix b = big.basis_element(k);
    pi.domain.push_back(to_sparse(pi_alpha(beta, b)));
    pi.image.push_back(to_sparse(CMatrix(u * b * u.adjoint())));
  }
  DualityIso::GeneratorGroup lam{"lambda", {}, {}};
  for (int r = 0; r < n; ++r) {
    lam.domain.push_back(to_sparse(lambda_tilde(beta, r)));
    lam.image.push_back(to_sparse(kron(identity(d), left_regular(g, r))));
  }
  return DualityIso(DualityIso::Kind::Psi, d * n * n, d * n, {pi, lam}, big.dim() * n, max_len);
}

}  // namespace schurlab
