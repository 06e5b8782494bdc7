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

#include "schurlab/fdvn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "schurlab/errors.hpp"

namespace schurlab {

// ---------------------------------------------------------------------------
// FdVnAlgebra

FdVnAlgebra::FdVnAlgebra(std::vector<int> blocks, int dim_cap) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InputError("algebra needs at least one block");
  for (int d : blocks_) {
    if (d < 1) throw InputError("block dimensions must be >= 1");
  }
  total_ = std::accumulate(blocks_.begin(), blocks_.end(), 0);
  if (total_ > dim_cap) {
    throw SizeError("algebra dimension " + std::to_string(total_) + " exceeds cap " + std::to_string(dim_cap));
  }
  index_.assign(static_cast<std::size_t>(total_ * total_), -1);
  int off = 0;
  for (int d : blocks_) {
    offsets_.push_back(off);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        index_[static_cast<std::size_t>((off + i) * total_ + off + j)] = static_cast<int>(positions_.size());
        positions_.emplace_back(off + i, off + j);
      }
    }
    off += d;
  }
}

FdVnAlgebra make_algebra(std::vector<int> blocks, int dim_cap) { return FdVnAlgebra(std::move(blocks), dim_cap); }

CMatrix FdVnAlgebra::basis_element(int k) const {
  const auto [i, j] = position(k);
  return matrix_unit(total_, i, j);
}

CVector FdVnAlgebra::coords(const CMatrix& x, double* residual) const {
  if (x.rows() != total_ || x.cols() != total_) throw ShapeError("FdVnAlgebra::coords: shape mismatch");
  CVector c(dim());
  for (int k = 0; k < dim(); ++k) c(k) = x(positions_[static_cast<std::size_t>(k)].first, positions_[static_cast<std::size_t>(k)].second);
  if (residual) {
    double r2 = 0.0;
    for (int i = 0; i < total_; ++i) {
      for (int j = 0; j < total_; ++j) {
        if (index_of(i, j) < 0) r2 += std::norm(x(i, j));
      }
    }
    *residual = std::sqrt(r2);
  }
  return c;
}

CMatrix FdVnAlgebra::element(const CVector& c) const {
  if (c.size() != dim()) throw ShapeError("FdVnAlgebra::element: coordinate length mismatch");
  CMatrix x = CMatrix::Zero(total_, total_);
  for (int k = 0; k < dim(); ++k) x(positions_[static_cast<std::size_t>(k)].first, positions_[static_cast<std::size_t>(k)].second) = c(k);
  return x;
}

bool FdVnAlgebra::contains(const CMatrix& x, double tol) const {
  if (x.rows() != total_ || x.cols() != total_) return false;
  double res = 0.0;
  coords(x, &res);
  return res <= tol;
}

void FdVnAlgebra::require_member(const CMatrix& x, double tol, const char* what) const {
  if (x.rows() != total_ || x.cols() != total_) {
    throw ShapeError(std::string(what) + ": matrix is not " + std::to_string(total_) + "x" + std::to_string(total_));
  }
  double res = 0.0;
  coords(x, &res);
  if (res > tol) throw DomainError(std::string(what) + ": element lies outside the algebra (residual " + std::to_string(res) + ")");
}

double FdVnAlgebra::closure_residual() const {
  double worst = 0.0;
  for (const auto& [p, q] : positions_) {
    if (index_of(q, p) < 0) worst = 1.0;
    for (const auto& [r, s] : positions_) {
      if (q == r && index_of(p, s) < 0) worst = 1.0;
    }
  }
  return worst;
}

CMatrix FdVnAlgebra::block_permutation_matrix(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != num_blocks()) throw InputError("block permutation has wrong length");
  std::vector<char> seen(perm.size(), 0);
  for (int b = 0; b < num_blocks(); ++b) {
    const int t = perm[static_cast<std::size_t>(b)];
    if (t < 0 || t >= num_blocks() || seen[static_cast<std::size_t>(t)]) throw InputError("block permutation is not a permutation");
    seen[static_cast<std::size_t>(t)] = 1;
    if (blocks_[static_cast<std::size_t>(t)] != blocks_[static_cast<std::size_t>(b)]) {
      throw InputError("block permutation maps block " + std::to_string(b) + " onto a block of different size");
    }
  }
  CMatrix p = CMatrix::Zero(total_, total_);
  for (int b = 0; b < num_blocks(); ++b) {
    const int t = perm[static_cast<std::size_t>(b)];
    for (int i = 0; i < blocks_[static_cast<std::size_t>(b)]; ++i) p(block_offset(t) + i, block_offset(b) + i) = 1.0;
  }
  return p;
}

// ---------------------------------------------------------------------------
// CbMap

CbMap::CbMap(int d, CMatrix superop) : d_(d), superop_(std::move(superop)) {
  if (superop_.rows() != d * d || superop_.cols() != d * d) throw ShapeError("CbMap: superoperator must be D^2 x D^2");
}

CbMap CbMap::identity(int d) { return CbMap(d, CMatrix::Identity(d * d, d * d)); }
CbMap CbMap::zero(int d) { return CbMap(d, CMatrix::Zero(d * d, d * d)); }
CbMap CbMap::scalar(int d, cplx c) { return CbMap(d, c * CMatrix::Identity(d * d, d * d)); }

CbMap CbMap::transpose(int d) {
  CMatrix l = CMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) l(i + j * d, j + i * d) = 1.0;
  }
  return CbMap(d, std::move(l));
}

CbMap CbMap::conjugation(const CMatrix& u) { return from_kraus({u}, {u}); }

CbMap CbMap::from_kraus(const std::vector<CMatrix>& left, const std::vector<CMatrix>& right) {
  if (left.size() != right.size() || left.empty()) throw ShapeError("from_kraus: need equally many left and right operators");
  const auto d = left.front().rows();
  CMatrix l = CMatrix::Zero(d * d, d * d);
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i].rows() != d || left[i].cols() != d || right[i].rows() != d || right[i].cols() != d) {
      throw ShapeError("from_kraus: operators must all be " + std::to_string(d) + "x" + std::to_string(d));
    }
    // vec(L X R^*) = (conj(R) (x) L) vec(X)
    l += kron(CMatrix(right[i].conjugate()), left[i]);
  }
  return CbMap(static_cast<int>(d), std::move(l));
}

CbMap CbMap::from_restricted(const FdVnAlgebra& alg, const CMatrix& restricted) {
  const int d = alg.total_dim();
  if (restricted.rows() != alg.dim() || restricted.cols() != alg.dim()) throw ShapeError("from_restricted: shape mismatch");
  CMatrix l = CMatrix::Zero(d * d, d * d);
  for (int k = 0; k < alg.dim(); ++k) {
    const auto [pk, qk] = alg.position(k);
    for (int i = 0; i < alg.dim(); ++i) {
      const auto [pi, qi] = alg.position(i);
      l(pk + qk * d, pi + qi * d) = restricted(k, i);
    }
  }
  return CbMap(d, std::move(l));
}

CMatrix CbMap::apply(const CMatrix& x) const {
  if (x.rows() != d_ || x.cols() != d_) throw ShapeError("CbMap::apply: shape mismatch");
  return unvec(superop_ * vec(x), d_, d_);
}

CbMap CbMap::compose(const CbMap& other) const {
  if (other.d_ != d_) throw ShapeError("CbMap::compose: dimension mismatch");
  return CbMap(d_, superop_ * other.superop_);
}

CbMap CbMap::operator+(const CbMap& other) const {
  if (other.d_ != d_) throw ShapeError("CbMap: dimension mismatch");
  return CbMap(d_, superop_ + other.superop_);
}

CbMap CbMap::operator-(const CbMap& other) const {
  if (other.d_ != d_) throw ShapeError("CbMap: dimension mismatch");
  return CbMap(d_, superop_ - other.superop_);
}

CbMap CbMap::operator*(cplx c) const { return CbMap(d_, c * superop_); }

CMatrix CbMap::choi() const { return choi_from_superoperator(superop_, d_); }

bool CbMap::is_completely_positive(double tol) const { return min_hermitian_eigenvalue(choi()) >= -tol; }

CMatrix CbMap::restricted(const FdVnAlgebra& alg) const {
  const int d = alg.total_dim();
  if (d != d_) throw ShapeError("CbMap::restricted: algebra dimension mismatch");
  CMatrix r(alg.dim(), alg.dim());
  for (int k = 0; k < alg.dim(); ++k) {
    const auto [pk, qk] = alg.position(k);
    for (int i = 0; i < alg.dim(); ++i) {
      const auto [pi, qi] = alg.position(i);
      r(k, i) = superop_(pk + qk * d, pi + qi * d);
    }
  }
  return r;
}

double CbMap::preservation_residual(const FdVnAlgebra& alg) const {
  const int d = alg.total_dim();
  if (d != d_) throw ShapeError("CbMap::preservation_residual: algebra dimension mismatch");
  double worst = 0.0;
  for (int i = 0; i < alg.dim(); ++i) {
    const auto [pi, qi] = alg.position(i);
    const auto col = superop_.col(pi + qi * d);
    for (int p = 0; p < d; ++p) {
      for (int q = 0; q < d; ++q) {
        if (alg.index_of(p, q) < 0) worst = std::max(worst, std::abs(col(p + q * d)));
      }
    }
  }
  return worst;
}

CMatrix choi(const CbMap& map) { return map.choi(); }

CbMap cbmap_from_kraus(const std::vector<CMatrix>& left, const std::vector<CMatrix>& right) {
  return CbMap::from_kraus(left, right);
}

// ---------------------------------------------------------------------------
// Modules

namespace {

double span_closure_residual(const std::vector<CbMap>& ops, const FdVnAlgebra& alg) {
  if (ops.empty()) return 0.0;
  const int m = alg.dim();
  CMatrix stacked(m * m, static_cast<Eigen::Index>(ops.size()));
  std::vector<CMatrix> restricted;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    restricted.push_back(ops[k].restricted(alg));
    stacked.col(static_cast<Eigen::Index>(k)) = vec(restricted.back());
  }
  const auto qr = stacked.colPivHouseholderQr();
  double worst = 0.0;
  for (const auto& a : restricted) {
    for (const auto& b : restricted) {
      const CVector target = vec(a * b);
      const CVector fit = stacked * qr.solve(target);
      worst = std::max(worst, (target - fit).norm());
    }
  }
  return worst;
}

double commutation_residual(const CbMap& a, const CbMap& b, const FdVnAlgebra& alg) {
  const CMatrix diff = a.superoperator() * b.superoperator() - b.superoperator() * a.superoperator();
  const int d = alg.total_dim();
  double worst = 0.0;
  for (int i = 0; i < alg.dim(); ++i) {
    const auto [p, q] = alg.position(i);
    worst = std::max(worst, diff.col(p + q * d).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

double ModuleStructure::associativity_residual(const FdVnAlgebra& alg) const {
  return std::max(span_closure_residual(left, alg), span_closure_residual(right, alg));
}

ModuleStructure scalar_module(int d) { return ModuleStructure{"scalars", {CbMap::identity(d)}, {}}; }

ModuleStructure left_multiplication_module(const std::vector<CMatrix>& acting, std::string name) {
  ModuleStructure mod{std::move(name), {}, {}};
  for (const auto& b : acting) {
    const auto d = b.rows();
    mod.left.push_back(CbMap::from_kraus({b}, {CMatrix::Identity(d, d)}));
  }
  return mod;
}

ModuleStructure bimodule_multiplication(const std::vector<CMatrix>& acting, std::string name) {
  ModuleStructure mod = left_multiplication_module(acting, std::move(name));
  for (const auto& b : acting) {
    const auto d = b.rows();
    // a -> a b = I a (b^*)^*
    mod.right.push_back(CbMap::from_kraus({CMatrix::Identity(d, d)}, {CMatrix(b.adjoint())}));
  }
  return mod;
}

ModuleCheck is_module_map(const CbMap& map, const ModuleStructure& mod, const FdVnAlgebra& alg, double tol) {
  double worst = 0.0;
  for (const auto& op : mod.left) worst = std::max(worst, commutation_residual(map, op, alg));
  for (const auto& op : mod.right) worst = std::max(worst, commutation_residual(map, op, alg));
  return {worst <= tol, worst};
}

// ---------------------------------------------------------------------------
// Actions

CMatrix GroupAction::apply(int r, const CMatrix& a) const {
  group_.check_element(r);
  const auto& w = implementing_[static_cast<std::size_t>(r)];
  return w * a * w.adjoint();
}

bool GroupAction::is_trivial(double tol) const {
  const CMatrix id = CMatrix::Identity(algebra_.dim(), algebra_.dim());
  for (const auto& a : autos_) {
    if ((a.restricted(algebra_) - id).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

GroupAction make_action(const FiniteGroup& g, const FdVnAlgebra& alg, const std::vector<CMatrix>& unitaries,
                        const std::vector<std::vector<int>>& block_perms, double tol, int group_cap) {
  const int n = g.order();
  const int d = alg.total_dim();
  if (n > group_cap) throw SizeError("group order " + std::to_string(n) + " exceeds cap " + std::to_string(group_cap));
  if (!unitaries.empty() && static_cast<int>(unitaries.size()) != n) {
    throw InputError("action needs one unitary per group element");
  }
  if (!block_perms.empty() && static_cast<int>(block_perms.size()) != n) {
    throw InputError("action needs one block permutation per group element");
  }
  GroupAction act(g, alg);
  std::vector<int> id_perm(static_cast<std::size_t>(alg.num_blocks()));
  std::iota(id_perm.begin(), id_perm.end(), 0);
  for (int r = 0; r < n; ++r) {
    CMatrix u = unitaries.empty() ? CMatrix::Identity(d, d) : unitaries[static_cast<std::size_t>(r)];
    if (u.rows() != d || u.cols() != d) throw ShapeError("action unitary " + std::to_string(r) + " has wrong shape");
    if (!all_finite(u)) throw InputError("action unitary " + std::to_string(r) + " has non-finite entries");
    if ((u.adjoint() * u - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol) {
      throw InputError("action unitary " + std::to_string(r) + " is not unitary");
    }
    const auto& perm = block_perms.empty() ? id_perm : block_perms[static_cast<std::size_t>(r)];
    CMatrix w = u * alg.block_permutation_matrix(perm);
    CbMap aut = CbMap::conjugation(w);
    const double leak = aut.preservation_residual(alg);
    if (leak > tol) {
      throw DomainError("automorphism for element " + std::to_string(r) + " does not preserve the algebra (residual " +
                        std::to_string(leak) + ")");
    }
    act.implementing_.push_back(std::move(w));
    act.perms_.push_back(perm);
    act.autos_.push_back(std::move(aut));
  }

  std::vector<CMatrix> restricted;
  for (const auto& a : act.autos_) restricted.push_back(a.restricted(alg));
  const CMatrix id = CMatrix::Identity(alg.dim(), alg.dim());
  if ((restricted[0] - id).cwiseAbs().maxCoeff() > tol) throw ActionError("alpha_0 is not the identity", 0, 0);

  // *-automorphism: unital, adjoint preserving, multiplicative on nonzero unit products.
  for (int r = 0; r < n; ++r) {
    const CMatrix one = CMatrix::Identity(d, d);
    if ((act.apply(r, one) - one).cwiseAbs().maxCoeff() > tol) throw ActionError("alpha_r is not unital", r, r);
    for (int i = 0; i < alg.dim(); ++i) {
      const CMatrix ai = alg.basis_element(i);
      const CMatrix img = act.apply(r, ai);
      if ((act.apply(r, CMatrix(ai.adjoint())) - img.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw ActionError("alpha_r does not preserve adjoints", r, r);
      }
      for (int j = 0; j < alg.dim(); ++j) {
        if (alg.position(i).second != alg.position(j).first) continue;
        const CMatrix aj = alg.basis_element(j);
        if ((act.apply(r, CMatrix(ai * aj)) - img * act.apply(r, aj)).cwiseAbs().maxCoeff() > tol) {
          throw ActionError("alpha_r is not multiplicative", r, r);
        }
      }
    }
  }

  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      const double res = (restricted[static_cast<std::size_t>(r)] * restricted[static_cast<std::size_t>(s)] -
                          restricted[static_cast<std::size_t>(g.mul(r, s))]).cwiseAbs().maxCoeff();
      if (res > tol) {
        throw ActionError("homomorphism property fails: alpha_" + std::to_string(r) + " alpha_" + std::to_string(s) +
                              " != alpha_" + std::to_string(g.mul(r, s)),
                          r, s);
      }
    }
  }
  return act;
}

GroupAction trivial_action(const FiniteGroup& g, const FdVnAlgebra& alg) { return make_action(g, alg, {}, {}); }

GroupAction translation_action(const FiniteGroup& g) {
  const int n = g.order();
  FdVnAlgebra alg(std::vector<int>(static_cast<std::size_t>(n), 1), std::max(kDefaultAlgebraDimCap, n));
  std::vector<std::vector<int>> perms(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) perms[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = g.mul(r, s);
  }
  return make_action(g, alg, {}, perms);
}

std::vector<CMatrix> fixed_point_basis(const GroupAction& action, double tol) {
  const auto& alg = action.algebra();
  const int m = alg.dim();
  const int n = action.group().order();
  CMatrix stacked(static_cast<Eigen::Index>(n) * m, m);
  for (int r = 0; r < n; ++r) {
    stacked.block(static_cast<Eigen::Index>(r) * m, 0, m, m) =
        action.automorphism(r).restricted(alg) - CMatrix::Identity(m, m);
  }
  const CMatrix ns = null_space(stacked, tol);
  std::vector<CMatrix> basis;
  for (Eigen::Index k = 0; k < ns.cols(); ++k) basis.push_back(alg.element(ns.col(k)));
  return basis;
}

std::vector<CMatrix> relative_commutant(const FdVnAlgebra& alg, const std::vector<CMatrix>& generators, double tol) {
  const int m = alg.dim();
  const int d = alg.total_dim();
  CMatrix stacked = CMatrix::Zero(static_cast<Eigen::Index>(generators.size()) * d * d, m);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (int i = 0; i < m; ++i) {
      const CMatrix a = alg.basis_element(i);
      stacked.block(static_cast<Eigen::Index>(g) * d * d, i, d * d, 1) = vec(CMatrix(a * generators[g] - generators[g] * a));
    }
  }
  const CMatrix ns = null_space(stacked, tol);
  std::vector<CMatrix> basis;
  for (Eigen::Index k = 0; k < ns.cols(); ++k) basis.push_back(alg.element(ns.col(k)));
  return basis;
}

ModuleStructure fixed_point_module(const GroupAction& action) {
  return left_multiplication_module(fixed_point_basis(action), "fixed_points");
}

double module_compatibility_residual(const GroupAction& action, const ModuleStructure& mod) {
  double worst = 0.0;
  for (int r = 0; r < action.group().order(); ++r) {
    for (const auto& op : mod.left) worst = std::max(worst, commutation_residual(op, action.automorphism(r), action.algebra()));
    for (const auto& op : mod.right) worst = std::max(worst, commutation_residual(op, action.automorphism(r), action.algebra()));
  }
  return worst;
}

}  // namespace schurlab
