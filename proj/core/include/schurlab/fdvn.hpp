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

#include <string>
#include <utility>
#include <vector>

#include "schurlab/groups.hpp"
#include "schurlab/numerics.hpp"

namespace schurlab {

inline constexpr int kDefaultAlgebraDimCap = 16;
inline constexpr int kDefaultGroupOrderCap = 24;

/// Block-diagonal matrix algebra M_{d_1} (+) ... (+) M_{d_k} inside M_D.
///
/// The basis is the family of matrix units of each block, ordered block by
/// block and row-major inside a block. Coordinates are plain gathers.
class FdVnAlgebra {
 public:
  explicit FdVnAlgebra(std::vector<int> blocks, int dim_cap = kDefaultAlgebraDimCap);

  const std::vector<int>& blocks() const { return blocks_; }
  int block_offset(int b) const { return offsets_[static_cast<std::size_t>(b)]; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  /// Side length D of the ambient matrices.
  int total_dim() const { return total_; }
  /// Linear dimension sum d_i^2.
  int dim() const { return static_cast<int>(positions_.size()); }

  const std::pair<int, int>& position(int k) const { return positions_[static_cast<std::size_t>(k)]; }
  /// Index of the matrix unit at (i, j), or -1 outside the block pattern.
  int index_of(int i, int j) const { return index_[static_cast<std::size_t>(i * total_ + j)]; }

  CMatrix basis_element(int k) const;
  CVector coords(const CMatrix& x, double* residual = nullptr) const;
  CMatrix element(const CVector& c) const;
  bool contains(const CMatrix& x, double tol = 1e-10) const;
  /// Throws DomainError when x lies outside the algebra.
  void require_member(const CMatrix& x, double tol, const char* what) const;

  /// Worst violation of closure under products and adjoints, computed exactly on matrix units.
  double closure_residual() const;

  /// Permutation matrix moving block b onto block perm[b]; blocks must have equal size.
  CMatrix block_permutation_matrix(const std::vector<int>& perm) const;

  bool operator==(const FdVnAlgebra& other) const { return blocks_ == other.blocks_; }

 private:
  std::vector<int> blocks_;
  std::vector<int> offsets_;
  int total_ = 0;
  std::vector<std::pair<int, int>> positions_;
  std::vector<int> index_;
};

FdVnAlgebra make_algebra(std::vector<int> blocks, int dim_cap = kDefaultAlgebraDimCap);

/// Linear map on M_D stored as the D^2 x D^2 matrix acting on vec coordinates.
class CbMap {
 public:
  CbMap() = default;
  CbMap(int d, CMatrix superop);

  static CbMap identity(int d);
  static CbMap zero(int d);
  static CbMap scalar(int d, cplx c);
  static CbMap transpose(int d);
  /// X -> u X u^*
  static CbMap conjugation(const CMatrix& u);
  /// X -> sum_i L_i X R_i^*. Throws ShapeError on mismatched shapes.
  static CbMap from_kraus(const std::vector<CMatrix>& left, const std::vector<CMatrix>& right);
  /// Extends a map given in algebra coordinates by zero on the complement of the algebra.
  static CbMap from_restricted(const FdVnAlgebra& alg, const CMatrix& restricted);

  int dim() const { return d_; }
  const CMatrix& superoperator() const { return superop_; }

  CMatrix apply(const CMatrix& x) const;
  /// (this o other)(x) = this(other(x))
  CbMap compose(const CbMap& other) const;
  CbMap operator+(const CbMap& other) const;
  CbMap operator-(const CbMap& other) const;
  CbMap operator*(cplx c) const;

  CMatrix choi() const;
  bool is_completely_positive(double tol = 1e-10) const;

  /// Matrix of the map in the algebra's matrix-unit coordinates.
  CMatrix restricted(const FdVnAlgebra& alg) const;
  /// Largest component of the image of a basis element that leaves the algebra.
  double preservation_residual(const FdVnAlgebra& alg) const;

 private:
  int d_ = 0;
  CMatrix superop_;
};

/// Choi matrix sum_ij E_ij (x) map(E_ij).
CMatrix choi(const CbMap& map);

CbMap cbmap_from_kraus(const std::vector<CMatrix>& left, const std::vector<CMatrix>& right);

/// Module structure of an algebra A on M, given by the operators a -> b.a
/// (and optionally a -> a.b) for b running over a basis of A.
struct ModuleStructure {
  std::string name;
  std::vector<CbMap> left;
  std::vector<CbMap> right;

  /// Residual of closure of the left (and right) operator spans under
  /// composition on the algebra; zero for an honest representation of A.
  double associativity_residual(const FdVnAlgebra& alg) const;
};

ModuleStructure scalar_module(int d);
ModuleStructure left_multiplication_module(const std::vector<CMatrix>& acting, std::string name = "left");
ModuleStructure bimodule_multiplication(const std::vector<CMatrix>& acting, std::string name = "bimodule");

struct ModuleCheck {
  bool is_module_map = false;
  double residual = 0.0;
};

/// Checks map(b.a) = b.map(a) (and the right-handed version) over basis elements of the algebra.
ModuleCheck is_module_map(const CbMap& map, const ModuleStructure& mod, const FdVnAlgebra& alg,
                          double tol = 1e-10);

/// A homomorphism G -> Aut(M); each automorphism is Ad(U_r P_r) with P_r a block permutation.
class GroupAction {
 public:
  const FiniteGroup& group() const { return group_; }
  const FdVnAlgebra& algebra() const { return algebra_; }
  const CMatrix& implementing_unitary(int r) const { return implementing_[static_cast<std::size_t>(r)]; }
  const std::vector<int>& block_perm(int r) const { return perms_[static_cast<std::size_t>(r)]; }
  const CbMap& automorphism(int r) const { return autos_[static_cast<std::size_t>(r)]; }
  CMatrix apply(int r, const CMatrix& a) const;
  bool is_trivial(double tol = 1e-12) const;

 private:
  friend GroupAction make_action(const FiniteGroup&, const FdVnAlgebra&, const std::vector<CMatrix>&,
                                 const std::vector<std::vector<int>>&, double, int);
  GroupAction(FiniteGroup g, FdVnAlgebra alg) : group_(std::move(g)), algebra_(std::move(alg)) {}

  FiniteGroup group_;
  FdVnAlgebra algebra_;
  std::vector<CMatrix> implementing_;
  std::vector<std::vector<int>> perms_;
  std::vector<CbMap> autos_;
};

/// Validates unitarity, block compatibility, *-automorphism and homomorphism
/// properties. Throws ActionError naming the first pair (r, s) with
/// alpha_r alpha_s != alpha_rs.
GroupAction make_action(const FiniteGroup& g, const FdVnAlgebra& alg, const std::vector<CMatrix>& unitaries,
                        const std::vector<std::vector<int>>& block_perms = {}, double tol = 1e-10,
                        int group_cap = kDefaultGroupOrderCap);

GroupAction trivial_action(const FiniteGroup& g, const FdVnAlgebra& alg);
/// alpha_G on L^infty(G) = diagonal algebra: f -> f(r^{-1} .), i.e. Ad(lambda_r).
GroupAction translation_action(const FiniteGroup& g);

/// Basis (as D x D matrices) of the fixed-point subalgebra M^alpha.
std::vector<CMatrix> fixed_point_basis(const GroupAction& action, double tol = 1e-10);
/// Basis of {x in M : x b = b x for all b in generators}.
std::vector<CMatrix> relative_commutant(const FdVnAlgebra& alg, const std::vector<CMatrix>& generators,
                                        double tol = 1e-10);
ModuleStructure fixed_point_module(const GroupAction& action);

/// max_{r, b} |op_b o alpha_r - alpha_r o op_b| on the algebra.
double module_compatibility_residual(const GroupAction& action, const ModuleStructure& mod);

}  // namespace schurlab
