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
#include <vector>

#include "schurlab/numerics.hpp"

namespace schurlab {

/// A finite group given by its Cayley table. Element 0 is the identity.
class FiniteGroup {
 public:
  /// Validates the table: shape, identity at 0, Latin-square property and
  /// associativity. Throws InputError naming the first failing triple.
  explicit FiniteGroup(std::vector<std::vector<int>> cayley, std::string name = "table");

  int order() const { return static_cast<int>(cayley_.size()); }
  int mul(int r, int s) const { return cayley_[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)]; }
  int inv(int r) const { return inverse_[static_cast<std::size_t>(r)]; }
  bool abelian() const { return abelian_; }
  const std::vector<std::vector<int>>& cayley() const { return cayley_; }
  const std::string& name() const { return name_; }
  int element_order(int r) const;
  void check_element(int r) const;

 private:
  std::vector<std::vector<int>> cayley_;
  std::vector<int> inverse_;
  bool abelian_ = false;
  std::string name_;
};

FiniteGroup make_cyclic(int n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Symmetric group on n <= 4 letters; permutations in lexicographic order,
/// composed as (ab)(i) = a(b(i)).
FiniteGroup make_symmetric(int n);

/// Characters of a finite abelian group. character(gamma, r) = <gamma, r>.
class DualGroup {
 public:
  const FiniteGroup& base() const { return base_; }
  /// The dual as a group in its own right (pointwise product of characters).
  const FiniteGroup& group() const { return group_; }
  cplx character(int gamma, int r) const { return table_(gamma, r); }
  /// Row gamma, column r.
  const CMatrix& table() const { return table_; }
  /// Exponent k with <gamma, r> = exp(2 pi i k / |G|).
  int exponent(int gamma, int r) const { return exponents_[static_cast<std::size_t>(gamma)][static_cast<std::size_t>(r)]; }
  /// Unitary (1/sqrt n) * conj(table): (F xi)(gamma) = n^{-1/2} sum_s conj<gamma,s> xi(s).
  CMatrix fourier_unitary() const;

 private:
  friend DualGroup dual_group(const FiniteGroup& g);
  DualGroup(FiniteGroup base, FiniteGroup group, CMatrix table, std::vector<std::vector<int>> exps)
      : base_(std::move(base)), group_(std::move(group)), table_(std::move(table)), exponents_(std::move(exps)) {}

  FiniteGroup base_;
  FiniteGroup group_;
  CMatrix table_;
  std::vector<std::vector<int>> exponents_;
};

/// Throws DomainError for nonabelian input. Characters are ordered
/// lexicographically by their exponent vectors, so the dual of Z/n has
/// <gamma, r> = exp(2 pi i gamma r / n).
DualGroup dual_group(const FiniteGroup& g);

/// lambda_r : e_s -> e_{rs}
CMatrix left_regular(const FiniteGroup& g, int r);
/// rho_r : e_s -> e_{s r^{-1}}
CMatrix right_regular(const FiniteGroup& g, int r);
/// diag(f(s)); throws ShapeError on length mismatch.
CMatrix mult_operator(const FiniteGroup& g, const CVector& f);

/// Coefficients c with x = sum_r c_r lambda_r. Throws DomainError when x is not in VN(G).
CVector vn_coefficients(const FiniteGroup& g, const CMatrix& x, double tol = 1e-10);
CMatrix vn_element(const FiniteGroup& g, const CVector& coeffs);

/// lambda_r -> lambda_r (x) lambda_r, extended linearly.
CMatrix vn_coproduct(const FiniteGroup& g, const CMatrix& x, double tol = 1e-10);
/// diag(f) -> diag over (s, t) with value f(st); throws DomainError on non-diagonal input.
CMatrix linf_coproduct(const FiniteGroup& g, const CMatrix& x, double tol = 1e-10);

/// A linear map on VN(G) in lambda coordinates: T(lambda_r) = sum_s m(s, r) lambda_s.
struct VnMap {
  CMatrix coords;
};

/// Builds a VnMap from its action on matrices. Throws DomainError if the image leaves VN(G).
VnMap vn_map_from_function(const FiniteGroup& g, const std::function<CMatrix(const CMatrix&)>& t,
                           double tol = 1e-10);

/// The predual map on A(G): T_*(u)(r) = <T(lambda_r), u>, with <lambda_s, u> = u(s).
/// Returned as the matrix P with T_*(u) = P u.
CMatrix predual_map(const VnMap& t);

/// Largest residual of T_*(uv) - T_*(u) v over point-mass pairs u, v.
double predual_module_residual(const VnMap& t);

}  // namespace schurlab
