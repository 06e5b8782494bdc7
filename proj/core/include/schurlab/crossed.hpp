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

// Crossed products realized on H_M (x) l2(G) with the index i * |G| + s.
//
//   pi_alpha(a)  = sum_s alpha_{s^{-1}}(a) (x) E_ss
//   lambda~_r    = I (x) lambda_r,          lambda_r e_s = e_{rs}
//
// The span basis is pi_alpha(a_i) lambda~_r, r slow and i fast, where a_i
// runs over the matrix units of M.

#include <string>
#include <vector>

#include "schurlab/fdvn.hpp"
#include "schurlab/span.hpp"

namespace schurlab {

/// Throws DomainError when a is not in the algebra.
CMatrix pi_alpha(const GroupAction& action, const CMatrix& a, double tol = 1e-10);
/// I_D (x) lambda_r
CMatrix lambda_tilde(const GroupAction& action, int r);
/// I_D (x) diag(f)
CMatrix mult_tilde(const GroupAction& action, const CVector& f);

class CrossedProductModel {
 public:
  const GroupAction& action() const { return action_; }
  const FdVnAlgebra& algebra() const { return action_.algebra(); }
  const FiniteGroup& group() const { return action_.group(); }
  int base_dim() const { return action_.algebra().dim(); }
  int group_order() const { return action_.group().order(); }
  /// Side length D |G| of the ambient matrices.
  int ambient_dim() const { return action_.algebra().total_dim() * action_.group().order(); }
  /// dim(M) |G|
  int dim() const { return base_dim() * group_order(); }
  int basis_index(int r, int i) const { return r * base_dim() + i; }

  /// pi_alpha(a_i) lambda~_r for k = basis_index(r, i).
  CMatrix basis_element(int k) const;
  /// Coordinates read off the block row s = 0; residual is the Frobenius
  /// distance between x and the element rebuilt from them.
  CVector coords(const CMatrix& x, double* residual = nullptr) const;
  /// As coords, but throws DomainError above tol.
  CVector checked_coords(const CMatrix& x, double tol, const char* what) const;
  CMatrix element(const CVector& c) const;

  /// Largest coordinate residual of products and adjoints of basis elements.
  double closure_residual() const { return closure_; }

 private:
  friend CrossedProductModel build_crossed_product(const GroupAction& action, double tol);
  explicit CrossedProductModel(GroupAction action) : action_(std::move(action)) {}

  GroupAction action_;
  std::vector<CMatrix> alpha_inv_;  // restricted matrices of alpha_{s^{-1}}
  double closure_ = 0.0;
};

/// Verifies independence of the span basis and closure under products and
/// adjoints; throws DegeneracyError if either fails.
CrossedProductModel build_crossed_product(const GroupAction& action, double tol = 1e-10);

/// pi_alpha(a) lambda~_r -> pi_alpha(a) lambda~_r (x) lambda_r. Throws DomainError outside the span.
CMatrix dual_coaction(const CrossedProductModel& model, const CMatrix& x, double tol = 1e-10);

/// r -> alpha_r (x) Ad(rho_r) on M (x) B(l2 G).
GroupAction second_dual_action(const GroupAction& action);

/// Permutation unitary taking the index s * D + i to i * n + s.
CMatrix swap_unitary(int n, int d);

/// A linear *-isomorphism fixed by generator images and extended over products of generator words.
class DualityIso {
 public:
  enum class Kind { Phi, Psi };

  /// One family of generators together with their images.
  struct GeneratorGroup {
    std::string label;
    std::vector<SparseCMatrix> domain;
    std::vector<SparseCMatrix> image;
  };

  /// Words use at most one generator from each group, in group order, with at
  /// most max_len letters. Throws ExtensionError when the selected words span
  /// less than required_rank dimensions or their images are dependent.
  DualityIso(Kind kind, int domain_dim, int codomain_dim, const std::vector<GeneratorGroup>& groups,
             int required_rank, int max_len = 3, double tol = 1e-10);

  Kind kind() const { return kind_; }
  int domain_dim() const { return domain_.ambient_dim(); }
  int codomain_dim() const { return codomain_.ambient_dim(); }
  int rank() const { return domain_.size(); }
  /// Human-readable words selected for the extension, e.g. "pi(3).m(1).lambda(2)".
  const std::vector<std::string>& words() const { return words_; }
  const SpanBasis& domain_span() const { return domain_; }
  const SpanBasis& codomain_span() const { return codomain_; }

  /// Throws DomainError when x is outside the domain span.
  CMatrix apply(const CMatrix& x) const;
  /// Throws DomainError when y is outside the image span.
  CMatrix inverse(const CMatrix& y) const;

 private:
  Kind kind_;
  double tol_;
  SpanBasis domain_;
  SpanBasis codomain_;
  std::vector<std::string> words_;
};

struct IsoReport {
  double unital = 0.0;
  double adjoint = 0.0;
  double multiplicative = 0.0;
  double roundtrip = 0.0;
  bool bijective = false;
  double worst() const;
};

/// Checks the *-isomorphism properties on random pairs of combinations of words.
IsoReport verify_duality_iso(const DualityIso& iso, int samples = 200, unsigned long long seed = 0x5EED);

/// Phi : M (x) B(l2 G) -> double crossed product inside M (x) B(l2 G) (x) B(l2 G), with
/// Phi(pi_alpha(a)) = pi_alpha(a) (x) I, Phi(I (x) lambda_r) = I (x) lambda_r (x) lambda_r,
/// Phi(I (x) m_f) = I (x) I (x) m_f.
DualityIso takai_phi(const GroupAction& action, int max_len = 3);

/// beta = trivial (x) alpha_G on M (x) L^infty(G), realized as the direct sum of
/// |G| copies of M with the group index slow; beta_r moves copy s to copy rs.
GroupAction beta_action(const FdVnAlgebra& alg, const FiniteGroup& g);

/// Psi : (M (x) L^infty G) x|_beta G -> M (x) B(l2 G), with Psi(pi_beta(x)) = sum_s x(s) (x) E_ss
/// and Psi(lambda~_r) = I (x) lambda_r.
DualityIso svn_psi(const FdVnAlgebra& alg, const FiniteGroup& g, int max_len = 3);

}  // namespace schurlab
