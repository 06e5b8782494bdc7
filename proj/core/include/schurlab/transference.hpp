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

// Passage between Herz-Schur multipliers of an action and Schur multipliers
// of M (x) B(l2 G) that are invariant under alpha (x) Ad(rho).

#include "schurlab/herzschur.hpp"
#include "schurlab/schur.hpp"

namespace schurlab {

/// phi(s, t) = alpha_{t^{-1}} o F(t s^{-1}) o alpha_t
SchurSymbol transfer_symbol(const GroupAction& action, const HsSymbol& f);

/// S-bar = Phi^{-1} o (S (x) id) o Phi, computed slice by slice through the duality map.
/// Throws DomainError if the result leaves the image of Phi.
AmbientMap sbar(const CrossedProductModel& model, const DualityIso& phi, const CMatrix& s);
AmbientMap sbar(const GroupAction& action, const CMatrix& s);

/// Coordinate matrices of (alpha (x) Ad rho)_r on M (x) B(l2 G).
std::vector<CMatrix> second_dual_matrices(const GroupAction& action);

struct InvarianceCheck {
  bool invariant = false;
  double residual = 0.0;
};

/// max_r |beta_r o R - R o beta_r| with beta = alpha (x) Ad(rho).
InvarianceCheck check_invariance(const AmbientMap& r, const GroupAction& action, double tol = 1e-10);

/// (1/|G|) sum_r beta_{r^{-1}} o R o beta_r
AmbientMap invariant_average(const AmbientMap& r, const GroupAction& action);

/// Largest distance of R(x) from the crossed-product span over basis elements x.
double span_preservation_residual(const AmbientMap& r, const CrossedProductModel& model);

/// Restriction of R to the crossed product. Throws InvarianceViolationError when R is not
/// invariant or does not preserve the span, NotSchurMultiplierError when R is not a bimodule map.
CMatrix restrict_to_crossed(const AmbientMap& r, const CrossedProductModel& model, double tol = 1e-10);

/// The Schur multiplier S transported through Psi to the crossed product by beta = trivial (x) alpha_G.
struct BetaPicture {
  GroupAction beta;
  CrossedProductModel model;
  DualityIso psi;
  CMatrix s_tilde;
  HsSymbol fibers;
  double hs_residual = 0.0;
};

/// Throws NotSchurMultiplierError if S is not a Schur multiplier and
/// NotHerzSchurError if the transported map fails the Herz-Schur condition.
BetaPicture beta_picture(const AmbientMap& s, const FiniteGroup& g, double tol = 1e-9);

/// Fiber symbol predicted for the beta picture: F(r)(x)(s) = phi(r^{-1} s, s)(x(s)) on the
/// direct sum of |G| copies of M.
HsSymbol beta_fiber_symbol(const SchurSymbol& phi, const FdVnAlgebra& alg, const FiniteGroup& g);

}  // namespace schurlab
