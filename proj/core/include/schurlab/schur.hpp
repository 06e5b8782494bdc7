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

// Schur multipliers of M over a finite set X = {0, ..., n-1}.
//
// Operators on C^D (x) l2(X) use the index p * n + y. The kernel operator T_k
// has block (y, x) equal to k(y, x); a symbol acts by
//   (phi . k)(p, q) = phi(q, p)(k(p, q)),
// so S(a (x) E_yx) = phi(x, y)(a) (x) E_yx.

#include <functional>
#include <optional>
#include <vector>

#include "schurlab/fdvn.hpp"

namespace schurlab {

/// Grid of elements of M; at(y, x) is the block placed in row y, column x of T_k.
struct Kernel {
  int points = 0;
  std::vector<CMatrix> entries;  // index y * points + x

  const CMatrix& at(int y, int x) const { return entries[static_cast<std::size_t>(y * points + x)]; }
  CMatrix& at(int y, int x) { return entries[static_cast<std::size_t>(y * points + x)]; }
};

Kernel make_kernel(int points, const std::function<CMatrix(int, int)>& k);

/// Grid of maps on M; at(x, y) is phi(x, y).
struct SchurSymbol {
  int points = 0;
  std::vector<CbMap> entries;  // index x * points + y

  const CbMap& at(int x, int y) const { return entries[static_cast<std::size_t>(x * points + y)]; }
  CbMap& at(int x, int y) { return entries[static_cast<std::size_t>(x * points + y)]; }
};

SchurSymbol make_symbol(int points, const std::function<CbMap(int, int)>& phi);
/// phi(x, y) = c(x, y) id_M.
SchurSymbol scalar_symbol(const FdVnAlgebra& alg, const CMatrix& c);
/// Largest entrywise difference of the restricted maps.
double symbol_distance(const SchurSymbol& a, const SchurSymbol& b, const FdVnAlgebra& alg);

/// M (x) B(l2 X) with coordinates of a_i (x) E_yx at (y * n + x) * dim(M) + i.
class KernelSpace {
 public:
  KernelSpace(FdVnAlgebra alg, int points);

  const FdVnAlgebra& algebra() const { return alg_; }
  int points() const { return points_; }
  int dim() const { return alg_.dim() * points_ * points_; }
  /// Side length D n of the ambient matrices.
  int side() const { return alg_.total_dim() * points_; }
  int index(int y, int x, int i) const { return (y * points_ + x) * alg_.dim() + i; }

  CVector coords(const CMatrix& t, double* residual = nullptr) const;
  /// Throws DomainError above tol (relative to max(1, |t|)).
  CVector checked_coords(const CMatrix& t, double tol, const char* what) const;
  CMatrix element(const CVector& c) const;
  CMatrix basis_element(int k) const;

  bool operator==(const KernelSpace& other) const { return alg_ == other.alg_ && points_ == other.points_; }

 private:
  FdVnAlgebra alg_;
  int points_;
};

/// A linear map on M (x) B(l2 X) stored in KernelSpace coordinates.
struct AmbientMap {
  KernelSpace space;
  CMatrix matrix;

  CMatrix apply(const CMatrix& t) const;
  /// (this o other)
  AmbientMap compose(const AmbientMap& other) const;
  double distance(const AmbientMap& other) const;
};

AmbientMap identity_map(const KernelSpace& space);
/// Evaluates f on the basis; throws DomainError if an image leaves M (x) B(l2 X).
AmbientMap ambient_map_from_function(const KernelSpace& space, const std::function<CMatrix(const CMatrix&)>& f,
                                     double tol = 1e-10);

/// Throws DomainError when an entry lies outside M.
CMatrix kernel_operator(const FdVnAlgebra& alg, const Kernel& k, double tol = 1e-10);
/// Throws ShapeError on mismatched grids.
Kernel apply_symbol(const SchurSymbol& phi, const Kernel& k);
AmbientMap schur_map(const FdVnAlgebra& alg, const SchurSymbol& phi);

struct BimoduleReport {
  double diagonal_residual = 0.0;  // commutation with I (x) m_f on both sides
  double module_residual = 0.0;    // commutation with the lifted A-action, if given
  bool passes(double tol) const { return diagonal_residual <= tol && module_residual <= tol; }
};

BimoduleReport verify_bimodule(const AmbientMap& s, const ModuleStructure* mod = nullptr);

/// Throws NotSchurMultiplierError when the bimodule check fails at tol.
SchurSymbol extract_symbol(const AmbientMap& s, double tol = 1e-10);

/// phi(x, y)(a) = W(y)^* rho(a) V(x) with rho(a) = a (x) I_k on C^D (x) C^k.
struct DilationTriple {
  int multiplicity = 0;
  std::vector<CMatrix> v;  // per x, (D k) x D
  std::vector<CMatrix> w;  // per y, (D k) x D
  double residual = 0.0;   // worst reconstruction error over basis elements

  CMatrix rho(const CMatrix& a) const;
  /// max_x |V(x)| max_y |W(y)|, an upper bound for the cb norm.
  double certificate() const;
};

/// Factorizes through the block operator whose (y, x) block is the Choi matrix of phi(x, y):
/// eigen-decomposition when it is positive semidefinite, SVD otherwise. Throws
/// NotSchurMultiplierError if s is not a Schur multiplier, SizeError past multiplicity_cap,
/// NumericalError if the reconstruction misses tol.
DilationTriple dilation_factorize(const AmbientMap& s, double tol = 1e-8, int multiplicity_cap = 4096);

/// Block operator with (y, x) block Choi(phi(x, y)).
CMatrix compressed_choi(const SchurSymbol& phi);

}  // namespace schurlab
