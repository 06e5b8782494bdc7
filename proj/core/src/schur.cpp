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

#include "schurlab/schur.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schurlab/errors.hpp"

namespace schurlab {

Kernel make_kernel(int points, const std::function<CMatrix(int, int)>& k) {
  Kernel out{points, {}};
  for (int y = 0; y < points; ++y) {
    for (int x = 0; x < points; ++x) out.entries.push_back(k(y, x));
  }
  return out;
}

SchurSymbol make_symbol(int points, const std::function<CbMap(int, int)>& phi) {
  SchurSymbol out{points, {}};
  for (int x = 0; x < points; ++x) {
    for (int y = 0; y < points; ++y) out.entries.push_back(phi(x, y));
  }
  return out;
}

SchurSymbol scalar_symbol(const FdVnAlgebra& alg, const CMatrix& c) {
  if (c.rows() != c.cols()) throw ShapeError("scalar symbol grid must be square");
  return make_symbol(static_cast<int>(c.rows()), [&](int x, int y) {
    return CbMap::from_restricted(alg, c(x, y) * CMatrix::Identity(alg.dim(), alg.dim()));
  });
}

double symbol_distance(const SchurSymbol& a, const SchurSymbol& b, const FdVnAlgebra& alg) {
  if (a.points != b.points) throw ShapeError("symbol grids differ in size");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    worst = std::max(worst, (a.entries[k].restricted(alg) - b.entries[k].restricted(alg)).cwiseAbs().maxCoeff());
  }
  return worst;
}

// ---------------------------------------------------------------------------
// KernelSpace

KernelSpace::KernelSpace(FdVnAlgebra alg, int points) : alg_(std::move(alg)), points_(points) {
  if (points < 1) throw InputError("index set must be nonempty");
}

CVector KernelSpace::coords(const CMatrix& t, double* residual) const {
  const int d = alg_.total_dim();
  const int n = points_;
  if (t.rows() != side() || t.cols() != side()) throw ShapeError("KernelSpace::coords: shape mismatch");
  const int m = alg_.dim();
  CVector c(dim());
  double r2 = 0.0;
  CMatrix blk(d, d);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      for (int p = 0; p < d; ++p) {
        for (int q = 0; q < d; ++q) blk(p, q) = t(p * n + y, q * n + x);
      }
      double res = 0.0;
      c.segment(index(y, x, 0), m) = alg_.coords(blk, &res);
      r2 += res * res;
    }
  }
  if (residual) *residual = std::sqrt(r2);
  return c;
}

CVector KernelSpace::checked_coords(const CMatrix& t, double tol, const char* what) const {
  double res = 0.0;
  CVector c = coords(t, &res);
  if (res > tol * std::max(1.0, t.norm())) {
    throw DomainError(std::string(what) + ": operator lies outside M (x) B(l2 X) (residual " + std::to_string(res) + ")");
  }
  return c;
}

CMatrix KernelSpace::element(const CVector& c) const {
  if (c.size() != dim()) throw ShapeError("KernelSpace::element: coordinate length mismatch");
  const int n = points_;
  const int m = alg_.dim();
  CMatrix t = CMatrix::Zero(side(), side());
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      for (int i = 0; i < m; ++i) {
        const auto [p, q] = alg_.position(i);
        t(p * n + y, q * n + x) = c(index(y, x, i));
      }
    }
  }
  return t;
}

CMatrix KernelSpace::basis_element(int k) const {
  CVector c = CVector::Zero(dim());
  c(k) = 1.0;
  return element(c);
}

// ---------------------------------------------------------------------------
// AmbientMap

CMatrix AmbientMap::apply(const CMatrix& t) const {
  return space.element(matrix * space.checked_coords(t, 1e-10, "AmbientMap::apply"));
}

AmbientMap AmbientMap::compose(const AmbientMap& other) const {
  if (!(space == other.space)) throw ShapeError("AmbientMap::compose: spaces differ");
  return AmbientMap{space, matrix * other.matrix};
}

double AmbientMap::distance(const AmbientMap& other) const {
  if (!(space == other.space)) throw ShapeError("AmbientMap::distance: spaces differ");
  return (matrix - other.matrix).cwiseAbs().maxCoeff();
}

AmbientMap identity_map(const KernelSpace& space) {
  return AmbientMap{space, CMatrix::Identity(space.dim(), space.dim())};
}

AmbientMap ambient_map_from_function(const KernelSpace& space, const std::function<CMatrix(const CMatrix&)>& f,
                                     double tol) {
  CMatrix mat(space.dim(), space.dim());
  for (int k = 0; k < space.dim(); ++k) mat.col(k) = space.checked_coords(f(space.basis_element(k)), tol, "ambient map");
  return AmbientMap{space, std::move(mat)};
}

// ---------------------------------------------------------------------------
// Kernels and symbols

CMatrix kernel_operator(const FdVnAlgebra& alg, const Kernel& k, double tol) {
  const int d = alg.total_dim();
  const int n = k.points;
  if (static_cast<int>(k.entries.size()) != n * n) throw ShapeError("kernel grid has wrong size");
  CMatrix t = CMatrix::Zero(d * n, d * n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const CMatrix& blk = k.at(y, x);
      alg.require_member(blk, tol, "kernel_operator");
      for (int p = 0; p < d; ++p) {
        for (int q = 0; q < d; ++q) t(p * n + y, q * n + x) = blk(p, q);
      }
    }
  }
  return t;
}

Kernel apply_symbol(const SchurSymbol& phi, const Kernel& k) {
  if (phi.points != k.points) throw ShapeError("symbol and kernel grids differ in size");
  return make_kernel(k.points, [&](int p, int q) { return phi.at(q, p).apply(k.at(p, q)); });
}

AmbientMap schur_map(const FdVnAlgebra& alg, const SchurSymbol& phi) {
  KernelSpace space(alg, phi.points);
  const int n = phi.points;
  const int m = alg.dim();
  CMatrix mat = CMatrix::Zero(space.dim(), space.dim());
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) mat.block(space.index(y, x, 0), space.index(y, x, 0), m, m) = phi.at(x, y).restricted(alg);
  }
  return AmbientMap{space, std::move(mat)};
}

BimoduleReport verify_bimodule(const AmbientMap& s, const ModuleStructure* mod) {
  BimoduleReport rep;
  const auto& space = s.space;
  const int m = space.algebra().dim();
  const int cells = space.points() * space.points();
  // S commutes with left and right multiplication by every I (x) E_zz exactly
  // when it never moves mass between cells (y, x).
  for (int a = 0; a < cells; ++a) {
    for (int b = 0; b < cells; ++b) {
      if (a == b) continue;
      rep.diagonal_residual = std::max(rep.diagonal_residual, s.matrix.block(a * m, b * m, m, m).cwiseAbs().maxCoeff());
    }
  }
  if (mod) {
    auto lifted_residual = [&](const CbMap& op) {
      const CMatrix r = op.restricted(space.algebra());
      CMatrix lifted = CMatrix::Zero(space.dim(), space.dim());
      for (int a = 0; a < cells; ++a) lifted.block(a * m, a * m, m, m) = r;
      return (s.matrix * lifted - lifted * s.matrix).cwiseAbs().maxCoeff();
    };
    for (const auto& op : mod->left) rep.module_residual = std::max(rep.module_residual, lifted_residual(op));
    for (const auto& op : mod->right) rep.module_residual = std::max(rep.module_residual, lifted_residual(op));
  }
  return rep;
}

SchurSymbol extract_symbol(const AmbientMap& s, double tol) {
  const BimoduleReport rep = verify_bimodule(s);
  if (!rep.passes(tol)) {
    throw NotSchurMultiplierError("map does not commute with the diagonal (residual " +
                                  std::to_string(rep.diagonal_residual) + ")");
  }
  const auto& space = s.space;
  const int m = space.algebra().dim();
  return make_symbol(space.points(), [&](int x, int y) {
    return CbMap::from_restricted(space.algebra(), s.matrix.block(space.index(y, x, 0), space.index(y, x, 0), m, m));
  });
}

// ---------------------------------------------------------------------------
// Dilation

CMatrix DilationTriple::rho(const CMatrix& a) const { return kron(a, identity(multiplicity)); }

double DilationTriple::certificate() const {
  double vmax = 0.0;
  double wmax = 0.0;
  for (const auto& x : v) vmax = std::max(vmax, operator_norm(x));
  for (const auto& y : w) wmax = std::max(wmax, operator_norm(y));
  return vmax * wmax;
}

CMatrix compressed_choi(const SchurSymbol& phi) {
  if (phi.entries.empty()) throw InputError("empty symbol");
  const int d = phi.entries.front().dim();
  const int dd = d * d;
  const int n = phi.points;
  CMatrix c(dd * n, dd * n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) c.block(y * dd, x * dd, dd, dd) = phi.at(x, y).choi();
  }
  return c;
}

DilationTriple dilation_factorize(const AmbientMap& s, double tol, int multiplicity_cap) {
  const SchurSymbol phi = extract_symbol(s, tol);
  const auto& alg = s.space.algebra();
  const int d = alg.total_dim();
  const int dd = d * d;
  const int n = phi.points;
  const CMatrix c = compressed_choi(phi);

  // C = A B^*, columns indexed by the multiplicity.
  CMatrix a;
  CMatrix b;
  const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
  const bool hermitian = (c - c.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
  bool done = false;
  if (hermitian) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(c);
    const RVector& ev = es.eigenvalues();
    if (ev.size() == 0 || ev(0) >= -tol * scale) {
      const double top = ev.size() ? ev(ev.size() - 1) : 0.0;
      std::vector<int> keep;
      for (Eigen::Index k = ev.size() - 1; k >= 0; --k) {
        if (ev(k) > tol * std::max(1.0, top)) keep.push_back(static_cast<int>(k));
      }
      a = CMatrix(c.rows(), static_cast<Eigen::Index>(keep.size()));
      for (std::size_t l = 0; l < keep.size(); ++l) {
        a.col(static_cast<Eigen::Index>(l)) = std::sqrt(ev(keep[l])) * es.eigenvectors().col(keep[l]);
      }
      b = a;
      done = true;
    }
  }
  if (!done) {
    Eigen::JacobiSVD<CMatrix> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RVector& sv = svd.singularValues();
    const double top = sv.size() ? sv(0) : 0.0;
    Eigen::Index keep = 0;
    while (keep < sv.size() && sv(keep) > tol * std::max(1.0, top)) ++keep;
    a = svd.matrixU().leftCols(keep) * sv.head(keep).cwiseSqrt().asDiagonal();
    b = svd.matrixV().leftCols(keep) * sv.head(keep).cwiseSqrt().asDiagonal();
  }

  DilationTriple out;
  const int k = static_cast<int>(a.cols());
  if (k > multiplicity_cap) {
    throw SizeError("dilation multiplicity " + std::to_string(k) + " exceeds cap " + std::to_string(multiplicity_cap));
  }
  if (k == 0) {
    out.multiplicity = 1;
    out.v.assign(static_cast<std::size_t>(n), CMatrix::Zero(d, d));
    out.w.assign(static_cast<std::size_t>(n), CMatrix::Zero(d, d));
  } else {
    out.multiplicity = k;
    for (int p = 0; p < n; ++p) {
      CMatrix vx = CMatrix::Zero(d * k, d);
      CMatrix wy = CMatrix::Zero(d * k, d);
      for (int l = 0; l < k; ++l) {
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) {
            wy(i * k + l, j) = std::conj(a(p * dd + i * d + j, l));
            vx(i * k + l, j) = std::conj(b(p * dd + i * d + j, l));
          }
        }
      }
      out.v.push_back(std::move(vx));
      out.w.push_back(std::move(wy));
    }
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int i = 0; i < alg.dim(); ++i) {
        const CMatrix e = alg.basis_element(i);
        const CMatrix rebuilt = out.w[static_cast<std::size_t>(y)].adjoint() * out.rho(e) * out.v[static_cast<std::size_t>(x)];
        out.residual = std::max(out.residual, (rebuilt - phi.at(x, y).apply(e)).cwiseAbs().maxCoeff());
      }
    }
  }
  if (out.residual > tol * std::max(1.0, scale)) {
    throw NumericalError("dilation reconstruction error " + std::to_string(out.residual), 0.0, out.certificate());
  }
  return out;
}

}  // namespace schurlab
