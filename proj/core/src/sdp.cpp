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

#include "schurlab/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "schurlab/errors.hpp"

namespace schurlab {

RMatrix hermitian_to_real(const CMatrix& h) {
  const auto n = h.rows();
  RMatrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = h.real();
  out.topRightCorner(n, n) = -h.imag();
  out.bottomLeftCorner(n, n) = h.imag();
  out.bottomRightCorner(n, n) = h.real();
  return out;
}

namespace {

using Blocks = std::vector<RMatrix>;

struct Triplet {
  int block;
  int row;
  int col;
  double value;
};

// Constraint matrices with both symmetric halves stored explicitly.
struct Operators {
  std::vector<int> sizes;
  std::vector<std::vector<Triplet>> a;
  Blocks c;

  int m() const { return static_cast<int>(a.size()); }

  Blocks zeros() const {
    Blocks out;
    for (int s : sizes) out.push_back(RMatrix::Zero(s, s));
    return out;
  }

  RVector apply(const Blocks& x) const {
    RVector out(m());
    for (int i = 0; i < m(); ++i) {
      double acc = 0.0;
      for (const auto& t : a[static_cast<std::size_t>(i)]) acc += t.value * x[static_cast<std::size_t>(t.block)](t.col, t.row);
      out(i) = acc;
    }
    return out;
  }

  Blocks adjoint(const RVector& y) const {
    Blocks out = zeros();
    for (int i = 0; i < m(); ++i) {
      if (y(i) == 0.0) continue;
      for (const auto& t : a[static_cast<std::size_t>(i)]) out[static_cast<std::size_t>(t.block)](t.row, t.col) += y(i) * t.value;
    }
    return out;
  }
};

double inner(const Blocks& a, const Blocks& b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k].cwiseProduct(b[k]).sum();
  return acc;
}

double frob(const Blocks& a) { return std::sqrt(inner(a, a)); }

Blocks add(const Blocks& a, const Blocks& b, double s = 1.0) {
  Blocks out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += s * b[k];
  return out;
}

Blocks product(const Blocks& a, const Blocks& b) {
  Blocks out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a[k] * b[k]);
  return out;
}

Blocks symmetrize(const Blocks& a) {
  Blocks out;
  for (const auto& m : a) out.push_back(0.5 * (m + m.transpose()));
  return out;
}

bool inverse_pd(const Blocks& z, Blocks& inv) {
  inv.clear();
  for (const auto& m : z) {
    Eigen::LLT<RMatrix> llt(m);
    if (llt.info() != Eigen::Success) return false;
    inv.push_back(llt.solve(RMatrix::Identity(m.rows(), m.cols())));
  }
  return true;
}

// Largest alpha with x + alpha dx psd (infinity when no limit).
double max_step(const Blocks& x, const Blocks& dx) {
  double alpha = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < x.size(); ++k) {
    Eigen::LLT<RMatrix> llt(x[k]);
    if (llt.info() != Eigen::Success) return 0.0;
    const RMatrix linv = llt.matrixL().solve(RMatrix::Identity(x[k].rows(), x[k].cols()));
    const RMatrix w = linv * dx[k] * linv.transpose();
    Eigen::SelfAdjointEigenSolver<RMatrix> es(0.5 * (w + w.transpose()), Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues()(0);
    if (lo < 0) alpha = std::min(alpha, -1.0 / lo);
  }
  return alpha;
}

double step_length(double max_alpha) {
  constexpr double kFraction = 0.95;
  return std::min(1.0, kFraction * max_alpha);
}

// M_ij = Tr(A_i X A_j Z^{-1})
RMatrix schur_complement(const Operators& ops, const Blocks& x, const Blocks& zinv) {
  const int m = ops.m();
  RMatrix mat(m, m);
  Blocks k = ops.zeros();
  std::vector<char> touched(ops.sizes.size(), 0);
  for (int j = 0; j < m; ++j) {
    std::fill(touched.begin(), touched.end(), 0);
    for (const auto& t : ops.a[static_cast<std::size_t>(j)]) {
      auto& kb = k[static_cast<std::size_t>(t.block)];
      if (!touched[static_cast<std::size_t>(t.block)]) {
        kb.setZero();
        touched[static_cast<std::size_t>(t.block)] = 1;
      }
      kb.noalias() += t.value * x[static_cast<std::size_t>(t.block)].col(t.row) *
                      zinv[static_cast<std::size_t>(t.block)].row(t.col);
    }
    for (int i = 0; i < m; ++i) {
      double acc = 0.0;
      for (const auto& t : ops.a[static_cast<std::size_t>(i)]) {
        if (touched[static_cast<std::size_t>(t.block)]) acc += t.value * k[static_cast<std::size_t>(t.block)](t.col, t.row);
      }
      mat(i, j) = acc;
    }
  }
  return 0.5 * (mat + mat.transpose());
}

struct Direction {
  RVector dy;
  Blocks dx;
  Blocks dz;
};

}  // namespace

SdpResult sdp_solve(const SdpProblem& p, const SdpOptions& opts) {
  Operators ops;
  ops.sizes = p.block_sizes;
  if (ops.sizes.empty()) throw InputError("SDP needs at least one block");
  for (int s : ops.sizes) {
    if (s < 1) throw InputError("SDP block sizes must be positive");
  }
  if (static_cast<Eigen::Index>(p.constraints.size()) != p.b.size()) {
    throw InputError("SDP: number of constraints and right-hand sides differ");
  }
  auto check_entry = [&](const SdpEntry& e) {
    if (e.block < 0 || e.block >= static_cast<int>(ops.sizes.size())) throw InputError("SDP entry names a missing block");
    const int s = ops.sizes[static_cast<std::size_t>(e.block)];
    if (e.row < 0 || e.col < 0 || e.row >= s || e.col >= s) throw InputError("SDP entry out of block range");
    if (!std::isfinite(e.value)) throw InputError("SDP entry is not finite");
  };
  ops.c = ops.zeros();
  for (const auto& e : p.objective) {
    check_entry(e);
    ops.c[static_cast<std::size_t>(e.block)](e.row, e.col) += e.value;
    if (e.row != e.col) ops.c[static_cast<std::size_t>(e.block)](e.col, e.row) += e.value;
  }
  for (const auto& con : p.constraints) {
    std::vector<Triplet> full;
    for (const auto& e : con) {
      check_entry(e);
      full.push_back({e.block, e.row, e.col, e.value});
      if (e.row != e.col) full.push_back({e.block, e.col, e.row, e.value});
    }
    ops.a.push_back(std::move(full));
  }
  const int m = ops.m();
  int n = 0;
  for (int s : ops.sizes) n += s;

  // Starting point after Helmberg, Rendl, Vanderbei and Wolkowicz, as used by CSDP.
  double alpha0 = 0.0;
  double amax = 0.0;
  for (int i = 0; i < m; ++i) {
    double an = 0.0;
    for (const auto& t : ops.a[static_cast<std::size_t>(i)]) an += t.value * t.value;
    an = std::sqrt(an);
    amax = std::max(amax, an);
    alpha0 = std::max(alpha0, n * (1.0 + std::abs(p.b(i))) / (1.0 + an));
  }
  const double cnorm = frob(ops.c);
  const double beta0 = (1.0 + std::max(amax, cnorm)) / std::sqrt(static_cast<double>(n));
  Blocks x = ops.zeros();
  Blocks z = ops.zeros();
  for (std::size_t k = 0; k < x.size(); ++k) {
    x[k].setIdentity();
    x[k] *= 10.0 * std::max(alpha0, 1.0);
    z[k].setIdentity();
    z[k] *= 10.0 * beta0;
  }
  RVector y = RVector::Zero(m);
  const double bnorm = p.b.norm();

  SdpResult res;
  for (int it = 0; it < opts.max_iterations; ++it) {
    res.iterations = it;
    Blocks zinv;
    if (!inverse_pd(z, zinv)) throw NumericalError("SDP: dual slack lost definiteness", res.dual, res.primal);
    const double pobj = inner(ops.c, x);
    const double dobj = p.b.dot(y);
    const RVector rp = p.b - ops.apply(x);
    const Blocks rd = add(add(ops.c, z, -1.0), ops.adjoint(y), -1.0);
    const double pinf = rp.norm() / (1.0 + bnorm);
    const double dinf = frob(rd) / (1.0 + cnorm);
    const double relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    res.primal = pobj;
    res.dual = dobj;
    res.gap = std::abs(pobj - dobj);
    if (pinf < opts.tol && dinf < opts.tol && relgap < opts.tol) {
      res.status = SdpStatus::Optimal;
      res.y = y;
      res.x = x;
      res.z = z;
      return res;
    }
    if (frob(x) > 1e12) {
      res.status = SdpStatus::DualInfeasible;
      return res;
    }
    if (y.norm() > 1e12 || frob(z) > 1e12) {
      res.status = SdpStatus::PrimalInfeasible;
      return res;
    }

    const double mu = inner(x, z) / n;
    const RMatrix mat = schur_complement(ops, x, zinv);
    Eigen::LLT<RMatrix> llt(mat);
    Eigen::LDLT<RMatrix> ldlt;
    const bool use_llt = llt.info() == Eigen::Success;
    if (!use_llt) ldlt.compute(mat);
    auto solve = [&](const RVector& rhs) -> RVector { return use_llt ? RVector(llt.solve(rhs)) : RVector(ldlt.solve(rhs)); };

    const RVector base_rhs = p.b + ops.apply(product(product(x, rd), zinv));
    auto direction = [&](double sigma_mu, const Blocks* corr) {
      RVector rhs = base_rhs - sigma_mu * ops.apply(zinv);
      Blocks corr_term;
      if (corr) {
        corr_term = product(*corr, zinv);
        rhs += ops.apply(corr_term);
      }
      Direction d;
      d.dy = solve(rhs);
      d.dz = add(rd, ops.adjoint(d.dy), -1.0);
      Blocks dx = ops.zeros();
      for (std::size_t k = 0; k < dx.size(); ++k) {
        dx[k] = sigma_mu * zinv[k] - x[k] - x[k] * d.dz[k] * zinv[k];
        if (corr) dx[k] -= corr_term[k];
      }
      d.dx = symmetrize(dx);
      return d;
    };

    const Direction aff = direction(0.0, nullptr);
    const double ap = step_length(max_step(x, aff.dx));
    const double ad = step_length(max_step(z, aff.dz));
    const double mu_aff = inner(add(x, aff.dx, ap), add(z, aff.dz, ad)) / n;
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);
    const Blocks second = product(aff.dx, aff.dz);
    const Direction d = direction(sigma * mu, &second);
    const double sp = step_length(max_step(x, d.dx));
    const double sd = step_length(max_step(z, d.dz));
    x = add(x, d.dx, sp);
    z = add(z, d.dz, sd);
    y += sd * d.dy;
    if (sp < 1e-12 && sd < 1e-12) break;
  }
  // Accept a slightly looser solution at the cap before giving up.
  const double pobj = inner(ops.c, x);
  const double dobj = p.b.dot(y);
  const double relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
  const double pinf = (p.b - ops.apply(x)).norm() / (1.0 + bnorm);
  const double dinf = frob(add(add(ops.c, z, -1.0), ops.adjoint(y), -1.0)) / (1.0 + cnorm);
  if (relgap < 1e-7 && pinf < 1e-7 && dinf < 1e-7) {
    res.status = SdpStatus::Optimal;
    res.primal = pobj;
    res.dual = dobj;
    res.gap = std::abs(pobj - dobj);
    res.y = y;
    res.x = x;
    res.z = z;
    return res;
  }
  throw NumericalError("SDP did not converge in " + std::to_string(opts.max_iterations) + " iterations (gap " +
                           std::to_string(std::abs(pobj - dobj)) + ")",
                       dobj, pobj);
}

}  // namespace schurlab
