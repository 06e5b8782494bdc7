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

#include "schurlab/cbnorm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schurlab/errors.hpp"
#include "schurlab/transference.hpp"

namespace schurlab {

namespace {

struct HermEntry {
  int row;
  int col;
  cplx value;
};

// Upper-triangle entries of the real embedding of a Hermitian matrix given by
// all of its nonzero entries (both halves), placed at the block's complex side n.
void embed(std::vector<SdpEntry>& out, int block, int n, const std::vector<HermEntry>& h) {
  for (const auto& e : h) {
    const double re = e.value.real();
    const double im = e.value.imag();
    auto emit = [&](int r, int c, double v) {
      if (v != 0.0 && r <= c) out.push_back({block, r, c, v});
    };
    emit(e.row, e.col, re);
    emit(e.row + n, e.col + n, re);
    emit(e.row, e.col + n, -im);
    emit(e.row + n, e.col, im);
  }
}

// Builds and solves the factorization SDP for a block operator c of side d^2 * points.
NormResult factorization_sdp(const CMatrix& c, int d, int points, const SdpOptions& opts, int cap) {
  const int dd = d * d;
  const int n = dd * points;
  if (c.rows() != n || c.cols() != n) throw ShapeError("factorization SDP: operator has wrong side");
  if (n > cap) throw SizeError("norm SDP side " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (!all_finite(c)) throw InputError("norm SDP: non-finite symbol");

  SdpProblem p;
  // Block 0 is the 2n x 2n factorization block; then one slack per point for Y0 and for Y1.
  p.block_sizes.push_back(4 * n);
  for (int k = 0; k < 2 * points; ++k) p.block_sizes.push_back(2 * d);

  std::vector<HermEntry> cmat;
  for (int r = 0; r < n; ++r) {
    for (int q = 0; q < n; ++q) {
      if (c(r, q) == cplx(0.0)) continue;
      cmat.push_back({r, n + q, c(r, q)});
      cmat.push_back({n + q, r, std::conj(c(r, q))});
    }
  }
  embed(p.objective, 0, 2 * n, cmat);

  // t
  std::vector<SdpEntry> tcon;
  for (int k = 0; k < 2 * points; ++k) {
    std::vector<HermEntry> id;
    for (int i = 0; i < d; ++i) id.push_back({i, i, -1.0});
    embed(tcon, 1 + k, d, id);
  }
  p.constraints.push_back(std::move(tcon));

  // Hermitian basis of Y0 (side 0) and Y1 (side 1).
  for (int side = 0; side < 2; ++side) {
    for (int r = 0; r < n; ++r) {
      for (int q = r; q < n; ++q) {
        for (int part = 0; part < (r == q ? 1 : 2); ++part) {
          std::vector<HermEntry> h;
          if (r == q) {
            h.push_back({r, r, 1.0});
          } else if (part == 0) {
            h.push_back({r, q, 1.0});
            h.push_back({q, r, 1.0});
          } else {
            h.push_back({r, q, cplx(0.0, 1.0)});
            h.push_back({q, r, cplx(0.0, -1.0)});
          }
          std::vector<SdpEntry> con;
          std::vector<HermEntry> big;
          for (const auto& e : h) big.push_back({e.row + side * n, e.col + side * n, -e.value});
          embed(con, 0, 2 * n, big);
          // Partial trace over the input index of the diagonal block at the point.
          std::vector<HermEntry> slack;
          int point = -1;
          for (const auto& e : h) {
            const int pr = e.row / dd;
            const int pc = e.col / dd;
            if (pr != pc) continue;
            const int ir = (e.row % dd) / d;
            const int ic = (e.col % dd) / d;
            if (ir != ic) continue;
            point = pr;
            slack.push_back({e.row % d, e.col % d, e.value});
          }
          if (point >= 0) embed(con, 1 + side * points + point, d, slack);
          p.constraints.push_back(std::move(con));
        }
      }
    }
  }
  p.b = RVector::Zero(static_cast<Eigen::Index>(p.constraints.size()));
  p.b(0) = -1.0;

  const SdpResult res = sdp_solve(p, opts);
  if (res.status != SdpStatus::Optimal) throw NumericalError("norm SDP reported infeasibility", 0.0, 0.0);
  NormResult out;
  out.value = -res.dual;
  out.lower = -res.primal;
  out.gap = res.gap;
  out.iterations = res.iterations;
  return out;
}

}  // namespace

NormResult schur_cb_norm(const CMatrix& c, const SdpOptions& opts, int cap) {
  if (c.rows() != c.cols()) throw ShapeError("scalar grid must be square");
  // The (y, x) block carries c(x, y).
  return factorization_sdp(CMatrix(c.transpose()), 1, static_cast<int>(c.rows()), opts, cap);
}

NormResult schur_symbol_cb_norm(const SchurSymbol& phi, const SdpOptions& opts, int cap) {
  if (phi.entries.empty()) throw InputError("empty symbol");
  return factorization_sdp(compressed_choi(phi), phi.entries.front().dim(), phi.points, opts, cap);
}

NormResult cb_norm(const CbMap& map, const SdpOptions& opts, int cap) {
  return factorization_sdp(map.choi(), map.dim(), 1, opts, cap);
}

NormResult hs_cb_norm(const CrossedProductModel& model, const HsSymbol& f, const SdpOptions& opts, int cap) {
  const CMatrix s = hs_map(model, f);
  const DualityIso phi = takai_phi(model.action());
  const AmbientMap sb = sbar(model, phi, s);
  return schur_symbol_cb_norm(extract_symbol(sb, 1e-9), opts, cap);
}

double amplified_lower_bound(const CbMap& map, int k, Rng& rng, int trials) {
  const int d = map.dim();
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    const CMatrix u = random_unitary(d * k, rng);
    // (map (x) id_k) acts on the D x D blocks over the slow index.
    const CMatrix out = tensor_apply_left(u, d, k, [&](const CMatrix& blk) { return map.apply(blk); });
    best = std::max(best, operator_norm(out));
  }
  return best;
}

double schur_lower_bound(const AmbientMap& s, Rng& rng, int trials) {
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    const CMatrix u = random_unitary(s.space.side(), rng);
    // Compress to M (x) B(l2 X) first: the compression is a contraction.
    CVector c = s.space.coords(u);
    const CMatrix x = s.space.element(c);
    const double nx = operator_norm(x);
    if (nx <= 0) continue;
    best = std::max(best, operator_norm(s.space.element(s.matrix * c)) / nx);
  }
  return best;
}

}  // namespace schurlab
