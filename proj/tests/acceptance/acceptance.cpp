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

// Acceptance checks A1-A9. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails or runs past its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "schurlab/cbnorm.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/herzschur.hpp"
#include "schurlab/pontryagin.hpp"
#include "schurlab/random.hpp"
#include "schurlab/transference.hpp"

using namespace schurlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct NamedAction {
  std::string name;
  GroupAction action;
};

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

cplx root(int k, int n) { return std::polar(1.0, 2.0 * M_PI * k / n); }

CMatrix diag2(cplx a, cplx b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// Ad-action of G on M2 through a (projective) two-dimensional representation.
GroupAction ad_action_m2(const FiniteGroup& g, const std::string& kind) {
  std::vector<CMatrix> us;
  const int n = g.order();
  if (kind == "cyclic") {
    for (int r = 0; r < n; ++r) us.push_back(diag2(1.0, root(r, n)));
  } else if (kind == "klein") {
    CMatrix x(2, 2), z = diag2(1.0, -1.0);
    x << 0, 1, 1, 0;
    for (int r = 0; r < n; ++r) {
      CMatrix u = identity(2);
      if (r / 2) u = u * x;
      if (r % 2) u = u * z;
      us.push_back(u);
    }
  } else {
    // S3 on the plane orthogonal to (1, 1, 1), from its permutation matrices.
    const std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    CMatrix q(3, 2);
    q << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0), -1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0), 0.0, -2.0 / std::sqrt(6.0);
    for (const auto& p : perms) {
      CMatrix pm = CMatrix::Zero(3, 3);
      for (int i = 0; i < 3; ++i) pm(p[static_cast<std::size_t>(i)], i) = 1.0;
      us.push_back(q.adjoint() * pm * q);
    }
  }
  return make_action(g, FdVnAlgebra({2}), us);
}

std::vector<NamedAction> a1_actions() {
  const FiniteGroup k4 = direct_product(make_cyclic(2), make_cyclic(2));
  const std::vector<std::pair<std::string, FiniteGroup>> groups{
      {"Z2", make_cyclic(2)}, {"Z3", make_cyclic(3)}, {"Z4", make_cyclic(4)}, {"Z2xZ2", k4}, {"S3", make_symmetric(3)}};
  std::vector<NamedAction> out;
  for (const auto& [name, g] : groups) {
    const std::string kind = name == "Z2xZ2" ? "klein" : (name == "S3" ? "s3" : "cyclic");
    out.push_back({name + "/trivial-C", trivial_action(g, FdVnAlgebra({1}))});
    out.push_back({name + "/Ad-M2", ad_action_m2(g, kind)});
    out.push_back({name + "/translation", translation_action(g)});
  }
  return out;
}

HsSymbol random_hs(const FdVnAlgebra& alg, int n, Rng& rng) {
  HsSymbol f;
  for (int r = 0; r < n; ++r) f.fibers.push_back(random_map_on(alg, rng));
  return f;
}

SchurSymbol random_symbol(const FdVnAlgebra& alg, int n, Rng& rng) {
  return make_symbol(n, [&](int, int) { return random_map_on(alg, rng); });
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome a1() {
  double worst = 0.0;
  for (const auto& [name, a] : a1_actions()) {
    const DualityIso phi = takai_phi(a);
    const int n = a.group().order(), d = a.algebra().total_dim();
    if (phi.rank() != a.algebra().dim() * n * n) return {false, name + ": word basis does not span"};
    const IsoReport rep = verify_duality_iso(phi, 200, 0x5EED);
    if (!rep.bijective) return {false, name + ": not bijective"};
    worst = std::max(worst, rep.worst());
    for (int i = 0; i < a.algebra().dim(); ++i) {
      const CMatrix p = pi_alpha(a, a.algebra().basis_element(i));
      worst = std::max(worst, max_abs_diff(phi.apply(p), kron(p, identity(n))));
    }
    for (int r = 0; r < n; ++r) {
      const CMatrix l = left_regular(a.group(), r);
      worst = std::max(worst, max_abs_diff(phi.apply(kron(identity(d), l)), kron(kron(identity(d), l), l)));
      const CMatrix e = matrix_unit(n, r, r);
      worst = std::max(worst, max_abs_diff(phi.apply(kron(identity(d), e)), kron(identity(d * n), e)));
    }
  }
  return {worst <= 1e-9, fmt("15 scenarios, worst residual %.2e (tol 1e-9)", worst)};
}

Outcome a2() {
  double worst = 0.0;
  Rng rng(0xA2);
  for (const auto& [name, a] : a1_actions()) {
    const CrossedProductModel m = build_crossed_product(a);
    const DualityIso phi = takai_phi(a);
    for (int trial = 0; trial < 20; ++trial) {
      const HsSymbol f = random_hs(a.algebra(), a.group().order(), rng);
      const AmbientMap sb = sbar(m, phi, hs_map(m, f));
      const SchurSymbol got = extract_symbol(sb, 1e-9);
      worst = std::max(worst, symbol_distance(got, transfer_symbol(a, f), a.algebra()));
      worst = std::max(worst, verify_bimodule(sb).diagonal_residual);
      worst = std::max(worst, check_invariance(sb, a).residual);
    }
  }
  return {worst <= 1e-9, fmt("300 symbols, worst residual %.2e (tol 1e-9)", worst)};
}

Outcome a3() {
  double forward = 0.0, backward = 0.0;
  Rng rng(0xA3);
  for (const auto& [name, a] : a1_actions()) {
    const CrossedProductModel m = build_crossed_product(a);
    const DualityIso phi = takai_phi(a);
    const int n = a.group().order();
    for (int trial = 0; trial < 20; ++trial) {
      const AmbientMap r = invariant_average(schur_map(a.algebra(), random_symbol(a.algebra(), n, rng)), a);
      forward = std::max(forward, sbar(m, phi, restrict_to_crossed(r, m, 1e-9)).distance(r));
      const CMatrix s = hs_map(m, random_hs(a.algebra(), n, rng));
      backward = std::max(backward, max_abs_diff(restrict_to_crossed(sbar(m, phi, s), m, 1e-9), s));
    }
  }
  return {forward <= 1e-9 && backward <= 1e-10,
          fmt("sbar(restrict(R)) - R %.2e (tol 1e-9), ", forward) + fmt("restrict(sbar(S)) - S %.2e (tol 1e-10)", backward)};
}

Outcome a4() {
  int mismatches = 0, cases = 0;
  double grid_err = 0.0;
  Rng rng(0xA4);
  const FdVnAlgebra c({1});
  for (const FiniteGroup& g : {make_cyclic(2), make_cyclic(3), make_cyclic(4), direct_product(make_cyclic(2), make_cyclic(2))}) {
    const int n = g.order();
    const GroupAction a = trivial_action(g, c);
    const CrossedProductModel m = build_crossed_product(a);
    std::vector<CMatrix> grids;
    // Point masses span all scalar Schur multipliers; Toeplitz point masses span the Weyl-diagonal ones.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        CMatrix e = CMatrix::Zero(n, n);
        e(x, y) = 1.0;
        grids.push_back(e);
      }
    for (int r = 0; r < n; ++r) {
      CMatrix e(n, n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) e(x, y) = g.mul(y, g.inv(x)) == r ? 1.0 : 0.0;
      grids.push_back(e);
    }
    for (int k = 0; k < 50; ++k) {
      if (k % 2 == 0) {
        grids.push_back(random_matrix(n, n, rng));
      } else {
        const CVector v = random_vector(n, rng);
        CMatrix e(n, n);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) e(x, y) = v(g.mul(y, g.inv(x)));
        grids.push_back(e);
      }
    }
    for (const CMatrix& grid : grids) {
      ++cases;
      const AmbientMap s = schur_map(c, scalar_symbol(c, grid));
      bool toeplitz = true;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) toeplitz = toeplitz && std::abs(grid(x, y) - grid(0, g.mul(y, g.inv(x)))) < 1e-12;
      const bool invariant = check_invariance(s, a).residual <= 1e-10;
      const bool restricts = span_preservation_residual(s, m) <= 1e-10;
      if (invariant != restricts || invariant != toeplitz) ++mismatches;
      if (restricts) {
        const HsSymbol f = extract_hs_symbol(m, restrict_to_crossed(s, m));
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            grid_err = std::max(grid_err, std::abs(grid(x, y) - f.at(g.mul(y, g.inv(x))).superoperator()(0, 0)));
      }
    }
  }
  return {mismatches == 0 && grid_err <= 1e-10,
          std::to_string(cases) + " multipliers, " + std::to_string(mismatches) + " mismatches, " +
              fmt("grid error %.2e (tol 1e-10)", grid_err)};
}

Outcome a5() {
  double worst_rel = 0.0, worst_gap = 0.0;
  Rng rng(0xA5);
  const FdVnAlgebra c({1});
  for (int n : {2, 3, 4}) {
    const FiniteGroup g = make_cyclic(n);
    const CrossedProductModel m = build_crossed_product(trivial_action(g, c));
    for (int trial = 0; trial < 10; ++trial) {
      const CVector v = random_vector(n, rng);
      CMatrix grid(n, n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) grid(x, y) = v(((y - x) % n + n) % n);
      const NormResult h = hs_cb_norm(m, scalar_hs_symbol(c, v));
      const NormResult s = schur_cb_norm(grid);
      worst_rel = std::max(worst_rel, std::abs(h.value - s.value) / s.value);
      worst_gap = std::max({worst_gap, h.gap, s.gap});
    }
  }
  CVector flip(2);
  flip << 1.0, -1.0;
  const double fixed1 = hs_cb_norm(build_crossed_product(trivial_action(make_cyclic(2), c)), scalar_hs_symbol(c, flip)).value;
  CMatrix tri(2, 2);
  tri << 1, 1, 0, 1;
  const double fixed2 = schur_cb_norm(tri).value;
  const bool pass = worst_rel <= 1e-4 && std::abs(fixed1 - 1.0) <= 1e-4 && std::abs(fixed2 - 2.0 / std::sqrt(3.0)) <= 1e-4;
  return {pass, fmt("worst relative difference %.2e (tol 1e-4), ", worst_rel) + fmt("worst gap %.1e, ", worst_gap) +
                    fmt("v=(1,-1): %.8f, ", fixed1) + fmt("triangular: %.8f", fixed2)};
}

Outcome a6() {
  int mismatches = 0, cases = 0;
  double worst_res = 0.0, worst_round = 0.0;
  std::string norms;
  Rng rng(0xA6);
  for (const FiniteGroup& g : {make_cyclic(2), make_cyclic(3)}) {
    const int n = g.order();
    const WeylBasis w = weyl_basis(g);
    const PontryaginPictures p = pontryagin_pictures(w);
    std::vector<std::pair<CMatrix, bool>> maps;
    for (int k = 0; k < n * n; ++k) {
      CMatrix u = CMatrix::Zero(n, n);
      u(k / n, k % n) = 1.0;
      maps.emplace_back(simultaneous_multiplier(w, u), true);
    }
    for (int k = 0; k < 50; ++k) {
      if (k % 2 == 0) maps.emplace_back(simultaneous_multiplier(w, random_matrix(n, n, rng)), true);
      else maps.emplace_back(random_matrix(n * n, n * n, rng), false);
    }
    for (const auto& [s, weyl] : maps) {
      ++cases;
      const SimultaneousReport rep = verify_simultaneous(s, w, p, 1e-10);
      if (!rep.equivalence_holds() || rep.weyl_diagonal != weyl) ++mismatches;
      if (weyl) {
        worst_res = std::max({worst_res, rep.hs_translation, rep.module_translation, rep.hs_dual, rep.module_dual});
        const CMatrix u = bisymbol_roundtrip(s, w);
        worst_round = std::max(worst_round, max_abs_diff(simultaneous_multiplier(w, u), s));
      }
    }
    // Reported only: cb norm of S against the Schur multiplier of u on G^ x G.
    const CMatrix u = random_matrix(n, n, rng);
    const double ns = cb_norm(CbMap(n, simultaneous_multiplier(w, u))).value;
    const double nu = schur_cb_norm(u).value;
    norms += fmt(" |S|cb=%.4f", ns) + fmt(" vs |u|schur=%.4f;", nu);
  }
  const bool pass = mismatches == 0 && worst_res <= 1e-10 && worst_round <= 1e-10;
  return {pass, std::to_string(cases) + " maps, " + std::to_string(mismatches) + " mismatches, " +
                    fmt("residual %.2e, ", worst_res) + fmt("roundtrip %.2e (tol 1e-10);", worst_round) + norms};
}

SchurSymbol cp_symbol(const FdVnAlgebra& alg, int n, Rng& rng) {
  const int d = alg.total_dim();
  std::vector<CMatrix> v;
  for (int x = 0; x < n; ++x) v.push_back(random_matrix(2 * d, d, rng));
  return make_symbol(n, [&](int x, int y) {
    std::vector<CMatrix> l, r;
    for (int k = 0; k < 2; ++k) {
      l.push_back(v[static_cast<std::size_t>(y)].block(k * d, 0, d, d).adjoint());
      r.push_back(v[static_cast<std::size_t>(x)].block(k * d, 0, d, d).adjoint());
    }
    return CbMap::from_kraus(l, r);
  });
}

Outcome a7() {
  const FdVnAlgebra m2({2});
  Rng rng(0xA7);
  double worst_rec = 0.0, worst_short = 0.0, worst_cp_ratio = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const SchurSymbol phi = random_symbol(m2, 3, rng);
    const DilationTriple t = dilation_factorize(schur_map(m2, phi), 1e-8);
    for (int k = 0; k < m2.dim(); ++k) {
      const CMatrix a = m2.basis_element(k);
      const CMatrix rho = kron(a, identity(t.multiplicity));
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
          worst_rec = std::max(worst_rec, max_abs_diff(t.w[static_cast<std::size_t>(y)].adjoint() * rho * t.v[static_cast<std::size_t>(x)],
                                                       phi.at(x, y).apply(a)));
    }
    worst_short = std::max(worst_short, schur_symbol_cb_norm(phi).value - t.certificate());
  }
  for (int trial = 0; trial < 20; ++trial) {
    const SchurSymbol phi = cp_symbol(m2, 3, rng);
    const double sdp = schur_symbol_cb_norm(phi).value;
    const double cert = dilation_factorize(schur_map(m2, phi), 1e-8).certificate();
    worst_short = std::max(worst_short, sdp - cert);
    worst_cp_ratio = std::max(worst_cp_ratio, std::abs(cert / sdp - 1.0));
  }
  const bool pass = worst_rec <= 1e-8 && worst_short <= 1e-6 && worst_cp_ratio <= 0.1;
  return {pass, fmt("reconstruction %.2e (tol 1e-8), ", worst_rec) + fmt("SDP - certificate %.2e (tol 1e-6), ", worst_short) +
                    fmt("CP certificate/SDP - 1 = %.2e (tol 0.1)", worst_cp_ratio)};
}

struct ModuleFlags {
  bool f, phi, s, sbar;
};

ModuleFlags module_flags(const GroupAction& a, const HsSymbol& f) {
  const ModuleStructure mod = fixed_point_module(a);
  const CrossedProductModel m = build_crossed_product(a);
  ModuleFlags out{true, true, false, false};
  for (const auto& fr : f.fibers) out.f = out.f && is_module_map(fr, mod, a.algebra(), 1e-9).is_module_map;
  for (const auto& e : transfer_symbol(a, f).entries) out.phi = out.phi && is_module_map(e, mod, a.algebra(), 1e-9).is_module_map;
  const CMatrix s = hs_map(m, f);
  out.s = hs_module_check(m, s, lift_module_action(m, mod), 1e-9).is_module_map;
  out.sbar = verify_bimodule(sbar(a, s), &mod).passes(1e-9);
  return out;
}

Outcome a8() {
  const FiniteGroup z2 = make_cyclic(2), z3 = make_cyclic(3);
  CMatrix d3 = CMatrix::Identity(3, 3);
  d3(2, 2) = -1.0;
  const std::vector<GroupAction> actions{
      make_action(z2, FdVnAlgebra({2}), {identity(2), diag2(1.0, -1.0)}),
      make_action(z3, FdVnAlgebra({2}), {identity(2), diag2(1.0, root(1, 3)), diag2(1.0, root(2, 3))}),
      make_action(z2, FdVnAlgebra({3}), {identity(3), d3}),
      trivial_action(z2, FdVnAlgebra({2})),
      make_action(z2, FdVnAlgebra({2, 1}), {identity(3), CMatrix(CMatrix(d3).reverse())}),
  };
  Rng rng(0xA8);
  int agree = 0, flipped = 0, total = 0;
  for (int seed = 0; seed < 2; ++seed) {
    for (const auto& a : actions) {
      ++total;
      const FdVnAlgebra& alg = a.algebra();
      const int dd = alg.total_dim();
      // Module maps for left multiplication by the fixed points: x -> sum_k c_k x d_k with c_k in the
      // relative commutant of the fixed points.
      const std::vector<CMatrix> comm = relative_commutant(alg, fixed_point_basis(a));
      HsSymbol f;
      for (int r = 0; r < a.group().order(); ++r) {
        std::vector<CMatrix> l, rr;
        for (int k = 0; k < 2; ++k) {
          CMatrix ck = CMatrix::Zero(dd, dd);
          for (const auto& b : comm) ck += random_vector(1, rng)(0) * b;
          l.push_back(ck);
          rr.push_back(random_element(alg, rng).adjoint());
        }
        f.fibers.push_back(CbMap::from_kraus(l, rr).compose(CbMap::from_restricted(alg, identity(alg.dim()))));
      }
      const ModuleFlags good = module_flags(a, f);
      if (good.f && good.phi && good.s && good.sbar) ++agree;
      HsSymbol bad = f;
      bad.fibers[1] = CbMap::transpose(dd).compose(CbMap::from_restricted(alg, identity(alg.dim())));
      const ModuleFlags neg = module_flags(a, bad);
      if (!neg.f && !neg.phi && !neg.s && !neg.sbar) ++flipped;
    }
  }
  return {agree == total && flipped == total,
          std::to_string(agree) + "/" + std::to_string(total) + " scenarios agree, " + std::to_string(flipped) + "/" +
              std::to_string(total) + " flipped by a transpose fiber"};
}

Outcome a9() {
  int mismatches = 0, cases = 0;
  for (const FiniteGroup& g : {make_cyclic(1), make_cyclic(2), make_cyclic(3), make_cyclic(4), direct_product(make_cyclic(2), make_cyclic(2))}) {
    const int n = g.order();
    const CrossedProductModel m = build_crossed_product(trivial_action(g, FdVnAlgebra({1})));
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        ++cases;
        // T(lambda_q) = lambda_p.
        VnMap t{CMatrix::Zero(n, n)};
        t.coords(p, q) = 1.0;
        const bool predual = predual_module_residual(t) <= 1e-12;
        const bool hs = verify_hs_condition(m, t.coords, 1e-12).holds;
        const bool diagonal = p == q;
        if (predual != hs || hs != diagonal) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(cases) + " basis maps, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"A1", "Takai generator relations", 10.0, a1},
      {"A2", "transference coherence", 20.0, a2},
      {"A3", "characterization roundtrip", 20.0, a3},
      {"A4", "classical degeneration", 5.0, a4},
      {"A5", "norm transference cross-check", 30.0, a5},
      {"A6", "abelian simultaneous multipliers", 20.0, a6},
      {"A7", "dilation characterization", 15.0, a7},
      {"A8", "module transport", 5.0, a8},
      {"A9", "predual equivalence", 5.0, a9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs <= c.budget_s;
    const bool pass = o.pass && in_budget;
    failures += !pass;
    std::printf("%s %s  %s: %s [%.2f s of %.0f s%s]\n", c.id, pass ? "PASS" : "FAIL", c.title, o.detail.c_str(), secs,
                c.budget_s, in_budget ? "" : ", over budget");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
