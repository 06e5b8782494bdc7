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

#include "schurlab/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>

#include "schurlab/cbnorm.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/pontryagin.hpp"
#include "schurlab/random.hpp"
#include "schurlab/transference.hpp"

namespace schurlab {

using nlohmann::json;

std::string report_schema_version() { return "1.0.0"; }

bool Report::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

json Report::to_json() const {
  json out;
  out["version"] = version;
  out["scenario-hash"] = scenario_hash;
  char seed_buf[24];
  std::snprintf(seed_buf, sizeof seed_buf, "0x%llX", static_cast<unsigned long long>(seed));
  out["seed"] = seed_buf;
  out["checks"] = json::array();
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"tol", c.tol}, {"pass", c.pass}, {"time_ms", c.time_ms}};
    j["residual"] = std::isfinite(c.residual) ? json(c.residual) : json(nullptr);
    out["checks"].push_back(std::move(j));
  }
  out["norms"] = json::array();
  for (const auto& n : norms) out["norms"].push_back({{"kind", n.kind}, {"value", n.value}, {"gap", n.gap}});
  out["artifacts"] = artifacts;
  return out;
}

void write_report(const Report& report, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write report to '" + path + "'");
    out << report.to_json().dump(2) << "\n";
    if (!out) throw InputError("failed while writing report '" + path + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw InputError("cannot move report into place at '" + path + "'");
  }
}

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

class SuiteRunner {
 public:
  SuiteRunner(const Scenario& sc, double tol, std::uint64_t seed, Report& report)
      : sc_(sc), tol_(tol), seed_(seed), report_(report) {}

  void run(const std::string& suite) {
    try {
      if (suite == "takai") takai();
      else if (suite == "schur") schur();
      else if (suite == "herzschur") herzschur();
      else if (suite == "transference") transference();
      else if (suite == "invariance") invariance();
      else if (suite == "pontryagin") pontryagin();
      else if (suite == "norms") norms();
      else throw InputError("unknown suite '" + suite + "'");
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      report_.checks.push_back({suite + ".error", kNan, tol_, false, 0.0});
      report_.artifacts["errors"][suite] = e.what();
    }
  }

 private:
  const FdVnAlgebra& alg() const { return sc_.algebra(); }
  int order() const { return sc_.group.order(); }

  Rng rng_for(const std::string& suite) const {
    std::uint64_t h = seed_;
    for (unsigned char c : suite) h = h * 1099511628211ULL + c;
    return Rng(h);
  }

  void check(const std::string& name, const std::function<double()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    const double res = f();
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report_.checks.push_back({name, res, tol_, std::isfinite(res) && res <= tol_, ms});
  }

  const CrossedProductModel& model() {
    if (!model_) model_ = build_crossed_product(sc_.action);
    return *model_;
  }
  const DualityIso& phi() {
    if (!phi_) phi_ = takai_phi(sc_.action);
    return *phi_;
  }

  HsSymbol fiber_symbol(Rng& rng) {
    if (sc_.hs_symbol) return *sc_.hs_symbol;
    HsSymbol f;
    for (int r = 0; r < order(); ++r) f.fibers.push_back(random_map_on(alg(), rng));
    return f;
  }

  void takai() {
    const DualityIso& iso = phi();
    const auto& a = sc_.action;
    const int d = alg().total_dim();
    const int n = order();
    report_.artifacts["takai"] = {{"rank", iso.rank()},
                                  {"required_rank", alg().dim() * n * n},
                                  {"crossed_product_dim", alg().dim() * n},
                                  {"words", iso.words().size()}};
    check("takai.rank", [&] { return static_cast<double>(alg().dim() * n * n - iso.rank()); });
    check("takai.isomorphism", [&] { return verify_duality_iso(iso, 200, seed_).worst(); });
    check("takai.generators", [&] {
      double worst = 0.0;
      for (int i = 0; i < alg().dim(); ++i) {
        const CMatrix p = pi_alpha(a, alg().basis_element(i));
        worst = std::max(worst, (iso.apply(p) - kron(p, identity(n))).norm());
      }
      for (int r = 0; r < n; ++r) {
        const CMatrix l = left_regular(sc_.group, r);
        worst = std::max(worst, (iso.apply(lambda_tilde(a, r)) - kron(kron(identity(d), l), l)).norm());
      }
      for (int s = 0; s < n; ++s) {
        const CMatrix e = matrix_unit(n, s, s);
        worst = std::max(worst, (iso.apply(kron(identity(d), e)) - kron(identity(d * n), e)).norm());
      }
      return worst;
    });
    check("takai.psi", [&] { return verify_duality_iso(svn_psi(alg(), sc_.group), 200, seed_).worst(); });
  }

  void schur() {
    Rng rng = rng_for("schur");
    const SchurSymbol phi_sym = sc_.schur_symbol
                                    ? *sc_.schur_symbol
                                    : make_symbol(order(), [&](int, int) { return random_map_on(alg(), rng); });
    const AmbientMap s = schur_map(alg(), phi_sym);
    check("schur.bimodule", [&] { return verify_bimodule(s).diagonal_residual; });
    check("schur.extract_roundtrip", [&] { return symbol_distance(extract_symbol(s, tol_), phi_sym, alg()); });
    check("schur.point_mass", [&] {
      double worst = 0.0;
      const int pts = phi_sym.points;
      for (int y = 0; y < pts; ++y) {
        for (int x = 0; x < pts; ++x) {
          const CMatrix a = random_element(alg(), rng);
          const Kernel k = make_kernel(pts, [&](int p, int q) {
            return (p == y && q == x) ? a : CMatrix(CMatrix::Zero(alg().total_dim(), alg().total_dim()));
          });
          const CMatrix lhs = kernel_operator(alg(), apply_symbol(phi_sym, k));
          const CMatrix rhs = s.apply(kernel_operator(alg(), k));
          worst = std::max(worst, (lhs - rhs).norm());
        }
      }
      return worst;
    });
    check("schur.dilation", [&] { return dilation_factorize(s, 1e-8).residual; });
  }

  void herzschur() {
    Rng rng = rng_for("herzschur");
    const HsSymbol f = fiber_symbol(rng);
    const CMatrix s = hs_map(model(), f);
    check("herzschur.condition", [&] { return verify_hs_condition(model(), s, tol_).residual; });
    check("herzschur.extract_roundtrip", [&] { return hs_symbol_distance(extract_hs_symbol(model(), s, tol_), f, alg()); });
    check("herzschur.star_module", [&] { return star_module_residual(model(), s); });
    if (sc_.module) {
      const LiftedModule lifted = lift_module_action(model(), *sc_.module, tol_);
      bool fibers_ok = true;
      for (const auto& fr : f.fibers) fibers_ok = fibers_ok && is_module_map(fr, *sc_.module, alg(), tol_).is_module_map;
      const bool s_ok = hs_module_check(model(), s, lifted, tol_).is_module_map;
      report_.artifacts["herzschur"] = {{"fibers_module_maps", fibers_ok}, {"map_module_map", s_ok}};
      check("herzschur.module_transport", [&] { return fibers_ok == s_ok ? 0.0 : 1.0; });
    }
  }

  void transference() {
    Rng rng = rng_for("transference");
    const HsSymbol f = fiber_symbol(rng);
    const CMatrix s = hs_map(model(), f);
    const AmbientMap sb = sbar(model(), phi(), s);
    const SchurSymbol direct = transfer_symbol(sc_.action, f);
    check("transference.coherence", [&] { return symbol_distance(extract_symbol(sb, tol_), direct, alg()); });
    check("transference.bimodule", [&] { return verify_bimodule(sb).diagonal_residual; });
    check("transference.invariance", [&] { return check_invariance(sb, sc_.action, tol_).residual; });
    check("transference.restrict", [&] { return (restrict_to_crossed(sb, model(), tol_) - s).cwiseAbs().maxCoeff(); });
    if (alg().dim() == 1) {
      CMatrix grid(order(), order());
      for (int x = 0; x < order(); ++x) {
        for (int y = 0; y < order(); ++y) grid(x, y) = direct.at(x, y).restricted(alg())(0, 0);
      }
      report_.artifacts["transferred_grid"] = matrix_to_json(grid);
    }
    if (sc_.module) {
      const auto& mod = *sc_.module;
      bool f_ok = true;
      for (const auto& fr : f.fibers) f_ok = f_ok && is_module_map(fr, mod, alg(), tol_).is_module_map;
      bool phi_ok = true;
      for (const auto& e : direct.entries) phi_ok = phi_ok && is_module_map(e, mod, alg(), tol_).is_module_map;
      const bool s_ok = hs_module_check(model(), s, lift_module_action(model(), mod, tol_), tol_).is_module_map;
      const bool sb_ok = verify_bimodule(sb, &mod).passes(tol_);
      report_.artifacts["module_transport"] = {{"F", f_ok}, {"phi", phi_ok}, {"S", s_ok}, {"Sbar", sb_ok}};
      check("transference.module_transport", [&] { return (f_ok == phi_ok && phi_ok == s_ok && s_ok == sb_ok) ? 0.0 : 1.0; });
    }
  }

  void invariance() {
    Rng rng = rng_for("invariance");
    const SchurSymbol r0 = make_symbol(order(), [&](int, int) { return random_map_on(alg(), rng); });
    const AmbientMap r = invariant_average(schur_map(alg(), r0), sc_.action);
    check("invariance.average", [&] { return check_invariance(r, sc_.action, tol_).residual; });
    check("invariance.idempotent", [&] { return invariant_average(r, sc_.action).distance(r); });
    check("invariance.bimodule", [&] { return verify_bimodule(r).diagonal_residual; });
    check("invariance.roundtrip", [&] { return sbar(model(), phi(), restrict_to_crossed(r, model(), tol_)).distance(r); });
  }

  void pontryagin() {
    if (!sc_.group.abelian()) {
      report_.artifacts["pontryagin"] = "skipped: group is not abelian";
      return;
    }
    Rng rng = rng_for("pontryagin");
    const int n = order();
    const WeylBasis w = weyl_basis(sc_.group);
    const PontryaginPictures pics = pontryagin_pictures(w);
    const CMatrix u = sc_.bisymbol ? *sc_.bisymbol : random_matrix(n, n, rng);
    const CMatrix s = simultaneous_multiplier(w, u);
    check("pontryagin.commutation", [&] { return w.commutation_residual; });
    const SimultaneousReport rep = verify_simultaneous(s, w, pics, tol_);
    report_.artifacts["pontryagin"] = {{"flags", {rep.flags[0], rep.flags[1], rep.flags[2], rep.flags[3]}},
                                       {"weyl_diagonal", rep.weyl_diagonal},
                                       {"equivalence", rep.equivalence_holds()}};
    check("pontryagin.simultaneous", [&] {
      return std::max({rep.hs_translation, rep.module_translation, rep.hs_dual, rep.module_dual, rep.weyl_offdiagonal});
    });
    check("pontryagin.roundtrip", [&] { return (bisymbol_roundtrip(s, w, tol_) - u).cwiseAbs().maxCoeff(); });
    if (n > 1) {
      const CMatrix fu = w.dual.fourier_unitary();
      const CMatrix sf = vec_map_from_function(n, [&](const CMatrix& x) { return CMatrix(fu * x * fu.adjoint()); });
      const SimultaneousReport neg = verify_simultaneous(sf, w, pics, tol_);
      check("pontryagin.fourier_rejected", [&] {
        return (neg.flags[0] || neg.flags[2] || neg.weyl_diagonal || !neg.equivalence_holds()) ? 1.0 : 0.0;
      });
    }
  }

  void norms() {
    Rng rng = rng_for("norms");
    double worst_gap = 0.0;
    auto record = [&](const std::string& kind, const NormResult& r) {
      report_.norms.push_back({kind, r.value, r.gap});
      worst_gap = std::max(worst_gap, r.gap / (1.0 + std::abs(r.value)));
    };
    if (sc_.scalar_grid) record("schur", schur_cb_norm(*sc_.scalar_grid));
    if (sc_.schur_symbol) record("schur_symbol", schur_symbol_cb_norm(*sc_.schur_symbol));
    if (sc_.map) record("cb", cb_norm(*sc_.map));
    const int side = alg().total_dim() * alg().total_dim() * order();
    if (side <= kDefaultNormSdpCap) {
      const HsSymbol f = fiber_symbol(rng);
      record("hs", hs_cb_norm(model(), f));
    }
    check("norms.gap", [&] { return worst_gap <= 1e-6 ? 0.0 : worst_gap; });
  }

  const Scenario& sc_;
  double tol_;
  std::uint64_t seed_;
  Report& report_;
  std::optional<CrossedProductModel> model_;
  std::optional<DualityIso> phi_;
};

}  // namespace

Report run_suites(const Scenario& sc, const std::vector<std::string>& suites, double tol, std::uint64_t seed) {
  Report report;
  report.version = report_schema_version();
  report.scenario_hash = scenario_hash(sc.source);
  report.seed = seed;
  std::vector<std::string> selected = suites.empty() ? sc.suites : suites;
  if (selected.empty()) selected = {"takai", "schur", "herzschur", "transference", "invariance", "pontryagin", "norms"};
  SuiteRunner runner(sc, tol, seed, report);
  for (const auto& s : selected) runner.run(s);
  return report;
}

}  // namespace schurlab
