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

// schurlab command-line driver: run scenario suites, compute norms, print demos.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "schurlab/cbnorm.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/herzschur.hpp"
#include "schurlab/pontryagin.hpp"
#include "schurlab/runner.hpp"
#include "schurlab/scenario.hpp"
#include "schurlab/transference.hpp"

namespace {

using namespace schurlab;

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

std::string format_entry(cplx z) {
  const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  char buf[64];
  if (im == 0.0) std::snprintf(buf, sizeof buf, "%g", re);
  else if (re == 0.0) std::snprintf(buf, sizeof buf, "%gi", im);
  else std::snprintf(buf, sizeof buf, "%g%+gi", re, im);
  return buf;
}

std::string format_matrix(const CMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << (i ? ",[" : "[");
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << format_entry(m(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 16);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InputError("seed '" + text + "' is not a hexadecimal number");
  return v;
}

int cmd_run(const std::string& path, const std::string& suites, double tol, const std::string& seed_text,
            const std::string& report_path, bool json_out) {
  std::optional<Scenario> loaded;
  std::uint64_t seed = kDefaultSeed;
  try {
    loaded.emplace(load_scenario(path));
    if (!seed_text.empty()) seed = parse_seed(seed_text);
  } catch (const std::exception& e) {
    std::cerr << "schurlab: " << e.what() << "\n";
    return kExitInput;
  }
  const Scenario& sc = *loaded;
  Report report;
  try {
    report = run_suites(sc, split_list(suites), tol > 0.0 ? tol : sc.tol, seed);
  } catch (const InputError& e) {
    std::cerr << "schurlab: " << e.what() << "\n";
    return kExitInput;
  }
  if (!report_path.empty()) write_report(report, report_path);
  if (json_out) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    for (const auto& c : report.checks) {
      std::printf("%-4s %-34s residual=%.3e tol=%.1e %.1fms\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                  c.tol, c.time_ms);
    }
    for (const auto& n : report.norms) std::printf("norm %-12s value=%.10g gap=%.2e\n", n.kind.c_str(), n.value, n.gap);
    if (report.artifacts.contains("transferred_grid")) {
      std::printf("transferred grid %s\n", format_matrix(parse_matrix(report.artifacts["transferred_grid"])).c_str());
    }
  }
  return report.all_pass() ? 0 : kExitFailure;
}

int cmd_norm(const std::string& kind, const std::string& path, double tol, bool json_out) {
  std::optional<Scenario> loaded;
  try {
    loaded.emplace(load_scenario(path));
  } catch (const std::exception& e) {
    std::cerr << "schurlab: " << e.what() << "\n";
    return kExitInput;
  }
  const Scenario& sc = *loaded;
  SdpOptions opts;
  opts.tol = tol;
  NormResult r;
  try {
    if (kind == "schur") {
      if (sc.scalar_grid) r = schur_cb_norm(*sc.scalar_grid, opts);
      else if (sc.schur_symbol) r = schur_symbol_cb_norm(*sc.schur_symbol, opts);
      else throw InputError("scenario has no schur or schur_scalar symbol");
    } else if (kind == "cb") {
      if (!sc.map) throw InputError("scenario has no map");
      r = cb_norm(*sc.map, opts);
    } else {
      if (!sc.hs_symbol) throw InputError("scenario has no F or F_scalar symbol");
      r = hs_cb_norm(build_crossed_product(sc.action), *sc.hs_symbol, opts);
    }
  } catch (const InputError& e) {
    std::cerr << "schurlab: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "schurlab: " << e.what() << "\n";
    return kExitFailure;
  }
  if (json_out) {
    nlohmann::json j{{"kind", kind}, {"value", r.value}, {"primal", r.lower}, {"dual", r.value},
                     {"gap", r.gap},  {"iterations", r.iterations}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%s cb norm %.10g (primal %.10g, dual %.10g, gap %.2e)\n", kind.c_str(), r.value, r.lower, r.value,
                r.gap);
  }
  return 0;
}

void demo_z2_transference() {
  const FiniteGroup g = make_cyclic(2);
  const FdVnAlgebra alg({1});
  const GroupAction action = trivial_action(g, alg);
  const CrossedProductModel model = build_crossed_product(action);
  CVector v(2);
  v << 2.0, -1.0;
  const HsSymbol f = scalar_hs_symbol(alg, v);
  const AmbientMap sb = sbar(model, takai_phi(action), hs_map(model, f));
  const SchurSymbol phi = extract_symbol(sb);
  CMatrix grid(2, 2);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) grid(x, y) = phi.at(x, y).restricted(alg)(0, 0);
  }
  std::printf("G = Z/2, trivial action on C, F = v = (2, -1)\n");
  std::printf("S = Herz-Schur multiplier of v on VN(Z/2)\n");
  std::printf("transferred grid phi(x,y) = v(y x^-1): %s\n", format_matrix(grid).c_str());
  std::printf("invariance residual %.2e\n", check_invariance(sb, action).residual);
}

void demo_z3_weyl() {
  const WeylBasis w = weyl_basis(make_cyclic(3));
  std::printf("Weyl basis m_gamma lambda_r on l2(Z/3)\n");
  for (int gamma = 0; gamma < 3; ++gamma) {
    for (int r = 0; r < 3; ++r) {
      std::printf("gamma=%d r=%d %s\n", gamma, r, format_matrix(w.at(gamma, r)).c_str());
    }
  }
  std::printf("commutation residual %.2e\n", w.commutation_residual);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"schurlab: Herz-Schur and Schur multipliers of finite group actions"};
  app.require_subcommand(1);

  std::string scenario, suites, seed, report_path;
  double tol = 0.0;
  bool json_out = false;
  auto* run = app.add_subcommand("run", "Run verification suites on a scenario");
  run->add_option("--scenario", scenario, "Scenario JSON file")->required();
  run->add_option("--suite", suites, "Comma-separated suites (default: all applicable)");
  run->add_option("--tol", tol, "Residual tolerance (default: scenario tol)");
  run->add_option("--seed", seed, "Hex seed for random symbols (default 0x5EED)");
  run->add_option("--report", report_path, "Write JSON report here");
  run->add_flag("--json", json_out, "Print the JSON report to stdout");

  std::string kind = "schur", norm_scenario;
  double norm_tol = 1e-6;
  bool norm_json = false;
  auto* norm = app.add_subcommand("norm", "Compute a cb norm by semidefinite programming");
  norm->add_option("--kind", kind, "schur | cb | hs")->check(CLI::IsMember({"schur", "cb", "hs"}));
  norm->add_option("--scenario", norm_scenario, "Scenario JSON file")->required();
  norm->add_option("--tol", norm_tol, "Solver tolerance");
  norm->add_flag("--json", norm_json, "Print JSON");

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "Print a worked example");
  demo->add_option("name", demo_name, "z2-transference | z3-weyl")->required();

  app.add_subcommand("version", "Print the report schema version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*run) return cmd_run(scenario, suites, tol, seed, report_path, json_out);
    if (*norm) return cmd_norm(kind, norm_scenario, norm_tol, norm_json);
    if (*demo) {
      if (demo_name == "z2-transference") demo_z2_transference();
      else if (demo_name == "z3-weyl") demo_z3_weyl();
      else {
        std::cerr << "schurlab: unknown demo '" << demo_name << "' (known: z2-transference, z3-weyl)\n";
        return kExitInput;
      }
      return 0;
    }
    std::cout << report_schema_version() << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "schurlab: " << e.what() << "\n";
    return kExitFailure;
  }
}
