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

// Scenario documents (JSON). Complex numbers are written as a number or as
// [re, im]; matrices as arrays of rows.
//
//   {
//     "name": "z2-m2",
//     "group":   {"type": "cyclic", "n": 2},
//     "algebra": {"blocks": [2]},
//     "action":  {"kind": "unitaries", "unitaries": [M, M], "block_perms": [[0], [0]]},
//     "module":  {"kind": "fixed_points"},
//     "F": {"1": {"kind": "transpose"}},
//     "tol": 1e-9,
//     "suites": ["takai", "transference"]
//   }

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schurlab/fdvn.hpp"
#include "schurlab/herzschur.hpp"
#include "schurlab/schur.hpp"

namespace schurlab {

struct Scenario {
  std::string name;
  FiniteGroup group;
  GroupAction action;
  std::optional<ModuleStructure> module;
  std::optional<HsSymbol> hs_symbol;
  std::optional<SchurSymbol> schur_symbol;
  std::optional<CMatrix> scalar_grid;
  std::optional<CMatrix> bisymbol;
  std::optional<CbMap> map;
  double tol = 1e-9;
  std::vector<std::string> suites;
  nlohmann::json source;

  const FdVnAlgebra& algebra() const { return action.algebra(); }
};

/// Throws InputError (or the validation error of the failing component) on malformed input.
Scenario parse_scenario(const nlohmann::json& doc);
/// Reads and parses a file; throws InputError when it cannot be read or is not JSON.
Scenario load_scenario(const std::string& path);

FiniteGroup parse_group(const nlohmann::json& spec);
cplx parse_complex(const nlohmann::json& v);
CMatrix parse_matrix(const nlohmann::json& v);
CbMap parse_cbmap(const nlohmann::json& spec, const FdVnAlgebra& alg);

nlohmann::json complex_to_json(cplx z);
nlohmann::json matrix_to_json(const CMatrix& m);

/// FNV-1a 64-bit hash of the canonical (sorted-key, compact) dump, as 16 hex digits.
std::string scenario_hash(const nlohmann::json& doc);

}  // namespace schurlab
