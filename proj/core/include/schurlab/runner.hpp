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

// Verification suites over a scenario and the machine-readable report.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schurlab/scenario.hpp"

namespace schurlab {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Report format version, embedded in every report.
std::string report_schema_version();

struct CheckRecord {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  double time_ms = 0.0;
};

struct NormRecord {
  std::string kind;
  double value = 0.0;
  double gap = 0.0;
};

struct Report {
  std::string version;
  std::string scenario_hash;
  std::uint64_t seed = kDefaultSeed;
  std::vector<CheckRecord> checks;
  std::vector<NormRecord> norms;
  nlohmann::json artifacts = nlohmann::json::object();

  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// Suites run in the order given; an empty list means the scenario's own
/// list, or every suite that applies when that is empty too.
Report run_suites(const Scenario& sc, const std::vector<std::string>& suites, double tol,
                  std::uint64_t seed = kDefaultSeed);

/// Writes to a temporary sibling and renames it into place.
void write_report(const Report& report, const std::string& path);

}  // namespace schurlab
