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

#include "schurlab/scenario.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "schurlab/errors.hpp"

namespace schurlab {

using nlohmann::json;

namespace {

const std::set<std::string>& known_suites() {
  static const std::set<std::string> names{"takai",      "schur",      "herzschur", "transference",
                                           "invariance", "pontryagin", "norms"};
  return names;
}

int get_int(const json& spec, const char* key) {
  if (!spec.contains(key) || !spec.at(key).is_number_integer()) {
    throw InputError(std::string("expected integer field '") + key + "'");
  }
  return spec.at(key).get<int>();
}

FdVnAlgebra parse_algebra(const json& spec) {
  if (spec.is_null()) return FdVnAlgebra({1});
  if (!spec.contains("blocks") || !spec.at("blocks").is_array()) throw InputError("algebra needs a 'blocks' array");
  std::vector<int> blocks;
  for (const auto& b : spec.at("blocks")) {
    if (!b.is_number_integer()) throw InputError("algebra blocks must be integers");
    blocks.push_back(b.get<int>());
  }
  return FdVnAlgebra(blocks);
}

std::vector<std::vector<int>> parse_perms(const json& v) {
  std::vector<std::vector<int>> perms;
  for (const auto& row : v) {
    std::vector<int> p;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw InputError("block permutations must be integers");
      p.push_back(e.get<int>());
    }
    perms.push_back(std::move(p));
  }
  return perms;
}

GroupAction parse_action(const json& spec, const FiniteGroup& g, const json& alg_spec) {
  const std::string kind = spec.is_null() ? "trivial" : spec.value("kind", "trivial");
  if (kind == "translation") {
    GroupAction act = translation_action(g);
    if (!alg_spec.is_null() && !(parse_algebra(alg_spec) == act.algebra())) {
      throw InputError("translation action requires the diagonal algebra of the group");
    }
    return act;
  }
  const FdVnAlgebra alg = parse_algebra(alg_spec);
  if (kind == "trivial") return trivial_action(g, alg);
  if (kind == "unitaries") {
    std::vector<CMatrix> us;
    for (const auto& m : spec.at("unitaries")) us.push_back(parse_matrix(m));
    std::vector<std::vector<int>> perms;
    if (spec.contains("block_perms")) perms = parse_perms(spec.at("block_perms"));
    return make_action(g, alg, us, perms);
  }
  if (kind == "power") {
    // alpha_k = Ad(U^k) for the cyclic group, element k being the k-th power of the generator.
    const CMatrix u = parse_matrix(spec.at("unitary"));
    std::vector<CMatrix> us{identity(static_cast<int>(u.rows()))};
    for (int k = 1; k < g.order(); ++k) us.push_back(us.back() * u);
    for (int k = 0; k < g.order(); ++k) {
      if (g.mul(1 % g.order(), k) != (k + 1) % g.order()) throw InputError("'power' actions need a cyclic group");
    }
    return make_action(g, alg, us);
  }
  throw InputError("unknown action kind '" + kind + "'");
}

ModuleStructure parse_module(const json& spec, const GroupAction& action) {
  const std::string kind = spec.value("kind", "scalars");
  const int d = action.algebra().total_dim();
  if (kind == "scalars") return scalar_module(d);
  if (kind == "fixed_points") return fixed_point_module(action);
  if (kind == "left_multiplication") {
    std::vector<CMatrix> elems;
    for (const auto& m : spec.at("elements")) {
      CMatrix e = parse_matrix(m);
      action.algebra().require_member(e, 1e-10, "module element");
      elems.push_back(std::move(e));
    }
    return left_multiplication_module(elems, "left_multiplication");
  }
  throw InputError("unknown module kind '" + kind + "'");
}

}  // namespace

cplx parse_complex(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw InputError("expected a complex number (number or [re, im]), got " + v.dump());
}

CMatrix parse_matrix(const json& v) {
  if (!v.is_array() || v.empty() || !v[0].is_array()) throw InputError("expected a matrix as an array of rows");
  const auto rows = static_cast<int>(v.size());
  const auto cols = static_cast<int>(v[0].size());
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!v[static_cast<std::size_t>(i)].is_array() || static_cast<int>(v[static_cast<std::size_t>(i)].size()) != cols) {
      throw InputError("matrix rows have different lengths");
    }
    for (int j = 0; j < cols; ++j) m(i, j) = parse_complex(v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

FiniteGroup parse_group(const json& spec) {
  const std::string type = spec.value("type", "");
  if (type == "cyclic") return make_cyclic(get_int(spec, "n"));
  if (type == "symmetric") return make_symmetric(get_int(spec, "n"));
  if (type == "product") {
    if (!spec.contains("factors") || !spec.at("factors").is_array() || spec.at("factors").empty()) {
      throw InputError("product group needs a nonempty 'factors' array");
    }
    FiniteGroup g = parse_group(spec.at("factors")[0]);
    for (std::size_t k = 1; k < spec.at("factors").size(); ++k) g = direct_product(g, parse_group(spec.at("factors")[k]));
    return g;
  }
  if (type == "table") {
    std::vector<std::vector<int>> cayley;
    for (const auto& row : spec.at("cayley")) {
      std::vector<int> r;
      for (const auto& e : row) {
        if (!e.is_number_integer()) throw InputError("Cayley table entries must be integers");
        r.push_back(e.get<int>());
      }
      cayley.push_back(std::move(r));
    }
    return FiniteGroup(std::move(cayley));
  }
  throw InputError("unknown group type '" + type + "'");
}

CbMap parse_cbmap(const json& spec, const FdVnAlgebra& alg) {
  const int d = alg.total_dim();
  const std::string kind = spec.value("kind", "");
  if (kind == "identity") return CbMap::identity(d);
  if (kind == "zero") return CbMap::zero(d);
  if (kind == "transpose") return CbMap::transpose(d);
  if (kind == "scalar") return CbMap::scalar(d, parse_complex(spec.at("c")));
  if (kind == "conjugation") return CbMap::conjugation(parse_matrix(spec.at("u")));
  if (kind == "kraus") {
    std::vector<CMatrix> left;
    std::vector<CMatrix> right;
    for (const auto& m : spec.at("left")) left.push_back(parse_matrix(m));
    for (const auto& m : spec.at("right")) right.push_back(parse_matrix(m));
    CbMap map = CbMap::from_kraus(left, right);
    if (map.dim() != d) throw ShapeError("Kraus operators do not match the algebra");
    return map;
  }
  if (kind == "superoperator") return CbMap(d, parse_matrix(spec.at("matrix")));
  if (kind == "restricted") return CbMap::from_restricted(alg, parse_matrix(spec.at("matrix")));
  throw InputError("unknown map kind '" + kind + "'");
}

json complex_to_json(cplx z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string scenario_hash(const json& doc) {
  const std::string text = doc.dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Scenario parse_scenario(const json& doc) {
  try {
    if (!doc.is_object()) throw InputError("scenario must be a JSON object");
    if (!doc.contains("group")) throw InputError("scenario needs a 'group'");
    FiniteGroup g = parse_group(doc.at("group"));
    GroupAction action = parse_action(doc.value("action", json()), g, doc.value("algebra", json()));
    const auto& alg = action.algebra();
    const int n = g.order();

    std::optional<ModuleStructure> module;
    if (doc.contains("module")) module = parse_module(doc.at("module"), action);

    std::optional<HsSymbol> hs;
    if (doc.contains("F") && doc.contains("F_scalar")) throw InputError("give either 'F' or 'F_scalar', not both");
    if (doc.contains("F")) {
      HsSymbol f = identity_hs_symbol(alg, n);
      const json& spec = doc.at("F");
      if (spec.is_array()) {
        if (static_cast<int>(spec.size()) != n) throw InputError("'F' needs one entry per group element");
        for (int r = 0; r < n; ++r) f.fibers[static_cast<std::size_t>(r)] = parse_cbmap(spec[static_cast<std::size_t>(r)], alg);
      } else if (spec.is_object()) {
        for (const auto& [key, val] : spec.items()) {
          int r = -1;
          try {
            r = std::stoi(key);
          } catch (const std::exception&) {
            throw InputError("'F' keys must be group element indices, got '" + key + "'");
          }
          if (r < 0 || r >= n) throw InputError("'F' key " + key + " is not a group element");
          f.fibers[static_cast<std::size_t>(r)] = parse_cbmap(val, alg);
        }
      } else {
        throw InputError("'F' must be an array or an object");
      }
      hs = std::move(f);
    }
    if (doc.contains("F_scalar")) {
      const json& v = doc.at("F_scalar");
      if (!v.is_array() || static_cast<int>(v.size()) != n) throw InputError("'F_scalar' needs one value per group element");
      CVector vals(n);
      for (int r = 0; r < n; ++r) vals(r) = parse_complex(v[static_cast<std::size_t>(r)]);
      hs = scalar_hs_symbol(alg, vals);
    }

    std::optional<SchurSymbol> schur;
    std::optional<CMatrix> grid;
    if (doc.contains("schur")) {
      const json& v = doc.at("schur");
      if (!v.is_array() || v.empty()) throw InputError("'schur' must be a square grid of maps");
      const int pts = static_cast<int>(v.size());
      for (const auto& row : v) {
        if (!row.is_array() || static_cast<int>(row.size()) != pts) throw InputError("'schur' grid is not square");
      }
      schur = make_symbol(pts, [&](int x, int y) {
        return parse_cbmap(v[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)], alg);
      });
    }
    if (doc.contains("schur_scalar")) {
      grid = parse_matrix(doc.at("schur_scalar"));
      if (grid->rows() != grid->cols()) throw InputError("'schur_scalar' grid is not square");
    }

    std::optional<CMatrix> u;
    if (doc.contains("u")) {
      u = parse_matrix(doc.at("u"));
      if (u->rows() != n || u->cols() != n) throw InputError("'u' must be |G| x |G|");
    }
    std::optional<CbMap> map;
    if (doc.contains("map")) map = parse_cbmap(doc.at("map"), alg);

    double tol = 1e-9;
    if (doc.contains("tol")) {
      if (!doc.at("tol").is_number() || doc.at("tol").get<double>() <= 0) throw InputError("'tol' must be positive");
      tol = doc.at("tol").get<double>();
    }
    std::vector<std::string> suites;
    if (doc.contains("suites")) {
      for (const auto& s : doc.at("suites")) {
        const std::string name = s.get<std::string>();
        if (!known_suites().count(name)) throw InputError("unknown suite '" + name + "'");
        suites.push_back(name);
      }
    }
    return Scenario{doc.value("name", "scenario"), std::move(g), std::move(action), std::move(module),
                    std::move(hs), std::move(schur), std::move(grid), std::move(u), std::move(map), tol,
                    std::move(suites), doc};
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed scenario: ") + e.what());
  }
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError("scenario file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_scenario(doc);
}

}  // namespace schurlab
