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

#include <doctest.h>

#include "oracles.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/fdvn.hpp"
#include "schurlab/random.hpp"

using namespace schurlab;
using schurlab::test::dist;
using schurlab::test::unit;

namespace {

// Choi matrix of X -> sum_k L_k X R_k^* straight from the definition.
CMatrix kraus_choi(const std::vector<CMatrix>& l, const std::vector<CMatrix>& r) {
  const int d = static_cast<int>(l[0].cols());
  const int out = static_cast<int>(l[0].rows());
  CMatrix c = CMatrix::Zero(d * out, d * out);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      CMatrix img = CMatrix::Zero(out, out);
      for (std::size_t k = 0; k < l.size(); ++k) img += l[k] * unit(d, i, j) * r[k].adjoint();
      c.block(i * out, j * out, out, out) = img;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("algebra shapes") {
  const FdVnAlgebra c({1});
  CHECK(c.dim() == 1);
  CHECK(c.total_dim() == 1);
  const FdVnAlgebra m2({2});
  CHECK(m2.dim() == 4);
  CHECK(m2.contains(CMatrix::Ones(2, 2)));
  const FdVnAlgebra d2({1, 1});
  CHECK(d2.dim() == 2);
  CHECK(d2.total_dim() == 2);
  CHECK(d2.contains(test::diag_of({1.0, 2.0})));
  CHECK_FALSE(d2.contains(unit(2, 0, 1)));
  CHECK_THROWS_AS(d2.require_member(unit(2, 0, 1), 1e-10, "x"), DomainError);
  const FdVnAlgebra mixed({2, 1});
  CHECK(mixed.dim() == 5);
  CHECK(mixed.closure_residual() == 0.0);
  CHECK(mixed.index_of(0, 2) == -1);
  CHECK_THROWS_AS(FdVnAlgebra({0}), InputError);
  CHECK_THROWS_AS(FdVnAlgebra({9, 8}), SizeError);
  CHECK_THROWS_AS(FdVnAlgebra({2, 2}, 3), SizeError);
}

TEST_CASE("algebra coordinates roundtrip") {
  const FdVnAlgebra alg({2, 1});
  Rng rng(1);
  const CMatrix x = random_element(alg, rng);
  double res = 1.0;
  const CVector c = alg.coords(x, &res);
  CHECK(res < 1e-15);
  CHECK(dist(alg.element(c), x) == 0.0);
  for (int k = 0; k < alg.dim(); ++k) {
    const auto [i, j] = alg.position(k);
    CHECK(dist(alg.basis_element(k), unit(3, i, j)) == 0.0);
  }
}

TEST_CASE("maps from Kraus pairs") {
  CHECK(dist(CbMap::from_kraus({identity(2)}, {identity(2)}).superoperator(), identity(4)) == 0.0);
  Rng rng(12);
  const CMatrix u = random_unitary(3, rng);
  const CbMap ad = CbMap::from_kraus({u}, {u});
  const CMatrix x = random_matrix(3, 3, rng), y = random_matrix(3, 3, rng);
  CHECK(dist(ad.apply(x * y), ad.apply(x) * ad.apply(y)) < 1e-13);
  CHECK(dist(ad.apply(x.adjoint()), ad.apply(x).adjoint()) < 1e-13);
  CHECK(dist(ad.apply(identity(3)), identity(3)) < 1e-13);
  CHECK(dist(ad.superoperator(), CbMap::conjugation(u).superoperator()) < 1e-14);

  const std::vector<CMatrix> l{random_matrix(2, 2, rng), random_matrix(2, 2, rng)};
  const std::vector<CMatrix> r{random_matrix(2, 2, rng), random_matrix(2, 2, rng)};
  const CbMap m = cbmap_from_kraus(l, r);
  CHECK(dist(m.choi(), kraus_choi(l, r)) < 1e-13);
  CHECK(dist(choi(m), kraus_choi(l, r)) < 1e-13);
  CHECK_THROWS_AS(CbMap::from_kraus({identity(2)}, {identity(3)}), ShapeError);
}

TEST_CASE("map algebra is linear and composes in order") {
  Rng rng(13);
  const FdVnAlgebra alg({2});
  const CbMap a = random_map_on(alg, rng), b = random_map_on(alg, rng);
  const CMatrix x = random_matrix(2, 2, rng);
  CHECK(dist(a.compose(b).apply(x), a.apply(b.apply(x))) < 1e-13);
  CHECK(dist((a + b).apply(x), a.apply(x) + b.apply(x)) < 1e-13);
  CHECK(dist((a - b).apply(x), a.apply(x) - b.apply(x)) < 1e-13);
  CHECK(dist((a * cplx(0, 2)).apply(x), cplx(0, 2) * a.apply(x)) < 1e-13);
  CHECK(dist(CbMap::transpose(2).apply(x), x.transpose()) == 0.0);
  CHECK(dist(CbMap::scalar(2, 3.0).apply(x), 3.0 * x) < 1e-15);
  CHECK(dist(CbMap::zero(2).apply(x), CMatrix::Zero(2, 2)) == 0.0);
}

TEST_CASE("restricted coordinates") {
  const FdVnAlgebra alg({1, 1});
  Rng rng(14);
  const CMatrix r = random_matrix(2, 2, rng);
  const CbMap m = CbMap::from_restricted(alg, r);
  CHECK(dist(m.restricted(alg), r) < 1e-15);
  CHECK(m.preservation_residual(alg) == 0.0);
  // Zero on the off-diagonal complement.
  CHECK(dist(m.apply(unit(2, 0, 1)), CMatrix::Zero(2, 2)) == 0.0);
  CHECK(CbMap::transpose(2).preservation_residual(alg) == 0.0);
  CHECK(CbMap::conjugation(test::naive_kron(CMatrix::Ones(1, 1), CMatrix::Ones(2, 2)) / 2.0).preservation_residual(alg) > 0.1);
}

TEST_CASE("complete positivity") {
  CHECK(CbMap::identity(2).is_completely_positive());
  CHECK_FALSE(CbMap::transpose(2).is_completely_positive());
  Rng rng(15);
  CHECK(CbMap::conjugation(random_matrix(3, 3, rng)).is_completely_positive());
}

TEST_CASE("module maps") {
  const FdVnAlgebra m2({2});
  const ModuleStructure left = left_multiplication_module({unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)});
  CHECK(is_module_map(CbMap::identity(2), left, m2).is_module_map);
  Rng rng(16);
  const CMatrix u = random_unitary(2, rng);
  CHECK(is_module_map(CbMap::conjugation(u), scalar_module(2), m2).is_module_map);
  const ModuleCheck t = is_module_map(CbMap::transpose(2), left, m2);
  CHECK_FALSE(t.is_module_map);
  CHECK(t.residual > 0.5);
  // Right multiplication commutes with left multiplication.
  const CMatrix b = random_matrix(2, 2, rng);
  CHECK(is_module_map(CbMap::from_kraus({identity(2)}, {b.adjoint()}), left, m2).is_module_map);
  CHECK(left.associativity_residual(m2) < 1e-12);
}

TEST_CASE("actions") {
  const FiniteGroup z2 = make_cyclic(2);
  const FdVnAlgebra m2({2});
  const GroupAction triv = trivial_action(z2, m2);
  CHECK(triv.is_trivial());
  Rng rng(17);
  const CMatrix x = random_matrix(2, 2, rng);
  CHECK(dist(triv.apply(1, x), x) == 0.0);

  const CMatrix d = test::diag_of({1.0, -1.0});
  const GroupAction ad = make_action(z2, m2, {identity(2), d});
  CHECK_FALSE(ad.is_trivial());
  CHECK(dist(ad.apply(1, ad.apply(1, x)), x) < 1e-14);
  CHECK(dist(ad.apply(1, x), d * x * d) < 1e-14);

  const FiniteGroup z3 = make_cyclic(3);
  const GroupAction tr = translation_action(z3);
  CHECK(tr.algebra().blocks() == std::vector<int>{1, 1, 1});
  const CMatrix f = test::diag_of({1.0, 2.0, 5.0});
  // f(r^{-1} s): shifting by r = 1 gives (f(2), f(0), f(1)).
  CHECK(dist(tr.apply(1, f), test::diag_of({5.0, 1.0, 2.0})) < 1e-15);
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) CHECK(dist(tr.apply(r, tr.apply(s, f)), tr.apply(z3.mul(r, s), f)) < 1e-14);

  const FdVnAlgebra d2({1, 1});
  const GroupAction swap = make_action(z2, d2, {identity(2), identity(2)}, {{0, 1}, {1, 0}});
  CHECK(dist(swap.apply(1, test::diag_of({3.0, 4.0})), test::diag_of({4.0, 3.0})) < 1e-15);
}

TEST_CASE("action validation") {
  const FiniteGroup z3 = make_cyclic(3);
  const FdVnAlgebra m2({2});
  const cplx i(0.0, 1.0);
  try {
    make_action(z3, m2, {identity(2), test::diag_of({1.0, i}), test::diag_of({1.0, i})});
    FAIL("non-homomorphism accepted");
  } catch (const ActionError& e) {
    CHECK(e.r() == 1);
    CHECK(e.s() == 1);
  }
  CHECK_THROWS_AS(make_action(z3, m2, {identity(2), 2.0 * identity(2), identity(2)}), InputError);
  CHECK_THROWS_AS(make_action(z3, m2, {identity(2)}), InputError);
  // Ad of a non-block-diagonal unitary leaks out of the diagonal algebra.
  CMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  CHECK_THROWS_AS(make_action(make_cyclic(2), FdVnAlgebra({1, 1}), {identity(2), h}), DomainError);
  try {
    make_action(make_cyclic(2), m2, {test::diag_of({1.0, -1.0}), identity(2)});
    FAIL("alpha_0 != id accepted");
  } catch (const ActionError& e) {
    CHECK(e.r() == 0);
  }
}

TEST_CASE("fixed points and relative commutants") {
  const FdVnAlgebra m2({2});
  const GroupAction ad = make_action(make_cyclic(2), m2, {identity(2), test::diag_of({1.0, -1.0})});
  const std::vector<CMatrix> fixed = fixed_point_basis(ad);
  CHECK(fixed.size() == 2);
  for (const auto& b : fixed) {
    CHECK(dist(ad.apply(1, b), b) < 1e-12);
    CHECK(std::abs(b(0, 1)) + std::abs(b(1, 0)) < 1e-12);
  }
  CHECK(fixed_point_basis(trivial_action(make_cyclic(3), m2)).size() == 4);
  CHECK(fixed_point_basis(translation_action(make_cyclic(3))).size() == 1);

  const std::vector<CMatrix> comm = relative_commutant(m2, {test::diag_of({1.0, 2.0})});
  CHECK(comm.size() == 2);
  CHECK(relative_commutant(m2, {unit(2, 0, 1), unit(2, 1, 0)}).size() == 1);

  const ModuleStructure mod = fixed_point_module(ad);
  CHECK(module_compatibility_residual(ad, mod) < 1e-12);
  const ModuleStructure full = left_multiplication_module({unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)});
  CHECK(module_compatibility_residual(ad, full) > 0.5);
}
