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
#include "schurlab/crossed.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/random.hpp"
#include "schurlab/schur.hpp"

using namespace schurlab;
using schurlab::test::dist;
using schurlab::test::unit;

namespace {

CMatrix zeros(int d) { return CMatrix::Zero(d, d); }

// Block (y, x) of T_k is k(y, x); index p * n + y.
CMatrix naive_kernel_operator(const Kernel& k, int d) {
  const int n = k.points;
  CMatrix t = CMatrix::Zero(d * n, d * n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) t(p * n + y, q * n + x) = k.at(y, x)(p, q);
  return t;
}

SchurSymbol random_symbol(const FdVnAlgebra& alg, int n, Rng& rng) {
  return make_symbol(n, [&](int, int) { return random_map_on(alg, rng); });
}

}  // namespace

TEST_CASE("kernel operators") {
  const FdVnAlgebra m2({2});
  const Kernel zero = make_kernel(3, [](int, int) { return zeros(2); });
  CHECK(dist(kernel_operator(m2, zero), zeros(6)) == 0.0);

  Rng rng(1);
  const Kernel k = make_kernel(3, [&](int, int) { return random_matrix(2, 2, rng); });
  CHECK(dist(kernel_operator(m2, k), naive_kernel_operator(k, 2)) == 0.0);

  const FdVnAlgebra c({1});
  CMatrix grid(2, 2);
  grid << 1, 2, 3, 4;
  const Kernel kc = make_kernel(2, [&](int y, int x) { return CMatrix::Constant(1, 1, grid(y, x)); });
  CHECK(dist(kernel_operator(c, kc), grid) == 0.0);

  const FdVnAlgebra d2({1, 1});
  const Kernel off = make_kernel(1, [](int, int) { return unit(2, 0, 1); });
  CHECK_THROWS_AS(kernel_operator(d2, off), DomainError);
}

TEST_CASE("Dirac kernels rebuild crossed product generators") {
  const FiniteGroup z3 = make_cyclic(3);
  const CMatrix u = test::diag_of({1.0, test::root_of_unity(1, 3)});
  const GroupAction a = make_action(z3, FdVnAlgebra({2}), {identity(2), u, u * u});
  Rng rng(2);
  const CMatrix x = random_matrix(2, 2, rng);
  for (int r = 0; r < 3; ++r) {
    const Kernel k = make_kernel(3, [&](int s, int t) {
      return z3.mul(s, z3.inv(t)) == r ? a.apply(z3.inv(s), x) : zeros(2);
    });
    CHECK(dist(kernel_operator(a.algebra(), k), pi_alpha(a, x) * lambda_tilde(a, r)) < 1e-14);
  }
}

TEST_CASE("symbols act entrywise") {
  const FdVnAlgebra c({1});
  CMatrix cg(2, 2);
  cg << 1, 2, 3, 4;
  const SchurSymbol phi = scalar_symbol(c, cg);
  const Kernel ones = make_kernel(2, [](int, int) { return CMatrix::Ones(1, 1); });
  CMatrix expect(2, 2);
  expect << 1, 3, 2, 4;
  CHECK(dist(kernel_operator(c, apply_symbol(phi, ones)), expect) < 1e-15);

  // Brute force: the point mass at (y, x) is scaled by c(x, y).
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 2; ++x) {
      const Kernel pm = make_kernel(2, [&](int p, int q) { return CMatrix::Constant(1, 1, (p == y && q == x) ? 1.0 : 0.0); });
      CHECK(std::abs(kernel_operator(c, apply_symbol(phi, pm))(y, x) - cg(x, y)) < 1e-15);
    }
  }

  const FdVnAlgebra m2({2});
  Rng rng(3);
  const Kernel k = make_kernel(3, [&](int, int) { return random_matrix(2, 2, rng); });
  const SchurSymbol id = make_symbol(3, [](int, int) { return CbMap::identity(2); });
  CHECK(dist(kernel_operator(m2, apply_symbol(id, k)), kernel_operator(m2, k)) == 0.0);

  const CMatrix u = random_unitary(2, rng);
  const SchurSymbol ad = make_symbol(3, [&](int, int) { return CbMap::conjugation(u); });
  const CMatrix uu = test::naive_kron(u, identity(3));
  CHECK(dist(kernel_operator(m2, apply_symbol(ad, k)), uu * kernel_operator(m2, k) * uu.adjoint()) < 1e-13);
  CHECK_THROWS_AS(apply_symbol(ad, make_kernel(2, [](int, int) { return zeros(2); })), ShapeError);
}

TEST_CASE("Schur maps") {
  const FdVnAlgebra m2({2});
  const SchurSymbol id = make_symbol(3, [](int, int) { return CbMap::identity(2); });
  const AmbientMap s = schur_map(m2, id);
  CHECK(s.distance(identity_map(s.space)) < 1e-15);

  // c(x, y) = a_x b_y scales T by diag(b) on the left and diag(a) on the right.
  Rng rng(4);
  const CVector av = random_vector(3, rng), bv = random_vector(3, rng);
  const SchurSymbol r1 = scalar_symbol(m2, av * bv.transpose());
  const CMatrix t = random_matrix(6, 6, rng);
  const CMatrix l = test::naive_kron(identity(2), bv.asDiagonal().toDenseMatrix());
  const CMatrix r = test::naive_kron(identity(2), av.asDiagonal().toDenseMatrix());
  CHECK(dist(schur_map(m2, r1).apply(t), l * t * r) < 1e-13);

  // Composition of Schur maps is the Schur map of the entrywise composition.
  const SchurSymbol p = random_symbol(m2, 3, rng), q = random_symbol(m2, 3, rng);
  const SchurSymbol pq = make_symbol(3, [&](int x, int y) { return p.at(x, y).compose(q.at(x, y)); });
  CHECK(schur_map(m2, p).compose(schur_map(m2, q)).distance(schur_map(m2, pq)) < 1e-12);
}

TEST_CASE("kernel space coordinates") {
  const KernelSpace sp(FdVnAlgebra({1, 1}), 2);
  CHECK(sp.dim() == 8);
  CHECK(sp.side() == 4);
  Rng rng(5);
  const CVector c = random_vector(sp.dim(), rng);
  CHECK((sp.coords(sp.element(c)) - c).norm() < 1e-14);
  CHECK_THROWS_AS(sp.checked_coords(CMatrix::Ones(4, 4), 1e-10, "t"), DomainError);
  CHECK_THROWS_AS(ambient_map_from_function(sp, [](const CMatrix& x) { return CMatrix(x + CMatrix::Ones(4, 4)); }),
                  DomainError);
}

TEST_CASE("bimodule checks") {
  const FdVnAlgebra m2({2});
  Rng rng(6);
  CHECK(verify_bimodule(schur_map(m2, random_symbol(m2, 3, rng))).diagonal_residual < 1e-12);

  const KernelSpace sp(m2, 3);
  const CMatrix l = test::naive_kron(identity(2), left_regular(make_cyclic(3), 1));
  const AmbientMap conj = ambient_map_from_function(sp, [&](const CMatrix& x) { return CMatrix(l * x * l.adjoint()); });
  CHECK(verify_bimodule(conj).diagonal_residual > 0.5);
  CHECK_THROWS_AS(extract_symbol(conj), NotSchurMultiplierError);

  const FdVnAlgebra d2({1, 1});
  const CMatrix b = test::diag_of({2.0, -1.0});
  const KernelSpace sd(d2, 2);
  const AmbientMap left = ambient_map_from_function(sd, [&](const CMatrix& x) {
    return CMatrix(test::naive_kron(b, identity(2)) * x);
  });
  const ModuleStructure mod = left_multiplication_module({unit(2, 0, 0), unit(2, 1, 1)});
  const BimoduleReport rep = verify_bimodule(left, &mod);
  CHECK(rep.module_residual < 1e-14);
  CHECK(rep.passes(1e-12));
}

TEST_CASE("symbol extraction") {
  const FdVnAlgebra m2({2});
  const SchurSymbol id = make_symbol(2, [](int, int) { return CbMap::identity(2); });
  CHECK(symbol_distance(extract_symbol(schur_map(m2, id)), id, m2) < 1e-15);
  Rng rng(7);
  const CMatrix cg = random_matrix(3, 3, rng);
  const SchurSymbol sc = scalar_symbol(m2, cg);
  const SchurSymbol back = extract_symbol(schur_map(m2, sc));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(dist(back.at(x, y).superoperator(), cg(x, y) * identity(4)) < 1e-13);
  for (const auto& alg : {FdVnAlgebra({2}), FdVnAlgebra({1, 2})}) {
    const SchurSymbol phi = random_symbol(alg, 3, rng);
    CHECK(symbol_distance(extract_symbol(schur_map(alg, phi)), phi, alg) < 1e-10);
  }
}

TEST_CASE("dilations") {
  const FdVnAlgebra m2({2});
  const SchurSymbol id = make_symbol(3, [](int, int) { return CbMap::identity(2); });
  const DilationTriple t = dilation_factorize(schur_map(m2, id));
  CHECK(t.certificate() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(t.residual < 1e-12);

  const FdVnAlgebra c({1});
  CMatrix cg(2, 2);
  cg << 1, -1, -1, 1;
  const DilationTriple tc = dilation_factorize(schur_map(c, scalar_symbol(c, cg)));
  CHECK(tc.multiplicity == 1);
  CHECK(tc.certificate() == doctest::Approx(1.0).epsilon(1e-10));
  // V = (1, -1) and W = (1, -1) up to a common phase.
  const cplx ratio_v = tc.v[1](0, 0) / tc.v[0](0, 0);
  const cplx ratio_w = tc.w[1](0, 0) / tc.w[0](0, 0);
  CHECK(std::abs(ratio_v + 1.0) < 1e-10);
  CHECK(std::abs(ratio_w + 1.0) < 1e-10);
  CHECK(std::abs(std::abs(tc.v[0](0, 0)) - 1.0) < 1e-10);

  // Independent reconstruction W(y)^* rho(a) V(x) = phi(x, y)(a).
  Rng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const SchurSymbol phi = random_symbol(m2, 3, rng);
    const DilationTriple d = dilation_factorize(schur_map(m2, phi));
    const CMatrix a = random_matrix(2, 2, rng);
    const CMatrix rho = test::naive_kron(a, identity(d.multiplicity));
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        CHECK(dist(d.w[static_cast<std::size_t>(y)].adjoint() * rho * d.v[static_cast<std::size_t>(x)], phi.at(x, y).apply(a)) < 1e-9);
  }
}

TEST_CASE("compressed Choi blocks") {
  const FdVnAlgebra m2({2});
  Rng rng(9);
  const SchurSymbol phi = random_symbol(m2, 2, rng);
  const CMatrix cc = compressed_choi(phi);
  REQUIRE(cc.rows() == 8);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) CHECK(dist(cc.block(4 * y, 4 * x, 4, 4), phi.at(x, y).choi()) < 1e-14);
}
