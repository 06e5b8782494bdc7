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

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/random.hpp"
#include "schurlab/sdp.hpp"

using namespace schurlab;

namespace {

std::vector<SdpEntry> dense_entries(const RMatrix& m, int block = 0) {
  std::vector<SdpEntry> out;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      if (m(i, j) != 0.0) out.push_back({block, i, j, m(i, j)});
  return out;
}

RMatrix random_symmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  RMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g(rng);
  return (a + a.transpose()) / 2.0;
}

// max <A, X> over density matrices X, written as min <-A, X>.
SdpProblem max_eigen_problem(const RMatrix& a) {
  const int n = static_cast<int>(a.rows());
  SdpProblem p;
  p.block_sizes = {n};
  p.objective = dense_entries(-a);
  p.constraints = {dense_entries(RMatrix::Identity(n, n))};
  p.b = RVector::Ones(1);
  return p;
}

}  // namespace

TEST_CASE("largest eigenvalue") {
  std::mt19937_64 rng(1);
  for (int n : {1, 3, 6}) {
    const RMatrix a = random_symmetric(n, rng);
    const SdpResult r = sdp_solve(max_eigen_problem(a));
    Eigen::SelfAdjointEigenSolver<RMatrix> es(a);
    CHECK(r.status == SdpStatus::Optimal);
    CHECK(-r.dual == doctest::Approx(es.eigenvalues()(n - 1)).epsilon(1e-8));
    CHECK(r.gap < 1e-7);
  }
}

TEST_CASE("diagonal blocks reduce to linear programs") {
  // min x0 + 2 x1 + 3 x2  s.t.  x0 + x1 + x2 = 1,  x1 - x2 = 0.2,  x >= 0.
  SdpProblem p;
  p.block_sizes = {1, 1, 1};
  p.objective = {{0, 0, 0, 1.0}, {1, 0, 0, 2.0}, {2, 0, 0, 3.0}};
  p.constraints = {{{0, 0, 0, 1.0}, {1, 0, 0, 1.0}, {2, 0, 0, 1.0}}, {{1, 0, 0, 1.0}, {2, 0, 0, -1.0}}};
  p.b = RVector(2);
  p.b << 1.0, 0.2;
  const SdpResult r = sdp_solve(p);
  CHECK(r.status == SdpStatus::Optimal);
  // Optimum at x = (0.8, 0.2, 0): 0.8 + 0.4.
  CHECK(r.primal == doctest::Approx(1.2).epsilon(1e-8));
  CHECK(r.x[0](0, 0) == doctest::Approx(0.8).epsilon(1e-6));
}

TEST_CASE("smallest eigenvalue through the dual") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    const RMatrix c = random_symmetric(5, rng);
    SdpProblem p;
    p.block_sizes = {5};
    p.objective = dense_entries(c);
    p.constraints = {dense_entries(RMatrix::Identity(5, 5))};
    p.b = RVector::Ones(1);
    const SdpResult r = sdp_solve(p);
    Eigen::SelfAdjointEigenSolver<RMatrix> es(c);
    CHECK(r.primal == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-8));
    // Complementary slackness: X Z = 0 at the optimum.
    CHECK((r.x[0] * r.z[0]).norm() < 1e-6);
    Eigen::SelfAdjointEigenSolver<RMatrix> ex(r.x[0]);
    CHECK(ex.eigenvalues()(0) > -1e-9);
  }
}

TEST_CASE("infeasible and malformed problems") {
  SdpProblem p;
  p.block_sizes = {2};
  p.objective = {};
  p.constraints = {dense_entries(RMatrix::Identity(2, 2))};
  p.b = RVector::Constant(1, -1.0);
  const SdpResult r = sdp_solve(p);
  CHECK(r.status == SdpStatus::PrimalInfeasible);

  SdpProblem bad = max_eigen_problem(RMatrix::Identity(2, 2));
  bad.b = RVector::Ones(2);
  CHECK_THROWS_AS(sdp_solve(bad), InputError);
  SdpProblem out = max_eigen_problem(RMatrix::Identity(2, 2));
  out.objective.push_back({0, 2, 0, 1.0});
  CHECK_THROWS_AS(sdp_solve(out), InputError);
}

TEST_CASE("Hermitian embedding") {
  Rng rng(3);
  const CMatrix a = random_matrix(3, 3, rng);
  const CMatrix h = a + a.adjoint();
  const RMatrix r = hermitian_to_real(h);
  CHECK((r - r.transpose()).norm() < 1e-15);
  Eigen::SelfAdjointEigenSolver<CMatrix> eh(h);
  Eigen::SelfAdjointEigenSolver<RMatrix> er(r);
  // Each eigenvalue appears twice.
  for (int k = 0; k < 3; ++k) {
    CHECK(er.eigenvalues()(2 * k) == doctest::Approx(eh.eigenvalues()(k)).epsilon(1e-12));
    CHECK(er.eigenvalues()(2 * k + 1) == doctest::Approx(eh.eigenvalues()(k)).epsilon(1e-12));
  }
}
