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

#include "schurlab/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "schurlab/errors.hpp"

namespace schurlab {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley, std::string name)
    : cayley_(std::move(cayley)), name_(std::move(name)) {
  const int n = static_cast<int>(cayley_.size());
  if (n == 0) throw InputError("group table is empty");
  for (int r = 0; r < n; ++r) {
    const auto& row = cayley_[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != n) {
      throw InputError("group table row " + std::to_string(r) + " has wrong length");
    }
    for (int v : row) {
      if (v < 0 || v >= n) throw InputError("group table entry out of range in row " + std::to_string(r));
    }
  }
  for (int r = 0; r < n; ++r) {
    if (mul(0, r) != r || mul(r, 0) != r) {
      throw InputError("element 0 is not a two-sided identity (fails at " + std::to_string(r) + ")");
    }
  }
  for (int r = 0; r < n; ++r) {
    std::vector<char> row_seen(static_cast<std::size_t>(n), 0), col_seen(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
      row_seen[static_cast<std::size_t>(mul(r, s))] = 1;
      col_seen[static_cast<std::size_t>(mul(s, r))] = 1;
    }
    if (std::count(row_seen.begin(), row_seen.end(), 1) != n ||
        std::count(col_seen.begin(), col_seen.end(), 1) != n) {
      throw InputError("group table is not a Latin square at element " + std::to_string(r));
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (mul(mul(r, s), t) != mul(r, mul(s, t))) {
          std::ostringstream msg;
          msg << "associativity fails for triple (" << r << ", " << s << ", " << t << ")";
          throw InputError(msg.str());
        }
      }
    }
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      if (mul(r, s) == 0) inverse_[static_cast<std::size_t>(r)] = s;
    }
  }
  abelian_ = true;
  for (int r = 0; r < n && abelian_; ++r) {
    for (int s = 0; s < n; ++s) {
      if (mul(r, s) != mul(s, r)) {
        abelian_ = false;
        break;
      }
    }
  }
}

int FiniteGroup::element_order(int r) const {
  check_element(r);
  int k = 1;
  for (int x = r; x != 0; x = mul(x, r)) ++k;
  return k;
}

void FiniteGroup::check_element(int r) const {
  if (r < 0 || r >= order()) {
    throw InputError("group element " + std::to_string(r) + " out of range for order " + std::to_string(order()));
  }
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw InputError("make_cyclic: n must be >= 1");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return FiniteGroup(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order();
  const int n = ng * nh;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          g.mul(a / nh, b / nh) * nh + h.mul(a % nh, b % nh);
    }
  }
  return FiniteGroup(std::move(t), g.name() + "x" + h.name());
}

FiniteGroup make_symmetric(int n) {
  if (n < 1) throw InputError("make_symmetric: n must be >= 1");
  if (n > 4) throw SizeError("make_symmetric: n must be <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(i)] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
      }
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup(std::move(t), "S" + std::to_string(n));
}

namespace {

cplx root_of_unity(int k, int n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

// Generators chosen greedily: each new generator lies outside the subgroup
// generated by the previous ones.
std::vector<int> greedy_generators(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> gens;
  std::vector<char> in_sub(static_cast<std::size_t>(n), 0);
  in_sub[0] = 1;
  for (int cand = 1; cand < n; ++cand) {
    if (in_sub[static_cast<std::size_t>(cand)]) continue;
    gens.push_back(cand);
    // close the subgroup under multiplication by generators
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < n; ++x) {
        if (!in_sub[static_cast<std::size_t>(x)]) continue;
        for (int gen : gens) {
          const int y = g.mul(x, gen);
          if (!in_sub[static_cast<std::size_t>(y)]) {
            in_sub[static_cast<std::size_t>(y)] = 1;
            grew = true;
          }
        }
      }
    }
  }
  return gens;
}

}  // namespace

CMatrix DualGroup::fourier_unitary() const {
  const double scale = 1.0 / std::sqrt(static_cast<double>(base_.order()));
  return scale * table_.conjugate();
}

DualGroup dual_group(const FiniteGroup& g) {
  if (!g.abelian()) throw DomainError("dual_group: group " + g.name() + " is not abelian");
  const int n = g.order();
  const std::vector<int> gens = greedy_generators(g);
  std::vector<std::vector<int>> found;

  // Each generator value must be an ord(gen)-th root of unity: exponent multiple of n / ord.
  std::vector<int> steps, counts;
  for (int gen : gens) {
    const int ord = g.element_order(gen);
    steps.push_back(n / ord);
    counts.push_back(ord);
  }
  std::vector<int> digit(gens.size(), 0);
  while (true) {
    std::vector<int> value(static_cast<std::size_t>(n), -1);
    value[0] = 0;
    bool ok = true;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      const int x = queue[qi];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const int y = g.mul(x, gens[k]);
        const int v = (value[static_cast<std::size_t>(x)] + digit[k] * steps[k]) % n;
        if (value[static_cast<std::size_t>(y)] < 0) {
          value[static_cast<std::size_t>(y)] = v;
          queue.push_back(y);
        } else if (value[static_cast<std::size_t>(y)] != v) {
          ok = false;
          break;
        }
      }
    }
    for (int r = 0; r < n && ok; ++r) {
      for (int s = 0; s < n; ++s) {
        if (value[static_cast<std::size_t>(g.mul(r, s))] !=
            (value[static_cast<std::size_t>(r)] + value[static_cast<std::size_t>(s)]) % n) {
          ok = false;
          break;
        }
      }
    }
    if (ok) found.push_back(value);

    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == counts[k]) digit[k++] = 0;
    if (k == digit.size()) break;
  }
  std::sort(found.begin(), found.end());
  if (static_cast<int>(found.size()) != n) {
    throw DomainError("dual_group: found " + std::to_string(found.size()) + " characters, expected " +
                      std::to_string(n));
  }

  CMatrix table(n, n);
  for (int gamma = 0; gamma < n; ++gamma) {
    for (int r = 0; r < n; ++r) {
      table(gamma, r) = root_of_unity(found[static_cast<std::size_t>(gamma)][static_cast<std::size_t>(r)], n);
    }
  }
  std::vector<std::vector<int>> dual_table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) {
        prod[static_cast<std::size_t>(r)] =
            (found[static_cast<std::size_t>(a)][static_cast<std::size_t>(r)] + found[static_cast<std::size_t>(b)][static_cast<std::size_t>(r)]) % n;
      }
      dual_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<int>(std::lower_bound(found.begin(), found.end(), prod) - found.begin());
    }
  }
  FiniteGroup dual(std::move(dual_table), "dual(" + g.name() + ")");
  return DualGroup(g, std::move(dual), std::move(table), std::move(found));
}

CMatrix left_regular(const FiniteGroup& g, int r) {
  g.check_element(r);
  const int n = g.order();
  CMatrix m = CMatrix::Zero(n, n);
  for (int s = 0; s < n; ++s) m(g.mul(r, s), s) = 1.0;
  return m;
}

CMatrix right_regular(const FiniteGroup& g, int r) {
  g.check_element(r);
  const int n = g.order();
  CMatrix m = CMatrix::Zero(n, n);
  const int rinv = g.inv(r);
  for (int s = 0; s < n; ++s) m(g.mul(s, rinv), s) = 1.0;
  return m;
}

CMatrix mult_operator(const FiniteGroup& g, const CVector& f) {
  if (f.size() != g.order()) {
    throw ShapeError("mult_operator: function has " + std::to_string(f.size()) + " values, group order " +
                     std::to_string(g.order()));
  }
  return f.asDiagonal();
}

CVector vn_coefficients(const FiniteGroup& g, const CMatrix& x, double tol) {
  const int n = g.order();
  if (x.rows() != n || x.cols() != n) throw ShapeError("vn_coefficients: shape mismatch");
  // lambda_r e_0 = e_r, so the coefficients are the first column.
  CVector c = x.col(0);
  const double res = (x - vn_element(g, c)).norm();
  if (res > tol * std::max(1.0, x.norm())) {
    throw DomainError("element is not in VN(G) (residual " + std::to_string(res) + ")");
  }
  return c;
}

CMatrix vn_element(const FiniteGroup& g, const CVector& coeffs) {
  const int n = g.order();
  CMatrix x = CMatrix::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    if (coeffs(r) == cplx(0.0)) continue;
    for (int s = 0; s < n; ++s) x(g.mul(r, s), s) += coeffs(r);
  }
  return x;
}

CMatrix vn_coproduct(const FiniteGroup& g, const CMatrix& x, double tol) {
  const CVector c = vn_coefficients(g, x, tol);
  const int n = g.order();
  CMatrix out = CMatrix::Zero(n * n, n * n);
  for (int r = 0; r < n; ++r) {
    if (c(r) == cplx(0.0)) continue;
    const CMatrix l = left_regular(g, r);
    out += c(r) * kron(l, l);
  }
  return out;
}

CMatrix linf_coproduct(const FiniteGroup& g, const CMatrix& x, double tol) {
  const int n = g.order();
  if (x.rows() != n || x.cols() != n) throw ShapeError("linf_coproduct: shape mismatch");
  const CMatrix off = x - CMatrix(x.diagonal().asDiagonal());
  if (off.norm() > tol) throw DomainError("linf_coproduct: input is not diagonal");
  CMatrix out = CMatrix::Zero(n * n, n * n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) out(s * n + t, s * n + t) = x(g.mul(s, t), g.mul(s, t));
  }
  return out;
}

VnMap vn_map_from_function(const FiniteGroup& g, const std::function<CMatrix(const CMatrix&)>& t,
                           double tol) {
  const int n = g.order();
  VnMap m{CMatrix::Zero(n, n)};
  for (int r = 0; r < n; ++r) m.coords.col(r) = vn_coefficients(g, t(left_regular(g, r)), tol);
  return m;
}

CMatrix predual_map(const VnMap& t) {
  // T_*(u)(r) = sum_s T(s, r) u(s)
  return t.coords.transpose();
}

double predual_module_residual(const VnMap& t) {
  const CMatrix p = predual_map(t);
  const auto n = p.rows();
  double worst = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      // u = delta_a, v = delta_b
      CVector uv = CVector::Zero(n);
      if (a == b) uv(a) = 1.0;
      const CVector lhs = p * uv;
      CVector rhs = CVector::Zero(n);
      rhs(b) = p(b, a);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace schurlab
