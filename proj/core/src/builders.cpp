// Copyright 2026 The ncgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ncg/builders.hpp"

#include <functional>
#include <random>
#include <stdexcept>
#include <utility>

namespace ncg {

namespace {

/// Structure constants for an algebra whose basis is closed under
/// multiplication up to a scalar: b_i b_j = coeff * b_k.
Algebra monomial_algebra(std::vector<std::string> labels,
                         const std::function<std::pair<Scalar, std::size_t>(std::size_t, std::size_t)>& mul) {
  const std::size_t n = labels.size();
  std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto [coeff, k] = mul(i, j);
      table[i][j][k] = coeff;
    }
  }
  return Algebra::create(std::move(labels), unit_vector(n, 0), std::move(table)).value();
}

/// The quaternion-type basis {1, U, V, W} of M_2: U^2 = V^2 = 1, W = UV.
std::pair<Scalar, std::size_t> m2_product(std::size_t i, std::size_t j) {
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, 1, -1}};
  static const std::size_t index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return {Scalar(sign[i][j]), index[i][j]};
}

Algebra m2_algebra() { return monomial_algebra({"1", "U", "V", "W"}, m2_product); }

Scalar power(const Scalar& q, std::size_t k) {
  Scalar out(1);
  for (std::size_t i = 0; i < k; ++i) out *= q;
  return out;
}

std::vector<std::vector<Vector>> zero_brackets(std::size_t l) {
  return std::vector<std::vector<Vector>>(l, std::vector<Vector>(l, Vector(l)));
}

Matrix block_diagonal(const Matrix& block, std::size_t copies) {
  const std::size_t n = block.rows();
  Matrix m(n * copies, n * copies);
  for (std::size_t b = 0; b < copies; ++b)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(b * n + r, b * n + c) = block(r, c);
  return m;
}

Bimodule free_bimodule(const Algebra& a, std::size_t rank) {
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    left.push_back(block_diagonal(a.left_basis(i), rank));
    right.push_back(block_diagonal(a.right_basis(i), rank));
  }
  return Bimodule(rank * a.dim(), std::move(left), std::move(right));
}

Preset finish(std::string name, ChevalleySpec spec) {
  Preset p;
  p.name = std::move(name);
  p.calculus = build_chevalley(spec).value();
  p.metric = euclidean_metric(spec);
  p.chevalley = std::move(spec);
  return p;
}

}  // namespace

std::size_t pair_index(std::size_t lie_dim, std::size_t k, std::size_t l) {
  if (!(k < l && l < lie_dim)) throw ContractError("pair_index: need k < l < lie_dim");
  // pairs (0,1), (0,2), ..., (1,2), ...
  return k * lie_dim - k * (k + 1) / 2 + (l - k - 1);
}

Outcome<Calculus> build_chevalley(const ChevalleySpec& spec) {
  const Algebra& a = spec.algebra;
  const std::size_t n = a.dim();
  const std::size_t l = spec.lie_dim();
  if (spec.brackets.size() != l) throw ContractError("chevalley: brackets must be lie_dim x lie_dim");
  for (const auto& row : spec.brackets) {
    if (row.size() != l) throw ContractError("chevalley: brackets must be lie_dim x lie_dim");
    for (const auto& v : row) {
      if (v.size() != l) throw ContractError("chevalley: bracket coordinates have wrong length");
    }
  }
  for (std::size_t k = 0; k < l; ++k) {
    if (spec.actions[k].rows() != n || spec.actions[k].cols() != n) {
      throw ContractError("chevalley: action must be dim A x dim A");
    }
    if (!a.is_derivation(spec.actions[k])) {
      return Failure{"InvalidAction", "X" + std::to_string(k + 1) + " is not a derivation"};
    }
  }
  for (std::size_t k = 0; k < l; ++k) {
    for (std::size_t j = 0; j < l; ++j) {
      Matrix expected(n, n);
      for (std::size_t s = 0; s < l; ++s) {
        if (!spec.brackets[k][j][s].is_zero()) expected += spec.brackets[k][j][s] * spec.actions[s];
      }
      Matrix comm = spec.actions[k] * spec.actions[j] - spec.actions[j] * spec.actions[k];
      if (comm != expected) {
        return Failure{"InvalidAction", "actions do not represent the bracket [X" +
                                            std::to_string(k + 1) + ", X" + std::to_string(j + 1) +
                                            "]"};
      }
    }
  }

  const std::size_t pairs = l * (l - (l > 0 ? 1 : 0)) / 2;
  const std::size_t m = l * n;
  const std::size_t w = pairs * n;
  Calculus c{a, free_bimodule(a, l), free_bimodule(a, pairs), Matrix(m, n), Matrix(w, m),
             Matrix(w, m * m)};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < l; ++k)
      for (std::size_t x = 0; x < n; ++x) c.d0(k * n + x, i) = spec.actions[k](x, i);

  // (theta_j b_x) ^ (theta_k b_y) = +-(theta_min ^ theta_max) b_x b_y
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t k = 0; k < l; ++k) {
      if (j == k) continue;
      const std::size_t pair = j < k ? pair_index(l, j, k) : pair_index(l, k, j);
      const Scalar sign(j < k ? 1 : -1);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          const std::size_t col = (j * n + x) * m + (k * n + y);
          const Vector& prod = a.product(x, y);
          for (std::size_t z = 0; z < n; ++z) {
            if (!prod[z].is_zero()) c.wedge(pair * n + z, col) = sign * prod[z];
          }
        }
      }
    }
  }

  // d(theta_j b_x)(X_k, X_l) = delta_jl X_k(b_x) - delta_jk X_l(b_x) - c_kl^j b_x
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t col = j * n + x;
      for (std::size_t k = 0; k < l; ++k) {
        for (std::size_t s = k + 1; s < l; ++s) {
          const std::size_t base = pair_index(l, k, s) * n;
          Vector v(n);
          if (j == s) v = v + spec.actions[k].column(x);
          if (j == k) v = v - spec.actions[s].column(x);
          const Scalar& ckl = spec.brackets[k][s][j];
          if (!ckl.is_zero()) v[x] -= ckl;
          for (std::size_t z = 0; z < n; ++z) c.d1(base + z, col) = v[z];
        }
      }
    }
  }
  return c;
}

Matrix constant_metric(const ChevalleySpec& spec, const std::vector<std::vector<Vector>>& coeff) {
  const Algebra& a = spec.algebra;
  const std::size_t n = a.dim();
  const std::size_t l = spec.lie_dim();
  const std::size_t m = l * n;
  Matrix g(n, m * m);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      if (is_zero(coeff[i][j])) continue;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Vector v = a.multiply(coeff[i][j], a.product(x, y));
          g.set_column((i * n + x) * m + (j * n + y), v);
        }
      }
    }
  }
  return g;
}

Matrix euclidean_metric(const ChevalleySpec& spec) {
  const std::size_t l = spec.lie_dim();
  std::vector<std::vector<Vector>> c(l, std::vector<Vector>(l, Vector(spec.algebra.dim())));
  for (std::size_t i = 0; i < l; ++i) c[i][i] = spec.algebra.unit();
  return constant_metric(spec, c);
}

std::vector<std::vector<Vector>> seeded_coefficients(const ChevalleySpec& spec, std::uint64_t seed) {
  const std::size_t l = spec.lie_dim();
  std::mt19937_64 rng(seed);
  for (;;) {
    Matrix s(l, l);
    for (std::size_t i = 0; i < l; ++i) {
      s(i, i) = Scalar(static_cast<long>(rng() % 4) + 1);
      for (std::size_t j = i + 1; j < l; ++j) {
        s(i, j) = Scalar(static_cast<long>(rng() % 5) - 2);
        s(j, i) = s(i, j);
      }
    }
    if (s == Matrix::identity(l) || !inverse(s)) continue;
    std::vector<std::vector<Vector>> c(l, std::vector<Vector>(l));
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) c[i][j] = s(i, j) * spec.algebra.unit();
    return c;
  }
}

Preset preset_matrix_derivations(int n) {
  if (n != 2) throw std::invalid_argument("matrix-derivations: only n = 2 is available");
  ChevalleySpec spec{m2_algebra(), {}, zero_brackets(3)};
  for (std::size_t g = 1; g <= 3; ++g) spec.actions.push_back(spec.algebra.ad(spec.algebra.basis(g)));
  // [X1,X2] = 2X3, [X1,X3] = 2X2, [X2,X3] = -2X1
  auto set = [&](std::size_t k, std::size_t l, std::size_t target, int coeff) {
    spec.brackets[k][l][target] = coeff;
    spec.brackets[l][k][target] = -coeff;
  };
  set(0, 1, 2, 2);
  set(0, 2, 1, 2);
  set(1, 2, 0, -2);
  return finish("matrix-derivations", std::move(spec));
}

Preset preset_abelian_torus(int n) {
  if (n != 2 && n != 4) throw std::invalid_argument("abelian-torus: n must be 2 or 4");
  const std::size_t un = static_cast<std::size_t>(n);
  const Scalar q = n == 2 ? Scalar(-1) : Scalar::i();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < un; ++a) {
    for (std::size_t b = 0; b < un; ++b) {
      std::string s;
      if (a > 0) s += a == 1 ? "U" : "U^" + std::to_string(a);
      if (b > 0) s += b == 1 ? "V" : "V^" + std::to_string(b);
      labels.push_back(s.empty() ? "1" : s);
    }
  }
  // U^a V^b U^c V^d = q^(bc) U^(a+c) V^(b+d)
  Algebra alg = monomial_algebra(std::move(labels), [&](std::size_t i, std::size_t j) {
    const std::size_t a = i / un, b = i % un, c = j / un, d = j % un;
    return std::pair{power(q, (b * c) % 4), ((a + c) % un) * un + (b + d) % un};
  });
  ChevalleySpec spec{alg, {alg.ad(alg.basis(un))}, zero_brackets(1)};
  return finish("abelian-torus", std::move(spec));
}

Preset preset_matrix_times_group() {
  // b_x t^e at index 2x + e
  Algebra alg = monomial_algebra({"1", "t", "U", "Ut", "V", "Vt", "W", "Wt"},
                                 [](std::size_t i, std::size_t j) {
                                   auto [coeff, k] = m2_product(i / 2, j / 2);
                                   return std::pair{coeff, 2 * k + (i % 2 + j % 2) % 2};
                                 });
  ChevalleySpec spec{alg, {alg.ad(alg.basis(2))}, zero_brackets(1)};
  return finish("matrix-times-group", std::move(spec));
}

std::vector<std::string> preset_names() { return {"matrix-derivations", "abelian-torus"}; }

Preset make_preset(const std::string& name, int n) {
  if (name == "matrix-derivations") return preset_matrix_derivations(n);
  if (name == "abelian-torus") return preset_abelian_torus(n);
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace ncg
