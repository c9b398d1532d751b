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

#include "ncg/metric.hpp"

#include <string>

namespace ncg {

Outcome<Metric> validate_metric(const Calculus& c, const TamenessCertificate& cert,
                                const HomModule& dual, const Matrix& g_plain) {
  const QuotientTensor& ee = cert.ee;
  const std::size_t n = c.algebra.dim();
  const std::size_t m = c.one_forms.dim();
  if (g_plain.rows() != n || g_plain.cols() != ee.plain_dim()) {
    throw ContractError("metric must be dim A x (dim E)^2");
  }
  for (const auto& rel : ee.relations().basis()) {
    if (!is_zero(g_plain.apply(rel))) {
      return Failure{"NotBalanced", "metric does not vanish on the balancing relations"};
    }
  }
  Metric out;
  out.g = Matrix(n, ee.dim());
  for (std::size_t k = 0; k < ee.dim(); ++k) out.g.set_column(k, g_plain.column(ee.basis_columns()[k]));

  const Bimodule& eem = ee.module();
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& label = c.algebra.labels()[i];
    if (out.g * eem.left(i) != c.algebra.left_basis(i) * out.g) {
      return Failure{"NotBilinear", "g(" + label + " t) != " + label + " g(t)"};
    }
    if (out.g * eem.right(i) != c.algebra.right_basis(i) * out.g) {
      return Failure{"NotBilinear", "g(t " + label + ") != g(t) " + label};
    }
  }
  if (out.g * cert.sigma != out.g) {
    for (std::size_t k = 0; k < ee.dim(); ++k) {
      if (out.g.apply(cert.sigma.column(k)) != out.g.column(k)) {
        const std::size_t col = ee.basis_columns()[k];
        return Failure{"NotSymmetric", "g(sigma t) != g(t) for t = e" + std::to_string(col / m) +
                                           " x e" + std::to_string(col % m)};
      }
    }
  }
  if (dual.dim() != m) {
    return Failure{"VgNotInvertible", "dim E* = " + std::to_string(dual.dim()) +
                                          " differs from dim E = " + std::to_string(m)};
  }
  out.v_g = Matrix(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    Functional v(n, m);
    for (std::size_t j = 0; j < m; ++j) v.set_column(j, out.g.apply(ee.project_column(k * m + j)));
    out.v_g.set_column(k, dual.coordinates(v));
  }
  auto inv = inverse(out.v_g);
  if (!inv) return Failure{"VgNotInvertible", "V_g has a nonzero kernel"};
  out.v_g_inv = std::move(*inv);
  return out;
}

Outcome<Geometry> Geometry::create(Calculus c, const Matrix& g_plain) {
  CheckList checks = validate_calculus(c);
  if (const CheckItem* bad = checks.first_failure()) return Failure{bad->code, bad->witness};
  auto cert = build_symmetry(c);
  if (!cert) return cert.failure();
  return create(std::move(c), std::move(cert).value(), g_plain);
}

Outcome<Geometry> Geometry::create(Calculus c, TamenessCertificate cert, const Matrix& g_plain) {
  Geometry geo;
  geo.calc_ = std::move(c);
  geo.cert_ = std::move(cert);
  geo.dual_ = HomModule(geo.calc_.one_forms, Bimodule::regular(geo.calc_.algebra));
  auto metric = validate_metric(geo.calc_, geo.cert_, geo.dual_, g_plain);
  if (!metric) return metric.failure();
  geo.metric_ = std::move(metric).value();

  VectorFieldModule& vf = geo.fields_;
  vf.dual_center = module_center(geo.dual_.module());
  Subspace image(geo.dual_.dim());
  for (const auto& z : geo.cert_.central_basis) {
    vf.fields.push_back(geo.v_g(z));
    vf.deltas.push_back(geo.delta(vf.fields.back()));
    image.insert(geo.dual_.coordinates(vf.fields.back()));
  }
  if (image != vf.dual_center) {
    return Failure{"CenterMismatch", "V_g(Z(E)) has dimension " + std::to_string(image.dim()) +
                                         ", Z(E*) has dimension " +
                                         std::to_string(vf.dual_center.dim())};
  }

  const std::size_t n = geo.algebra_dim();
  std::vector<Vector> cols;
  for (const auto& x : vf.fields)
    for (std::size_t i = 0; i < n; ++i)
      cols.push_back(geo.dual_.coordinates(geo.right_act(x, geo.calc_.algebra.basis(i))));
  auto inv = solve_columns(Matrix::from_columns(cols, geo.dual_.dim()),
                           Matrix::identity(geo.dual_.dim()));
  if (!inv) return Failure{"CenterMismatch", "X(A) A does not span E*"};
  geo.field_span_inverse_ = std::move(*inv);
  return geo;
}

Vector Geometry::pair(const Vector& eta, const Vector& xi) const {
  return g(ee().tensor(eta, xi));
}

Functional Geometry::v_g(const Vector& eta) const {
  const std::size_t m = form_dim();
  Functional v(algebra_dim(), m);
  for (std::size_t j = 0; j < m; ++j) v.set_column(j, pair(eta, unit_vector(m, j)));
  return v;
}

Vector Geometry::v_g_inverse(const Functional& phi) const {
  return metric_.v_g_inv.apply(dual_.coordinates(phi));
}

Vector Geometry::g_tilde(const Functional& phi, const Functional& psi) const {
  return pair(v_g_inverse(phi), v_g_inverse(psi));
}

bool Geometry::is_central(const Functional& phi) const {
  const Algebra& a = calc_.algebra;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.left_basis(i) * phi != phi * calc_.one_forms.left(i)) return false;
  }
  return true;
}

Functional Geometry::left_act(const Vector& a, const Functional& phi) const {
  return calc_.algebra.left_mult(a) * phi;
}

Functional Geometry::right_act(const Functional& phi, const Vector& a) const {
  return phi * calc_.one_forms.left_action(a);
}

Matrix Geometry::pairing_matrix(const Functional& phi, const Functional& psi) const {
  if (!is_central(psi)) throw ContractError("YNotCentral");
  const QuotientTensor& q = ee();
  const std::size_t m = form_dim();
  Matrix out(algebra_dim(), q.dim());
  for (std::size_t k = 0; k < q.dim(); ++k) {
    const std::size_t col = q.basis_columns()[k];
    out.set_column(k, calc_.algebra.multiply(phi.column(col / m), psi.column(col % m)));
  }
  return out;
}

Vector Geometry::pairing(const Functional& phi, const Functional& psi, const Vector& t) const {
  return pairing_matrix(phi, psi).apply(t);
}

std::vector<Vector> Geometry::field_decomposition(const Functional& phi) const {
  const std::size_t n = algebra_dim();
  Vector flat = field_span_inverse_.apply(dual_.coordinates(phi));
  std::vector<Vector> out(fields().size(), Vector(n));
  for (std::size_t p = 0; p < out.size(); ++p)
    for (std::size_t i = 0; i < n; ++i) out[p][i] = flat[p * n + i];
  return out;
}

// ---------------------------------------------------------------------------
// MetricSquare

Vector MetricSquare::eval(const Vector& x, const Vector& y) const {
  const std::size_t n = table.empty() || table[0].empty() ? 0 : table[0][0].size();
  Vector out(n);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t l = 0; l < y.size(); ++l) {
      if (y[l].is_zero()) continue;
      axpy(out, x[k] * y[l], table[k][l]);
    }
  }
  return out;
}

Matrix MetricSquare::v(const Vector& x) const {
  const std::size_t d = table.size();
  const std::size_t n = d == 0 ? 0 : table[0][0].size();
  Matrix out(n, d);
  for (std::size_t l = 0; l < d; ++l) out.set_column(l, eval(x, unit_vector(d, l)));
  return out;
}

Outcome<MetricSquare> metric_square(const Geometry& geo) {
  const QuotientTensor& q = geo.ee();
  const Bimodule& e = geo.calculus().one_forms;
  const std::size_t m = geo.form_dim();
  const std::size_t d = q.dim();
  MetricSquare out;

  // G[q][r] = g(e_q x e_r); g2(e_p x e_q, e_r x e_u) = g(e_p x G[q][r] e_u)
  std::vector<std::vector<Vector>> gram(m, std::vector<Vector>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) gram[a][b] = geo.pair(unit_vector(m, a), unit_vector(m, b));
  out.table.assign(d, std::vector<Vector>(d));
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t p = q.basis_columns()[k] / m, qq = q.basis_columns()[k] % m;
    for (std::size_t l = 0; l < d; ++l) {
      const std::size_t r = q.basis_columns()[l] / m, u = q.basis_columns()[l] % m;
      Vector moved = e.act_left(gram[qq][r], unit_vector(m, u));
      out.table[k][l] = geo.pair(unit_vector(m, p), moved);
    }
  }

  out.dual2 = HomModule(q.module(), Bimodule::regular(geo.calculus().algebra));
  if (out.dual2.dim() != d) {
    return Failure{"InconsistentMetric", "dim Hom_A(E x_A E, A) = " + std::to_string(out.dual2.dim()) +
                                             " differs from dim E x_A E = " + std::to_string(d)};
  }
  out.v_g2 = Matrix(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    Matrix vk = out.v(unit_vector(d, k));
    if (!out.dual2.contains(vk)) return Failure{"InconsistentMetric", "V_g2 is not right linear"};
    out.v_g2.set_column(k, out.dual2.coordinates(vk));
  }
  auto inv = inverse(out.v_g2);
  if (!inv) return Failure{"InconsistentMetric", "V_g2 is not invertible"};
  out.v_g2_inv = std::move(*inv);

  const auto& z = geo.cert().central_basis;
  for (std::size_t a = 0; a < z.size(); ++a) {
    for (std::size_t b = 0; b < z.size(); ++b) {
      Matrix lhs = geo.pairing_matrix(geo.fields()[a], geo.fields()[b]);
      if (lhs != out.v(q.tensor(z[b], z[a]))) {
        return Failure{"InconsistentMetric", "V_g(z" + std::to_string(a) + ") x V_g(z" +
                                                 std::to_string(b) + ") != V_g2(z" +
                                                 std::to_string(b) + " x z" + std::to_string(a) + ")"};
      }
    }
  }
  return out;
}

}  // namespace ncg
