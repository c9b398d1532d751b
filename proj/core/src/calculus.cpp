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

#include "ncg/calculus.hpp"

#include <string>

namespace ncg {

namespace {

std::string idx(std::size_t k) { return std::to_string(k); }

}  // namespace

void Calculus::check_shapes() const {
  const std::size_t n = algebra.dim();
  const std::size_t m = one_forms.dim();
  const std::size_t w = two_forms.dim();
  if (one_forms.algebra_dim() != n || two_forms.algebra_dim() != n) {
    throw ContractError("calculus: bimodule action count differs from dim A");
  }
  if (d0.rows() != m || d0.cols() != n) throw ContractError("calculus: d0 must be dim E x dim A");
  if (d1.rows() != w || d1.cols() != m) throw ContractError("calculus: d1 must be dim Omega2 x dim E");
  if (wedge.rows() != w || wedge.cols() != m * m) {
    throw ContractError("calculus: wedge must be dim Omega2 x (dim E)^2");
  }
}

bool CheckList::ok() const { return first_failure() == nullptr; }

const CheckItem* CheckList::first_failure() const {
  for (const auto& item : items) {
    if (!item.passed) return &item;
  }
  return nullptr;
}

void CheckList::add(std::string name, std::string code, std::string witness) {
  items.push_back({std::move(name), false, std::move(code), std::move(witness)});
}

void CheckList::pass(std::string name) { items.push_back({std::move(name), true, {}, {}}); }

Vector wedge_of(const Calculus& c, const Vector& e, const Vector& f) {
  const std::size_t m = c.one_forms.dim();
  Vector out(c.two_forms.dim());
  for (std::size_t p = 0; p < m; ++p) {
    if (e[p].is_zero()) continue;
    for (std::size_t q = 0; q < m; ++q) {
      if (f[q].is_zero()) continue;
      const Scalar s = e[p] * f[q];
      for (std::size_t r = 0; r < out.size(); ++r) {
        const Scalar& x = c.wedge(r, p * m + q);
        if (!x.is_zero()) out[r].add_product(s, x);
      }
    }
  }
  return out;
}

CheckList validate_calculus(const Calculus& c) {
  c.check_shapes();
  CheckList out;
  const Algebra& a = c.algebra;
  const Bimodule& e = c.one_forms;
  const Bimodule& o2 = c.two_forms;
  const std::size_t n = a.dim();
  const std::size_t m = e.dim();
  const auto& label = a.labels();

  if (auto f = e.validate(a)) out.add("one_forms_bimodule", "one_forms_not_bimodule", f->message);
  else out.pass("one_forms_bimodule");
  if (auto f = o2.validate(a)) out.add("two_forms_bimodule", "two_forms_not_bimodule", f->message);
  else out.pass("two_forms_bimodule");

  // d(b_i b_j) = d(b_i) b_j + b_i d(b_j)
  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i) {
      for (std::size_t j = 0; j < n && witness.empty(); ++j) {
        Vector lhs = c.d0.apply(a.product(i, j));
        Vector rhs = e.right(j).apply(c.d0.column(i)) + e.left(i).apply(c.d0.column(j));
        if (lhs != rhs) witness = "(" + label[i] + ", " + label[j] + ")";
      }
    }
    if (witness.empty()) out.pass("d0_leibniz");
    else out.add("d0_leibniz", "d0_not_leibniz", witness);
  }

  if ((c.d1 * c.d0).is_zero()) out.pass("d_squared_zero");
  else out.add("d_squared_zero", "d_squared_nonzero");

  // (e b_i) x f - e x (b_i f) must map to zero.
  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i) {
      for (std::size_t p = 0; p < m && witness.empty(); ++p) {
        Vector ep = e.right(i).column(p);
        for (std::size_t q = 0; q < m && witness.empty(); ++q) {
          Vector lhs = wedge_of(c, ep, unit_vector(m, q));
          Vector rhs = wedge_of(c, unit_vector(m, p), e.left(i).column(q));
          if (lhs != rhs) witness = "e" + idx(p) + " " + label[i] + " x e" + idx(q);
        }
      }
    }
    if (witness.empty()) out.pass("wedge_middle_linear");
    else out.add("wedge_middle_linear", "wedge_not_middle_linear", witness);
  }

  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i) {
      for (std::size_t p = 0; p < m && witness.empty(); ++p) {
        for (std::size_t q = 0; q < m && witness.empty(); ++q) {
          Vector up = unit_vector(m, p), uq = unit_vector(m, q);
          Vector base = wedge_of(c, up, uq);
          if (wedge_of(c, e.left(i).column(p), uq) != o2.left(i).apply(base) ||
              wedge_of(c, up, e.right(i).column(q)) != o2.right(i).apply(base)) {
            witness = label[i] + " acting on e" + idx(p) + " x e" + idx(q);
          }
        }
      }
    }
    if (witness.empty()) out.pass("wedge_bimodule_map");
    else out.add("wedge_bimodule_map", "wedge_not_bimodule_map", witness);
  }

  // d(e b) = de b - e ^ db and d(b e) = db ^ e + b de.
  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i) {
      Vector db = c.d0.column(i);
      for (std::size_t k = 0; k < m && witness.empty(); ++k) {
        Vector ek = unit_vector(m, k);
        Vector dek = c.d1.column(k);
        Vector right = c.d1.apply(e.right(i).column(k));
        Vector left = c.d1.apply(e.left(i).column(k));
        if (right != o2.right(i).apply(dek) - wedge_of(c, ek, db)) {
          witness = "d(e" + idx(k) + " " + label[i] + ")";
        } else if (left != wedge_of(c, db, ek) + o2.left(i).apply(dek)) {
          witness = "d(" + label[i] + " e" + idx(k) + ")";
        }
      }
    }
    if (witness.empty()) out.pass("graded_leibniz");
    else out.add("graded_leibniz", "graded_leibniz_fails", witness);
  }

  {
    Subspace span(m);
    for (std::size_t i = 0; i < n; ++i) {
      Vector da = c.d0.column(i);
      for (std::size_t j = 0; j < n; ++j) span.insert(e.right(j).apply(da));
    }
    if (span.dim() == m) out.pass("one_forms_spanned");
    else out.add("one_forms_spanned", "one_forms_not_spanned",
                 "span of da b has dimension " + idx(span.dim()) + " < " + idx(m));
  }

  {
    std::size_t r = rank(c.wedge);
    if (r == o2.dim()) out.pass("wedge_surjective");
    else out.add("wedge_surjective", "wedge_not_surjective",
                 "rank " + idx(r) + " < " + idx(o2.dim()));
  }
  return out;
}

Outcome<TamenessCertificate> build_symmetry(const Calculus& c) {
  c.check_shapes();
  const Bimodule& e = c.one_forms;
  const std::size_t n = c.algebra.dim();
  const std::size_t m = e.dim();
  TamenessCertificate cert;

  CenteredCheck centered = is_centered(e);
  if (!centered.centered) {
    std::string w;
    for (std::size_t k = 0; k < m; ++k) {
      if (!(*centered.witness)[k].is_zero()) w = "e" + idx(k);
    }
    return Failure{"NotCentered", "Z(E) A misses " + w + " (dim Z(E) = " +
                                      idx(centered.center.dim()) + ")"};
  }
  cert.conditions.pass("centered");
  cert.center = centered.center;
  cert.central_basis = centered.center.basis();
  const auto& z = cert.central_basis;
  const std::size_t nz = z.size();

  {
    std::vector<Vector> cols;
    for (std::size_t r = 0; r < nz; ++r)
      for (std::size_t i = 0; i < n; ++i) cols.push_back(e.right(i).apply(z[r]));
    auto dec = solve_columns(Matrix::from_columns(cols, m), Matrix::identity(m));
    if (!dec) return Failure{"NotCentered", "central elements do not generate E"};
    cert.central_decomposition = std::move(*dec);
  }

  cert.ee = QuotientTensor(e, e);
  const QuotientTensor& ee = cert.ee;
  const Bimodule& eem = ee.module();
  const std::size_t d = ee.dim();

  std::vector<Vector> s_cols, t_cols;
  for (std::size_t p = 0; p < nz; ++p) {
    for (std::size_t q = 0; q < nz; ++q) {
      Vector pq = ee.tensor(z[p], z[q]);
      Vector qp = ee.tensor(z[q], z[p]);
      for (std::size_t r = 0; r < n; ++r) {
        s_cols.push_back(eem.right(r).apply(pq));
        t_cols.push_back(eem.right(r).apply(qp));
      }
    }
  }
  const Matrix s = Matrix::from_columns(s_cols, d);
  const Matrix t = Matrix::from_columns(t_cols, d);
  const Subspace s_kernel = kernel(s);
  for (const auto& k : s_kernel.basis()) {
    if (!is_zero(t.apply(k))) {
      return Failure{"FlipNotWellDefined",
                     "a relation among z_p x z_q a is not preserved by the flip"};
    }
  }
  auto right_inverse = solve_columns(s, Matrix::identity(d));
  if (!right_inverse) return Failure{"NotCentered", "central tensors do not span E x_A E"};
  cert.sigma = t * *right_inverse;
  cert.conditions.pass("sigma_well_defined");

  const Matrix id = Matrix::identity(d);
  if (cert.sigma * cert.sigma != id) return Failure{"SigmaNotInvolution", "sigma^2 != 1"};
  cert.conditions.pass("sigma_involution");
  for (std::size_t i = 0; i < n; ++i) {
    if (cert.sigma * eem.left(i) != eem.left(i) * cert.sigma) {
      return Failure{"SigmaNotBilinear", "sigma is not left linear for " + c.algebra.labels()[i]};
    }
    if (cert.sigma * eem.right(i) != eem.right(i) * cert.sigma) {
      return Failure{"SigmaNotBilinear", "sigma is not right linear for " + c.algebra.labels()[i]};
    }
  }
  cert.conditions.pass("sigma_bilinear");

  cert.p_sym = Scalar::rational(1, 2) * (id + cert.sigma);
  cert.wedge_hat = Matrix(c.two_forms.dim(), d);
  for (std::size_t k = 0; k < d; ++k) cert.wedge_hat.set_column(k, c.wedge.column(ee.basis_columns()[k]));
  cert.ker_wedge = kernel(cert.wedge_hat);
  Subspace range = Subspace::column_space(cert.p_sym);
  if (range != cert.ker_wedge) {
    return Failure{"PsymRangeMismatch", "Ran(P_sym) has dimension " + idx(range.dim()) +
                                            ", Ker(wedge) has dimension " +
                                            idx(cert.ker_wedge.dim())};
  }
  cert.conditions.pass("psym_projects_onto_ker_wedge");

  cert.complement_f = kernel(cert.p_sym);
  const Matrix f = Matrix::from_columns(cert.complement_f.basis(), d);
  const Matrix q = cert.wedge_hat * f;
  std::optional<Matrix> q_inv;
  if (q.rows() == q.cols()) q_inv = inverse(q);
  if (!q_inv) {
    return Failure{"QNotInvertible", "wedge restricted to F: dim F = " + idx(f.cols()) +
                                         ", dim Omega2 = " + idx(q.rows())};
  }
  cert.q_inverse = f * *q_inv;
  cert.conditions.pass("q_invertible");
  return cert;
}

Vector q_inverse_apply(const TamenessCertificate& cert, const Vector& w) {
  return cert.q_inverse.apply(w);
}

std::vector<Vector> central_components(const Calculus& c, const TamenessCertificate& cert,
                                       const Vector& e) {
  const std::size_t n = c.algebra.dim();
  Vector flat = cert.central_decomposition.apply(e);
  std::vector<Vector> out(cert.central_basis.size(), Vector(n));
  for (std::size_t r = 0; r < out.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) out[r][i] = flat[r * n + i];
  return out;
}

}  // namespace ncg
