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

#include "ncg/connection.hpp"

#include <random>
#include <string>

namespace ncg {

namespace {

std::string idx(std::size_t k) { return std::to_string(k); }

std::string field(std::size_t p) { return "X" + idx(p + 1); }

/// cf(t, h) = sum t_s g(e_p x h) e_q, cs(w, t) = sum t_s g(w x e_p) e_q over
/// the canonical lift of t. Each is the contraction of the first leg of t
/// against a fixed form.
class Contraction {
 public:
  Contraction(const Geometry& geo, const Vector& fixed, bool fixed_on_right) : geo_(geo) {
    const std::size_t m = geo.form_dim();
    coeff_.reserve(m);
    for (std::size_t p = 0; p < m; ++p) {
      Vector ep = unit_vector(m, p);
      coeff_.push_back(fixed_on_right ? geo.pair(ep, fixed) : geo.pair(fixed, ep));
    }
  }

  Vector operator()(const Vector& t) const {
    const QuotientTensor& q = geo_.ee();
    const Bimodule& e = geo_.calculus().one_forms;
    const std::size_t m = geo_.form_dim();
    Vector out(m);
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (t[k].is_zero()) continue;
      const std::size_t col = q.basis_columns()[k];
      const Vector& a = coeff_[col / m];
      if (is_zero(a)) continue;
      axpy(out, t[k], e.act_left(a, unit_vector(m, col % m)));
    }
    return out;
  }

 private:
  const Geometry& geo_;
  std::vector<Vector> coeff_;
};

Matrix tensor_with_d(const Calculus& c, const TamenessCertificate& cert, std::size_t i) {
  const std::size_t m = c.one_forms.dim();
  Vector db = c.d0.column(i);
  Matrix out(cert.ee.dim(), m);
  for (std::size_t k = 0; k < m; ++k) out.set_column(k, cert.ee.tensor(unit_vector(m, k), db));
  return out;
}

}  // namespace

std::optional<Failure> check_leibniz(const Calculus& c, const TamenessCertificate& cert,
                                     const Connection& nabla) {
  const Bimodule& e = c.one_forms;
  const Bimodule& eem = cert.ee.module();
  if (nabla.values.rows() != cert.ee.dim() || nabla.values.cols() != e.dim()) {
    throw ContractError("connection must be dim(E x_A E) x dim E");
  }
  for (std::size_t i = 0; i < c.algebra.dim(); ++i) {
    Matrix lhs = nabla.values * e.right(i);
    Matrix rhs = eem.right(i) * nabla.values + tensor_with_d(c, cert, i);
    if (lhs != rhs) {
      for (std::size_t k = 0; k < e.dim(); ++k) {
        if (lhs.column(k) != rhs.column(k)) {
          return Failure{"NotLeibniz", "nabla(e" + idx(k) + " " + c.algebra.labels()[i] +
                                          ") != nabla(e" + idx(k) + ") " + c.algebra.labels()[i] +
                                          " + e" + idx(k) + " x d" + c.algebra.labels()[i]};
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Frames, Grassmann connection, torsion

Vector FramePresentation::component(std::size_t j, const Vector& e, std::size_t n) const {
  Vector full = splitting.apply(e);
  return Vector(full.begin() + static_cast<std::ptrdiff_t>(j * n),
                full.begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
}

Outcome<FramePresentation> frame_presentation(const Calculus& c, const TamenessCertificate& cert,
                                              std::optional<std::vector<Vector>> generators) {
  const Algebra& a = c.algebra;
  const Bimodule& e = c.one_forms;
  const std::size_t n = a.dim();
  const std::size_t m = e.dim();
  FramePresentation frame;
  frame.generators = generators ? std::move(*generators) : cert.central_basis;
  const auto& phi = frame.generators;
  const std::size_t nf = phi.size();
  for (const auto& g : phi) {
    if (g.size() != m) throw ContractError("frame generator has wrong length");
  }
  // Unknown S[(j,l),k] at ((j*n + l)*m + k).
  auto at = [&](std::size_t j, std::size_t l, std::size_t k) { return (j * n + l) * m + k; };
  const std::size_t unknowns = nf * n * m;
  LinearSystem sys(unknowns);
  Vector row(unknowns);

  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& re = e.right(i);
    const Matrix& ra = a.right_basis(i);
    for (std::size_t j = 0; j < nf; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t col = 0; col < m; ++col) {
          std::fill(row.begin(), row.end(), Scalar());
          for (std::size_t k = 0; k < m; ++k) {
            if (!re(k, col).is_zero()) row[at(j, l, k)] += re(k, col);
          }
          for (std::size_t s = 0; s < n; ++s) {
            if (!ra(l, s).is_zero()) row[at(j, s, col)] -= ra(l, s);
          }
          if (!is_zero(row)) sys.add_equation(row, Scalar());
        }
      }
    }
  }
  std::vector<std::vector<Vector>> moved(nf, std::vector<Vector>(n));
  for (std::size_t j = 0; j < nf; ++j)
    for (std::size_t l = 0; l < n; ++l) moved[j][l] = e.right(l).apply(phi[j]);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t r = 0; r < m; ++r) {
      std::fill(row.begin(), row.end(), Scalar());
      for (std::size_t j = 0; j < nf; ++j)
        for (std::size_t l = 0; l < n; ++l) row[at(j, l, k)] = moved[j][l][r];
      sys.add_equation(row, Scalar(r == k ? 1 : 0));
    }
  }
  auto sol = sys.particulars();
  if (!sol) {
    return Failure{"NoSplitting", "no right A-linear splitting exists for the " + idx(nf) +
                                      " given generators"};
  }
  frame.splitting = Matrix(nf * n, m);
  for (std::size_t jl = 0; jl < nf * n; ++jl)
    for (std::size_t k = 0; k < m; ++k) frame.splitting(jl, k) = (*sol)[0][jl * m + k];

  std::vector<std::vector<Vector>> p(nf, std::vector<Vector>(nf));
  for (std::size_t j = 0; j < nf; ++j)
    for (std::size_t k = 0; k < nf; ++k) p[j][k] = frame.component(j, phi[k], n);
  frame.idempotent_check = true;
  for (std::size_t j = 0; j < nf && frame.idempotent_check; ++j) {
    for (std::size_t k = 0; k < nf; ++k) {
      Vector sum(n);
      for (std::size_t l = 0; l < nf; ++l) sum = sum + a.multiply(p[j][l], p[l][k]);
      if (sum != p[j][k]) {
        frame.idempotent_check = false;
        break;
      }
    }
  }
  return frame;
}

Connection grassmann(const Calculus& c, const TamenessCertificate& cert,
                     const FramePresentation& frame) {
  const std::size_t n = c.algebra.dim();
  const std::size_t m = c.one_forms.dim();
  Connection out{Matrix(cert.ee.dim(), m)};
  for (std::size_t k = 0; k < m; ++k) {
    Vector ek = unit_vector(m, k);
    Vector col(cert.ee.dim());
    for (std::size_t j = 0; j < frame.generators.size(); ++j) {
      Vector ds = c.d0.apply(frame.component(j, ek, n));
      col = col + cert.ee.tensor(frame.generators[j], ds);
    }
    out.values.set_column(k, col);
  }
  return out;
}

Outcome<Matrix> torsion(const Calculus& c, const TamenessCertificate& cert, const Connection& nabla) {
  Matrix t = cert.wedge_hat * nabla.values + c.d1;
  for (std::size_t i = 0; i < c.algebra.dim(); ++i) {
    if (t * c.one_forms.right(i) != c.two_forms.right(i) * t) {
      return Failure{"NotRightLinear", "torsion is not right linear for " + c.algebra.labels()[i]};
    }
  }
  return t;
}

Outcome<Connection> nabla_zero(const Calculus& c, const TamenessCertificate& cert,
                               const FramePresentation& frame) {
  Connection gr = grassmann(c, cert, frame);
  auto t = torsion(c, cert, gr);
  if (!t) return t.failure();
  return Connection{gr.values - cert.q_inverse * *t};
}

// ---------------------------------------------------------------------------
// Covariant derivatives and brackets

Functional covariant_derivative(const Geometry& geo, const Connection& nabla, const Functional& x,
                                const Functional& y) {
  Matrix contraction = geo.pairing_matrix(x, y);
  return geo.delta(y) * x - contraction * nabla.values;
}

CovariantTable covariant_table(const Geometry& geo, const Connection& nabla) {
  const auto& f = geo.fields();
  CovariantTable table(f.size(), std::vector<Functional>(f.size()));
  for (std::size_t p = 0; p < f.size(); ++p)
    for (std::size_t q = 0; q < f.size(); ++q) table[p][q] = covariant_derivative(geo, nabla, f[q], f[p]);
  return table;
}

Outcome<Functional> lie_bracket(const Geometry& geo, const Functional& x, const Functional& y) {
  const Matrix dx = geo.delta(x);
  const Matrix dy = geo.delta(y);
  const Matrix target = dx * dy - dy * dx;
  const HomModule& dual = geo.dual();
  const std::size_t n = geo.algebra_dim();
  std::vector<Matrix> images;
  images.reserve(dual.dim());
  for (const auto& h : dual.basis()) images.push_back(geo.delta(h));
  LinearSystem sys(dual.dim());
  Vector row(dual.dim());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < images.size(); ++t) row[t] = images[t](r, i);
      sys.add_equation(row, target(r, i));
    }
  }
  auto sol = sys.particulars();
  if (!sol) return Failure{"BracketUnsolvable", "no functional Z with Z(da) = [delta_X, delta_Y](a)"};
  Functional z = dual.element((*sol)[0]);
  if (!geo.is_central(z)) return Failure{"BracketNotCentral", "the bracket is not in Z(E*)"};
  return z;
}

Functional bracket_general(const Geometry& geo, const Functional& x, const Functional& phi) {
  const auto& f = geo.fields();
  std::vector<Vector> a = geo.field_decomposition(phi);
  const Matrix dx = geo.delta(x);
  Functional out(geo.algebra_dim(), geo.form_dim());
  for (std::size_t p = 0; p < f.size(); ++p) {
    if (is_zero(a[p])) continue;
    Functional b = lie_bracket(geo, x, f[p]).value();
    out += geo.right_act(b, a[p]);
    out += geo.left_act(dx.apply(a[p]), f[p]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Torsion and compatibility, both routes

DualVerdict check_torsionless_cov(const Geometry& geo, const Connection& nabla) {
  DualVerdict v;
  auto t = torsion(geo.calculus(), geo.cert(), nabla);
  v.form = t.ok() && t->is_zero();

  const auto& f = geo.fields();
  CovariantTable table = covariant_table(geo, nabla);
  v.covariant = true;
  for (std::size_t p = 0; p < f.size() && v.covariant; ++p) {
    for (std::size_t q = 0; q < f.size(); ++q) {
      Functional lhs = table[p][q] - table[q][p] - lie_bracket(geo, f[p], f[q]).value();
      if (!lhs.is_zero()) {
        v.covariant = false;
        v.witness = "nabla_" + field(p) + " " + field(q) + " - nabla_" + field(q) + " " + field(p) +
                    " != [" + field(p) + ", " + field(q) + "]";
        break;
      }
    }
  }
  if (v.witness.empty() && !v.form) {
    v.witness = t.ok() ? "torsion is nonzero" : t.failure().message;
  }
  return v;
}

Vector pi_zero(const Geometry& geo, const Connection& nabla, const Vector& w, const Vector& h) {
  Contraction first(geo, h, true);
  Contraction second(geo, w, false);
  return first(nabla.apply(w)) + second(nabla.apply(h));
}

DualVerdict check_compat_cov(const Geometry& geo, const Connection& nabla) {
  DualVerdict v;
  const auto& f = geo.fields();
  const std::size_t nf = f.size();
  const auto& z = geo.cert().central_basis;
  CovariantTable table = covariant_table(geo, nabla);

  std::vector<std::vector<Vector>> table_inv(nf, std::vector<Vector>(nf));
  for (std::size_t p = 0; p < nf; ++p)
    for (std::size_t q = 0; q < nf; ++q) table_inv[p][q] = geo.v_g_inverse(table[p][q]);

  // delta_Y(g~(Z x X)) = g~(nabla_Y Z x X) + g~(nabla_Y X x Z)
  v.covariant = true;
  for (std::size_t y = 0; y < nf && v.covariant; ++y) {
    for (std::size_t zz = 0; zz < nf && v.covariant; ++zz) {
      for (std::size_t x = 0; x < nf; ++x) {
        Vector lhs = geo.delta(f[y]).apply(geo.pair(z[zz], z[x]));
        Vector rhs = geo.pair(table_inv[y][zz], z[x]) + geo.pair(table_inv[y][x], z[zz]);
        if (lhs != rhs) {
          v.covariant = false;
          v.witness = "(X, Y, Z) = (" + field(x) + ", " + field(y) + ", " + field(zz) + ")";
          break;
        }
      }
    }
  }

  const Calculus& c = geo.calculus();
  const Bimodule& e = c.one_forms;
  v.form = true;
  std::string form_witness;
  for (std::size_t p = 0; p < z.size() && v.form; ++p) {
    for (std::size_t q = 0; q < z.size() && v.form; ++q) {
      Vector base = pi_zero(geo, nabla, z[p], z[q]);
      Vector gpq = geo.pair(z[p], z[q]);
      for (std::size_t r = 0; r < c.algebra.dim(); ++r) {
        Vector lhs = e.right(r).apply(base) + e.act_left(gpq, c.d0.column(r));
        Vector rhs = c.d0.apply(c.algebra.right_basis(r).apply(gpq));
        if (lhs != rhs) {
          v.form = false;
          form_witness = "Pi_g(z" + idx(p) + " x z" + idx(q) + " " + c.algebra.labels()[r] +
                         ") != dg";
          break;
        }
      }
    }
  }
  if (v.witness.empty()) v.witness = form_witness;
  return v;
}

// ---------------------------------------------------------------------------
// Levi-Civita: Koszul route

Vector koszul_rhs(const Geometry& geo, const Functional& x, const Functional& y, const Functional& z) {
  const Vector vx = geo.v_g_inverse(x);
  const Vector vy = geo.v_g_inverse(y);
  const Vector vz = geo.v_g_inverse(z);
  const Functional xz = bracket_general(geo, x, z);
  const Functional yx = lie_bracket(geo, y, x).value();
  const Functional zy = Scalar(-1) * bracket_general(geo, y, z);

  Vector out = geo.delta(x).apply(geo.pair(vy, vz));
  out = out + geo.delta(y).apply(geo.pair(vx, vz));
  out = out - geo.delta(z).apply(geo.pair(vx, vy));
  out = out - geo.pair(vy, geo.v_g_inverse(xz));
  out = out - geo.pair(geo.v_g_inverse(yx), vz);
  out = out + geo.pair(vx, geo.v_g_inverse(zy));
  return out;
}

Outcome<KoszulResult> levi_civita_koszul(const Geometry& geo) {
  const auto& f = geo.fields();
  const std::size_t nf = f.size();
  const std::size_t m = geo.form_dim();
  const std::size_t n = geo.algebra_dim();
  KoszulResult out;
  out.table.assign(nf, std::vector<Functional>(nf, Functional(n, m)));
  out.in_fields.assign(nf, std::vector<bool>(nf, false));
  std::vector<Functional> probes;
  for (std::size_t i = 0; i < m; ++i) probes.push_back(geo.v_g(unit_vector(m, i)));
  const Scalar half = Scalar::rational(1, 2);
  for (std::size_t p = 0; p < nf; ++p) {
    for (std::size_t q = 0; q < nf; ++q) {
      Functional& entry = out.table[p][q];
      for (std::size_t i = 0; i < m; ++i) entry.set_column(i, half * koszul_rhs(geo, f[p], f[q], probes[i]));
      out.in_fields[p][q] = geo.vector_fields().dual_center.contains(geo.dual().coordinates(entry));
    }
  }
  auto nabla = reconstruct(geo, out.table);
  if (!nabla) return nabla.failure();
  out.nabla = std::move(nabla).value();
  return out;
}

Outcome<Connection> reconstruct(const Geometry& geo, const CovariantTable& table) {
  const Calculus& c = geo.calculus();
  const auto& f = geo.fields();
  const auto& z = geo.cert().central_basis;
  const QuotientTensor& ee = geo.ee();
  const std::size_t nf = f.size();
  const std::size_t n = geo.algebra_dim();
  const std::size_t m = geo.form_dim();
  const std::size_t d = ee.dim();

  std::vector<std::vector<Matrix>> contraction(nf, std::vector<Matrix>(nf));
  for (std::size_t p = 0; p < nf; ++p)
    for (std::size_t q = 0; q < nf; ++q) contraction[p][q] = geo.pairing_matrix(f[p], f[q]);

  // (X_p x X_q)(nabla z_r) = delta_{X_q}(X_p(z_r)) - (nabla_{X_q} X_p)(z_r)
  std::vector<Vector> central_values;
  for (std::size_t r = 0; r < z.size(); ++r) {
    LinearSystem sys(d);
    for (std::size_t p = 0; p < nf; ++p) {
      for (std::size_t q = 0; q < nf; ++q) {
        Vector rhs = geo.delta(f[q]).apply(f[p].apply(z[r])) - table[q][p].apply(z[r]);
        for (std::size_t s = 0; s < n; ++s) sys.add_equation(contraction[p][q].row(s), rhs[s]);
      }
    }
    auto sol = sys.particulars();
    if (!sol || sys.rank() != d) {
      return Failure{"SystemSingular", "the pairings X_p x X_q do not determine nabla(z" +
                                           idx(r) + ") (rank " + idx(sys.rank()) + " of " + idx(d) +
                                           (sol ? ")" : ", inconsistent)")};
    }
    central_values.push_back(std::move((*sol)[0]));
  }

  const Bimodule& eem = ee.module();
  Connection out{Matrix(d, m)};
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Vector> a = central_components(c, geo.cert(), unit_vector(m, k));
    Vector col(d);
    for (std::size_t r = 0; r < z.size(); ++r) {
      if (is_zero(a[r])) continue;
      col = col + eem.right_action(a[r]).apply(central_values[r]);
      col = col + ee.tensor(z[r], c.d0.apply(a[r]));
    }
    out.values.set_column(k, col);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Levi-Civita: direct route

HomModule connection_differences(const Calculus& c, const TamenessCertificate& cert) {
  return HomModule(c.one_forms, cert.ee.module());
}

Outcome<DirectResult> levi_civita_direct(const Geometry& geo, const Connection& nabla0) {
  const Calculus& c = geo.calculus();
  const TamenessCertificate& cert = geo.cert();
  const auto& z = cert.central_basis;
  const Bimodule& e = c.one_forms;
  const std::size_t n = geo.algebra_dim();
  const std::size_t m = geo.form_dim();
  const HomModule h = connection_differences(c, cert);
  const std::size_t unknowns = h.dim();

  DirectResult out;
  out.unknowns = unknowns;
  LinearSystem sys(unknowns);
  Vector row(unknowns);

  // wedge o alpha = 0
  std::vector<Matrix> wedged;
  for (const auto& ht : h.basis()) wedged.push_back(cert.wedge_hat * ht);
  for (std::size_t r = 0; r < c.two_forms.dim(); ++r) {
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t t = 0; t < unknowns; ++t) row[t] = wedged[t](r, k);
      sys.add_equation(row, Scalar());
      ++out.equations;
    }
  }

  // Pi_0(alpha)(z_p x z_q) b_r = d(g(z_p x z_q) b_r) - Pi_0(nabla0)(z_p x z_q) b_r - g(z_p x z_q) db_r
  std::vector<Contraction> first, second;
  for (const auto& zp : z) {
    first.emplace_back(geo, zp, true);
    second.emplace_back(geo, zp, false);
  }
  for (std::size_t p = 0; p < z.size(); ++p) {
    for (std::size_t q = 0; q < z.size(); ++q) {
      std::vector<Vector> images;
      images.reserve(unknowns);
      for (const auto& ht : h.basis()) {
        images.push_back(first[q](ht.apply(z[p])) + second[p](ht.apply(z[q])));
      }
      Vector base = pi_zero(geo, nabla0, z[p], z[q]);
      Vector gpq = geo.pair(z[p], z[q]);
      for (std::size_t r = 0; r < n; ++r) {
        Vector rhs = c.d0.apply(c.algebra.right_basis(r).apply(gpq)) - e.right(r).apply(base) -
                     e.act_left(gpq, c.d0.column(r));
        std::vector<Vector> moved;
        moved.reserve(unknowns);
        for (const auto& img : images) moved.push_back(e.right(r).apply(img));
        for (std::size_t s = 0; s < m; ++s) {
          for (std::size_t t = 0; t < unknowns; ++t) row[t] = moved[t][s];
          sys.add_equation(row, rhs[s]);
          ++out.equations;
        }
      }
    }
  }

  out.kernel_dim = unknowns - sys.rank();
  auto sol = sys.particulars();
  if (!sol) return Failure{"NoSolution", "no torsionless compatible connection exists"};
  if (out.kernel_dim != 0) {
    return Failure{"NonUniqueSolution", "constraint kernel has dimension " + idx(out.kernel_dim)};
  }
  out.nabla = Connection{nabla0.values + h.element((*sol)[0])};
  return out;
}

// ---------------------------------------------------------------------------

CheckList classical_bracket_check(const Geometry& geo, const Connection& nabla0) {
  const Calculus& c = geo.calculus();
  const auto& f = geo.fields();
  const std::size_t m = geo.form_dim();
  CheckList out;
  std::string formula, exact;
  for (std::size_t p = 0; p < f.size(); ++p) {
    for (std::size_t q = 0; q < f.size(); ++q) {
      Functional bracket = lie_bracket(geo, f[p], f[q]).value();
      Matrix anti = geo.pairing_matrix(f[p], f[q]) - geo.pairing_matrix(f[q], f[p]);
      Matrix third = anti * nabla0.values;
      Functional rhs = geo.delta(f[p]) * f[q] - geo.delta(f[q]) * f[p] + third;
      if (formula.empty() && rhs != bracket) {
        for (std::size_t k = 0; k < m; ++k) {
          if (rhs.column(k) != bracket.column(k)) {
            formula = "[" + field(p) + ", " + field(q) + "](e" + idx(k) + ")";
            break;
          }
        }
      }
      if (exact.empty() && !(third * c.d0).is_zero()) {
        exact = "(" + field(p) + " x " + field(q) + " - " + field(q) + " x " + field(p) +
                ") nabla0(da) != 0";
      }
    }
  }
  if (formula.empty()) out.pass("bracket_formula");
  else out.add("bracket_formula", "BracketFormulaFails", formula);
  if (exact.empty()) out.pass("antisymmetric_pairing_kills_nabla0_of_exact_forms");
  else out.add("antisymmetric_pairing_kills_nabla0_of_exact_forms", "ExactFormIdentityFails", exact);
  return out;
}

Connection perturb(const HomModule& differences, const Connection& nabla, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Vector coeff(differences.dim());
  bool any = false;
  for (auto& x : coeff) {
    x = Scalar(static_cast<long>(rng() % 5) - 2);
    any = any || !x.is_zero();
  }
  if (!any && !coeff.empty()) coeff[0] = 1;
  return Connection{nabla.values + differences.element(coeff)};
}

}  // namespace ncg
