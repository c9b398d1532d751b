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

#include "ncg/bimodule.hpp"

#include <string>

namespace ncg {

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    v.insert(v.end(), row.begin(), row.end());
  }
  return v;
}

Matrix unflatten(std::span<const Scalar> v, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

Matrix combine(const std::vector<Matrix>& basis, const Vector& a, std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!a[i].is_zero()) m += a[i] * basis[i];
  }
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bimodule

Bimodule::Bimodule(std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right)
    : dim_(dim), left_(std::move(left)), right_(std::move(right)) {
  if (left_.size() != right_.size()) throw ContractError("bimodule: action counts differ");
  for (std::size_t i = 0; i < left_.size(); ++i) {
    if (left_[i].rows() != dim_ || left_[i].cols() != dim_ || right_[i].rows() != dim_ ||
        right_[i].cols() != dim_) {
      throw ContractError("bimodule: action matrix " + std::to_string(i) + " is not dim x dim");
    }
  }
}

Bimodule Bimodule::regular(const Algebra& a) {
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    left.push_back(a.left_basis(i));
    right.push_back(a.right_basis(i));
  }
  return Bimodule(a.dim(), std::move(left), std::move(right));
}

Bimodule Bimodule::zero(const Algebra& a) {
  return Bimodule(0, std::vector<Matrix>(a.dim()), std::vector<Matrix>(a.dim()));
}

Matrix Bimodule::left_action(const Vector& a) const { return combine(left_, a, dim_); }
Matrix Bimodule::right_action(const Vector& a) const { return combine(right_, a, dim_); }

Vector Bimodule::act_left(const Vector& a, const Vector& e) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) axpy(out, a[i], left_[i].apply(e));
  }
  return out;
}

Vector Bimodule::act_right(const Vector& e, const Vector& a) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) axpy(out, a[i], right_[i].apply(e));
  }
  return out;
}

std::optional<Failure> Bimodule::validate(const Algebra& a) const {
  if (algebra_dim() != a.dim()) throw ContractError("bimodule: wrong number of action matrices");
  const Matrix id = Matrix::identity(dim_);
  if (left_action(a.unit()) != id) return Failure{"NotBimodule", "unit does not act as identity on the left"};
  if (right_action(a.unit()) != id) return Failure{"NotBimodule", "unit does not act as identity on the right"};
  const auto& labels = a.labels();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector& ij = a.product(i, j);
      if (left_action(ij) != left_[i] * left_[j]) {
        return Failure{"NotBimodule", "left action not multiplicative at (" + labels[i] + ", " +
                                          labels[j] + ")"};
      }
      if (right_action(ij) != right_[j] * right_[i]) {
        return Failure{"NotBimodule", "right action not multiplicative at (" + labels[i] + ", " +
                                          labels[j] + ")"};
      }
      if (left_[i] * right_[j] != right_[j] * left_[i]) {
        return Failure{"NotBimodule", "left and right actions do not commute at (" + labels[i] +
                                          ", " + labels[j] + ")"};
      }
    }
  }
  return std::nullopt;
}

Subspace module_center(const Bimodule& e) {
  LinearSystem sys(e.dim(), 0);
  for (std::size_t i = 0; i < e.algebra_dim(); ++i) {
    Matrix c = e.left(i) - e.right(i);
    for (std::size_t r = 0; r < e.dim(); ++r) sys.add_homogeneous(c.row(r));
  }
  return sys.kernel();
}

CenteredCheck is_centered(const Bimodule& e) {
  CenteredCheck out;
  out.center = module_center(e);
  Subspace span(e.dim());
  for (const auto& z : out.center.basis()) {
    for (std::size_t i = 0; i < e.algebra_dim(); ++i) span.insert(e.right(i).apply(z));
  }
  out.centered = span.dim() == e.dim();
  if (!out.centered) {
    for (std::size_t k = 0; k < e.dim(); ++k) {
      Vector u = unit_vector(e.dim(), k);
      if (!span.contains(u)) {
        out.witness = std::move(u);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// QuotientTensor

QuotientTensor::QuotientTensor(const Bimodule& e, const Bimodule& f)
    : left_dim_(e.dim()), right_dim_(f.dim()), relations_(e.dim() * f.dim()) {
  if (e.algebra_dim() != f.algebra_dim()) throw ContractError("tensor: different algebras");
  const std::size_t n = e.algebra_dim();
  const std::size_t plain = plain_dim();

  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& re = e.right(i);
    const Matrix& lf = f.left(i);
    for (std::size_t p = 0; p < left_dim_; ++p) {
      for (std::size_t q = 0; q < right_dim_; ++q) {
        Vector rel(plain);
        for (std::size_t s = 0; s < left_dim_; ++s) {
          if (!re(s, p).is_zero()) rel[plain_index(s, q)] += re(s, p);
        }
        for (std::size_t s = 0; s < right_dim_; ++s) {
          if (!lf(s, q).is_zero()) rel[plain_index(p, s)] -= lf(s, q);
        }
        relations_.insert(std::move(rel));
      }
    }
  }

  std::vector<long> position(plain, -1);
  {
    std::vector<bool> pivot(plain, false);
    for (std::size_t c : relations_.pivots()) pivot[c] = true;
    for (std::size_t c = 0; c < plain; ++c) {
      if (!pivot[c]) {
        position[c] = static_cast<long>(basis_columns_.size());
        basis_columns_.push_back(c);
      }
    }
  }
  const std::size_t d = basis_columns_.size();
  columns_.assign(plain, Vector(d));
  for (std::size_t k = 0; k < d; ++k) columns_[basis_columns_[k]][k] = 1;
  const auto& rows = relations_.basis();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Vector& col = columns_[relations_.pivots()[r]];
    for (std::size_t k = 0; k < d; ++k) {
      const Scalar& x = rows[r][basis_columns_[k]];
      if (!x.is_zero()) col[k] = -x;
    }
  }

  std::vector<Matrix> left(n, Matrix(d, d)), right(n, Matrix(d, d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t p = basis_columns_[k] / right_dim_;
      const std::size_t q = basis_columns_[k] % right_dim_;
      Vector lp = e.left(i).column(p);
      Vector rq = f.right(i).column(q);
      left[i].set_column(k, tensor(lp, unit_vector(right_dim_, q)));
      right[i].set_column(k, tensor(unit_vector(left_dim_, p), rq));
    }
  }
  module_ = Bimodule(d, std::move(left), std::move(right));
}

Matrix QuotientTensor::project() const { return Matrix::from_columns(columns_, dim()); }

Matrix QuotientTensor::section() const {
  Matrix s(plain_dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) s(basis_columns_[k], k) = 1;
  return s;
}

Vector QuotientTensor::project(std::span<const Scalar> plain) const {
  if (plain.size() != plain_dim()) throw ContractError("project: wrong length");
  Vector out(dim());
  for (std::size_t c = 0; c < plain.size(); ++c) {
    if (!plain[c].is_zero()) axpy(out, plain[c], columns_[c]);
  }
  return out;
}

Vector QuotientTensor::tensor(std::span<const Scalar> e, std::span<const Scalar> f) const {
  if (e.size() != left_dim_ || f.size() != right_dim_) throw ContractError("tensor: wrong length");
  Vector out(dim());
  for (std::size_t p = 0; p < left_dim_; ++p) {
    if (e[p].is_zero()) continue;
    for (std::size_t q = 0; q < right_dim_; ++q) {
      if (f[q].is_zero()) continue;
      axpy(out, e[p] * f[q], columns_[plain_index(p, q)]);
    }
  }
  return out;
}

Vector QuotientTensor::lift(std::span<const Scalar> t) const {
  if (t.size() != dim()) throw ContractError("lift: wrong length");
  Vector out(plain_dim());
  for (std::size_t k = 0; k < dim(); ++k) out[basis_columns_[k]] = t[k];
  return out;
}

// ---------------------------------------------------------------------------
// HomModule

HomModule::HomModule(const Bimodule& e, const Bimodule& f)
    : source_dim_(e.dim()), target_dim_(f.dim()), source_(e), target_(f) {
  if (e.algebra_dim() != f.algebra_dim()) throw ContractError("hom: different algebras");
  const std::size_t m = source_dim_;
  const std::size_t t = target_dim_;
  LinearSystem sys(t * m, 0);
  Vector row(t * m);
  for (std::size_t i = 0; i < e.algebra_dim(); ++i) {
    const Matrix& re = e.right(i);
    const Matrix& rf = f.right(i);
    for (std::size_t r = 0; r < t; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        std::fill(row.begin(), row.end(), Scalar());
        for (std::size_t k = 0; k < m; ++k) {
          if (!re(k, c).is_zero()) row[r * m + k] += re(k, c);
        }
        for (std::size_t k = 0; k < t; ++k) {
          if (!rf(r, k).is_zero()) row[k * m + c] -= rf(r, k);
        }
        if (!is_zero(row)) sys.add_homogeneous(row);
      }
    }
  }
  space_ = sys.kernel();
  for (const auto& v : space_.basis()) basis_.push_back(unflatten(v, t, m));

  const std::size_t d = basis_.size();
  const std::size_t n = e.algebra_dim();
  std::vector<Matrix> left(n, Matrix(d, d)), right(n, Matrix(d, d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      left[i].set_column(k, coordinates(f.left(i) * basis_[k]));
      right[i].set_column(k, coordinates(basis_[k] * e.left(i)));
    }
  }
  module_ = Bimodule(d, std::move(left), std::move(right));
}

bool HomModule::contains(const Matrix& t) const {
  if (t.rows() != target_dim_ || t.cols() != source_dim_) throw ContractError("hom: shape");
  return space_.contains(flatten(t));
}

Vector HomModule::coordinates(const Matrix& t) const {
  if (t.rows() != target_dim_ || t.cols() != source_dim_) throw ContractError("hom: shape");
  Vector out(dim());
  const auto& piv = space_.pivots();
  for (std::size_t k = 0; k < piv.size(); ++k) out[k] = t(piv[k] / source_dim_, piv[k] % source_dim_);
  return out;
}

Matrix HomModule::element(std::span<const Scalar> coords) const {
  if (coords.size() != dim()) throw ContractError("hom: coordinate length");
  Matrix m(target_dim_, source_dim_);
  for (std::size_t k = 0; k < dim(); ++k) {
    if (!coords[k].is_zero()) m += coords[k] * basis_[k];
  }
  return m;
}

Matrix HomModule::left_act(const Vector& a, const Matrix& t) const {
  return target_.left_action(a) * t;
}

Matrix HomModule::right_act(const Matrix& t, const Vector& a) const {
  return t * source_.left_action(a);
}

}  // namespace ncg
