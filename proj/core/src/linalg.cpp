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

#include "ncg/linalg.hpp"

#include <algorithm>
#include <string>

#include "ncg/error.hpp"

namespace ncg {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw ContractError(what);
}

}  // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v[k] = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(Vector a, const Vector& b) {
  require(a.size() == b.size(), "vector size mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!b[k].is_zero()) a[k] += b[k];
  }
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  require(a.size() == b.size(), "vector size mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!b[k].is_zero()) a[k] -= b[k];
  }
  return a;
}

Vector operator*(const Scalar& s, Vector v) {
  if (s.is_one()) return v;
  for (auto& x : v) {
    if (!x.is_zero()) x *= s;
  }
  return v;
}

void axpy(Vector& a, const Scalar& s, std::span<const Scalar> b) {
  require(a.size() == b.size(), "axpy size mismatch");
  if (s.is_zero()) return;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!b[k].is_zero()) a[k].add_product(s, b[k]);
  }
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  if (!cols.empty()) rows = cols.front().size();
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
  require(v.size() == rows_, "column size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const { return ncg::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  require(v.size() == cols_, "matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r].add_product(a, v[c]);
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "matrix product size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(k, c);
        if (!y.is_zero()) out(r, c).add_product(x, y);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& x : m.data_) {
    if (!x.is_zero()) x *= s;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t k = 0; k < ambient_dim; ++k) {
    s.rows_.push_back(unit_vector(ambient_dim, k));
    s.pivots_.push_back(k);
  }
  return s;
}

Subspace Subspace::column_space(const Matrix& m) {
  Subspace s(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) s.insert(m.column(c));
  return s;
}

Vector Subspace::reduce(Vector v) const {
  require(v.size() == ambient_, "subspace ambient mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& lead = v[pivots_[k]];
    if (lead.is_zero()) continue;
    Scalar f = -lead;
    axpy(v, f, rows_[k]);
  }
  return v;
}

bool Subspace::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t pivot = 0;
  while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
  if (pivot == v.size()) return false;
  if (!v[pivot].is_one()) {
    Scalar inv = v[pivot].inverse();
    for (auto& x : v) {
      if (!x.is_zero()) x *= inv;
    }
  }
  for (auto& row : rows_) {
    if (row[pivot].is_zero()) continue;
    Scalar f = -row[pivot];
    axpy(row, f, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  return ncg::is_zero(reduce(Vector(v.begin(), v.end())));
}

bool Subspace::contains(const Subspace& other) const {
  require(other.ambient_ == ambient_, "subspace ambient mismatch");
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require(u.ambient_dim() == v.ambient_dim(), "subspace ambient mismatch");
  Subspace s = u;
  for (const auto& b : v.basis()) s.insert(b);
  return s;
}

Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
  // Zassenhaus: rows (x | x) for x in U and (y | 0) for y in V; the echelon
  // rows whose left half vanishes span U ∩ V in their right half.
  require(u.ambient_dim() == v.ambient_dim(), "subspace ambient mismatch");
  const std::size_t n = u.ambient_dim();
  Subspace z(2 * n);
  for (const auto& x : u.basis()) {
    Vector row(2 * n);
    for (std::size_t k = 0; k < n; ++k) row[k] = row[n + k] = x[k];
    z.insert(std::move(row));
  }
  for (const auto& y : v.basis()) {
    Vector row(2 * n);
    for (std::size_t k = 0; k < n; ++k) row[k] = y[k];
    z.insert(std::move(row));
  }
  Subspace out(n);
  for (std::size_t r = 0; r < z.dim(); ++r) {
    if (z.pivots()[r] < n) continue;
    const auto& row = z.basis()[r];
    out.insert(Vector(row.begin() + static_cast<std::ptrdiff_t>(n), row.end()));
  }
  return out;
}

SubspaceRelations subspace_ops(const Subspace& u, const Subspace& v) {
  return {subspace_sum(u, v), subspace_intersection(u, v), v.contains(u)};
}

// ---------------------------------------------------------------------------
// LinearSystem

LinearSystem::LinearSystem(std::size_t unknowns, std::size_t rhs_count)
    : unknowns_(unknowns), rhs_count_(rhs_count), augmented_(unknowns + rhs_count) {}

void LinearSystem::add_equation(std::span<const Scalar> coeffs, std::span<const Scalar> rhs) {
  require(coeffs.size() == unknowns_, "equation width mismatch");
  require(rhs.size() == rhs_count_, "right-hand side count mismatch");
  Vector row(unknowns_ + rhs_count_);
  std::copy(coeffs.begin(), coeffs.end(), row.begin());
  std::copy(rhs.begin(), rhs.end(), row.begin() + static_cast<std::ptrdiff_t>(unknowns_));
  augmented_.insert(std::move(row));
}

void LinearSystem::add_equation(std::span<const Scalar> coeffs, const Scalar& rhs) {
  require(rhs_count_ == 1, "single right-hand side expected");
  add_equation(coeffs, std::span<const Scalar>(&rhs, 1));
}

void LinearSystem::add_homogeneous(std::span<const Scalar> coeffs) {
  require(coeffs.size() == unknowns_, "equation width mismatch");
  Vector row(unknowns_ + rhs_count_);
  std::copy(coeffs.begin(), coeffs.end(), row.begin());
  augmented_.insert(std::move(row));
}

std::size_t LinearSystem::rank() const {
  const auto& p = augmented_.pivots();
  return static_cast<std::size_t>(
      std::count_if(p.begin(), p.end(), [this](std::size_t c) { return c < unknowns_; }));
}

bool LinearSystem::consistent() const {
  const auto& p = augmented_.pivots();
  return std::none_of(p.begin(), p.end(), [this](std::size_t c) { return c >= unknowns_; });
}

Subspace LinearSystem::kernel() const {
  const auto& rows = augmented_.basis();
  const auto& piv = augmented_.pivots();
  std::vector<bool> is_pivot(unknowns_, false);
  for (std::size_t c : piv) {
    if (c < unknowns_) is_pivot[c] = true;
  }
  Subspace k(unknowns_);
  for (std::size_t f = 0; f < unknowns_; ++f) {
    if (is_pivot[f]) continue;
    Vector x(unknowns_);
    x[f] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (piv[r] >= unknowns_) continue;
      if (!rows[r][f].is_zero()) x[piv[r]] = -rows[r][f];
    }
    k.insert(std::move(x));
  }
  return k;
}

std::optional<std::vector<Vector>> LinearSystem::particulars() const {
  if (!consistent()) return std::nullopt;
  const auto& rows = augmented_.basis();
  const auto& piv = augmented_.pivots();
  std::vector<Vector> out(rhs_count_, Vector(unknowns_));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t k = 0; k < rhs_count_; ++k) out[k][piv[r]] = rows[r][unknowns_ + k];
  }
  return out;
}

std::optional<Solution> solve(const Matrix& m, std::span<const Scalar> b) {
  require(b.size() == m.rows(), "solve: dim(b) != rows(M)");
  LinearSystem sys(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) sys.add_equation(m.row(r), b[r]);
  auto p = sys.particulars();
  if (!p) return std::nullopt;
  return Solution{std::move((*p)[0]), sys.kernel()};
}

Subspace kernel(const Matrix& m) {
  LinearSystem sys(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) sys.add_homogeneous(m.row(r));
  return sys.kernel();
}

std::size_t rank(const Matrix& m) {
  Subspace rows(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.insert(Vector(m.row(r).begin(), m.row(r).end()));
  return rows.dim();
}

std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& b) {
  require(b.rows() == m.rows(), "solve_columns: row mismatch");
  LinearSystem sys(m.cols(), b.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) sys.add_equation(m.row(r), b.row(r));
  auto p = sys.particulars();
  if (!p) return std::nullopt;
  return Matrix::from_columns(*p, m.cols());
}

std::optional<Matrix> inverse(const Matrix& m) {
  require(m.rows() == m.cols(), "inverse of non-square matrix");
  LinearSystem sys(m.cols(), m.rows());
  const Matrix id = Matrix::identity(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) sys.add_equation(m.row(r), id.row(r));
  if (sys.rank() != m.cols()) return std::nullopt;
  auto p = sys.particulars();
  if (!p) return std::nullopt;
  return Matrix::from_columns(*p, m.cols());
}

}  // namespace ncg
