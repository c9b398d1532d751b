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

#ifndef NCG_LINALG_HPP
#define NCG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ncg/scalar.hpp"

namespace ncg {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(std::span<const Scalar> v);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Scalar& s, Vector v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, std::span<const Scalar> b);

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);

  bool is_zero() const;
  Matrix transpose() const;
  Vector apply(std::span<const Scalar> v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// A subspace of K^n held as a reduced row echelon basis. Because the basis
/// is canonical, two subspaces are equal iff their bases are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);
  static Subspace column_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the spanning set; returns true iff the dimension grew.
  bool insert(Vector v);
  /// The remainder of v after elimination against the echelon basis; zero
  /// exactly when v lies in the subspace.
  Vector reduce(Vector v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceRelations {
  Subspace sum;
  Subspace intersection;
  bool contains;  // first ⊆ second
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersection(const Subspace& u, const Subspace& v);
SubspaceRelations subspace_ops(const Subspace& u, const Subspace& v);

struct Solution {
  Vector particular;
  Subspace kernel;
};

/// Accumulates the equations of a linear system row by row, so callers can
/// build systems far larger than they would want to materialize densely.
class LinearSystem {
 public:
  LinearSystem(std::size_t unknowns, std::size_t rhs_count = 1);

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rhs_count() const { return rhs_count_; }

  /// Appends sum_j coeffs[j] x_j = rhs (one value per right-hand side).
  void add_equation(std::span<const Scalar> coeffs, std::span<const Scalar> rhs);
  void add_equation(std::span<const Scalar> coeffs, const Scalar& rhs);
  void add_homogeneous(std::span<const Scalar> coeffs);

  std::size_t rank() const;
  bool consistent() const;
  Subspace kernel() const;
  /// One particular solution per right-hand side (free variables set to 0)
  /// plus the shared kernel; nullopt when any right-hand side is infeasible.
  std::optional<std::vector<Vector>> particulars() const;

 private:
  std::size_t unknowns_;
  std::size_t rhs_count_;
  Subspace augmented_;
};

std::optional<Solution> solve(const Matrix& m, std::span<const Scalar> b);
Subspace kernel(const Matrix& m);
std::size_t rank(const Matrix& m);
/// X with m * X = b column-wise; nullopt if some column is not in the range.
std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& b);
/// Inverse of a square matrix, nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace ncg

#endif  // NCG_LINALG_HPP
