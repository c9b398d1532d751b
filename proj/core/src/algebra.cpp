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

#include "ncg/algebra.hpp"

#include <string>

namespace ncg {

Algebra::Algebra(std::vector<std::string> labels, Vector unit,
                 std::vector<std::vector<Vector>> mul)
    : labels_(std::move(labels)), unit_(std::move(unit)), mul_(std::move(mul)) {
  const std::size_t n = labels_.size();
  if (unit_.size() != n || mul_.size() != n) throw ContractError("algebra: inconsistent dimensions");
  for (const auto& row : mul_) {
    if (row.size() != n) throw ContractError("algebra: mul must be dim x dim");
    for (const auto& v : row) {
      if (v.size() != n) throw ContractError("algebra: product vector has wrong length");
    }
  }
  left_.assign(n, Matrix(n, n));
  right_.assign(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      left_[i].set_column(j, mul_[i][j]);
      right_[i].set_column(j, mul_[j][i]);
    }
  }
}

Outcome<Algebra> Algebra::create(std::vector<std::string> labels, Vector unit,
                                 std::vector<std::vector<Vector>> mul) {
  Algebra a(std::move(labels), std::move(unit), std::move(mul));
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vector b = a.basis(i);
    if (a.multiply(a.unit_, b) != b || a.multiply(b, a.unit_) != b) {
      return Failure{"BadUnit", "unit law fails on basis element " + a.labels_[i]};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = a.right_[k].apply(a.mul_[i][j]);
        Vector rhs = a.left_[i].apply(a.mul_[j][k]);
        if (lhs != rhs) {
          return Failure{"NotAssociative", "(" + a.labels_[i] + " " + a.labels_[j] + ") " +
                                               a.labels_[k] + " != " + a.labels_[i] + " (" +
                                               a.labels_[j] + " " + a.labels_[k] + ")"};
        }
      }
    }
  }
  return a;
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw ContractError("multiply: wrong length");
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      axpy(out, c, mul_[i][j]);
    }
  }
  return out;
}

Matrix Algebra::left_mult(const Vector& a) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!a[i].is_zero()) m += a[i] * left_[i];
  }
  return m;
}

Matrix Algebra::right_mult(const Vector& a) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!a[i].is_zero()) m += a[i] * right_[i];
  }
  return m;
}

Subspace Algebra::center() const {
  LinearSystem sys(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    Matrix c = left_[i] - right_[i];
    for (std::size_t r = 0; r < dim(); ++r) sys.add_homogeneous(c.row(r));
  }
  return sys.kernel();
}

bool Algebra::is_central(const Vector& a) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!is_zero(right_[i].apply(a) - left_[i].apply(a))) return false;
  }
  return true;
}

bool Algebra::is_derivation(const Matrix& delta) const {
  if (delta.rows() != dim() || delta.cols() != dim()) throw ContractError("is_derivation: shape");
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      Vector lhs = delta.apply(mul_[i][j]);
      Vector rhs = right_[j].apply(delta.column(i)) + left_[i].apply(delta.column(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace ncg
