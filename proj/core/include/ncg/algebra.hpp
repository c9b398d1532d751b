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

#ifndef NCG_ALGEBRA_HPP
#define NCG_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ncg/error.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

/// A finite-dimensional associative unital algebra given by structure
/// constants: mul[i][j] holds the coordinates of b_i * b_j.
class Algebra {
 public:
  Algebra() = default;

  /// Validates shapes, associativity on every basis triple and the unit
  /// laws. Failure codes: "NotAssociative", "BadUnit".
  static Outcome<Algebra> create(std::vector<std::string> labels, Vector unit,
                                 std::vector<std::vector<Vector>> mul);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& unit() const { return unit_; }
  const Vector& product(std::size_t i, std::size_t j) const { return mul_[i][j]; }
  const std::vector<std::vector<Vector>>& structure_constants() const { return mul_; }

  Vector basis(std::size_t i) const { return unit_vector(dim(), i); }
  Vector multiply(const Vector& a, const Vector& b) const;

  /// Matrix of x -> b_i x.
  const Matrix& left_basis(std::size_t i) const { return left_[i]; }
  /// Matrix of x -> x b_i.
  const Matrix& right_basis(std::size_t i) const { return right_[i]; }
  Matrix left_mult(const Vector& a) const;
  Matrix right_mult(const Vector& a) const;
  /// Inner derivation x -> a x - x a.
  Matrix ad(const Vector& a) const { return left_mult(a) - right_mult(a); }

  Subspace center() const;
  bool is_central(const Vector& a) const;
  bool is_derivation(const Matrix& delta) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.labels_ == b.labels_ && a.unit_ == b.unit_ && a.mul_ == b.mul_;
  }

 private:
  Algebra(std::vector<std::string> labels, Vector unit, std::vector<std::vector<Vector>> mul);

  std::vector<std::string> labels_;
  Vector unit_;
  std::vector<std::vector<Vector>> mul_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

}  // namespace ncg

#endif  // NCG_ALGEBRA_HPP
