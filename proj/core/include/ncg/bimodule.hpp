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

#ifndef NCG_BIMODULE_HPP
#define NCG_BIMODULE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/error.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

/// A finite-dimensional A-A-bimodule. left(i) is the matrix of e -> b_i e,
/// right(i) the matrix of e -> e b_i.
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right);

  /// A acting on itself by multiplication.
  static Bimodule regular(const Algebra& a);
  static Bimodule zero(const Algebra& a);

  std::size_t dim() const { return dim_; }
  std::size_t algebra_dim() const { return left_.size(); }
  const Matrix& left(std::size_t i) const { return left_[i]; }
  const Matrix& right(std::size_t i) const { return right_[i]; }
  const std::vector<Matrix>& left_actions() const { return left_; }
  const std::vector<Matrix>& right_actions() const { return right_; }

  Matrix left_action(const Vector& a) const;
  Matrix right_action(const Vector& a) const;
  Vector act_left(const Vector& a, const Vector& e) const;
  Vector act_right(const Vector& e, const Vector& a) const;

  /// Checks the module and bimodule laws on basis elements. Failure code:
  /// "NotBimodule".
  std::optional<Failure> validate(const Algebra& a) const;

  friend bool operator==(const Bimodule&, const Bimodule&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

/// {e : a e = e a for every a}.
Subspace module_center(const Bimodule& e);

struct CenteredCheck {
  bool centered = false;
  Subspace center;
  /// A basis vector of E outside the right A-span of the center, when not
  /// centered.
  std::optional<Vector> witness;
};

CenteredCheck is_centered(const Bimodule& e);

/// E tensored with F over A, realized as the plain tensor space modulo the
/// balancing relations (e a) x f - e x (a f). Plain index of e_p x f_q is
/// p * dim(F) + q.
class QuotientTensor {
 public:
  QuotientTensor() = default;
  QuotientTensor(const Bimodule& e, const Bimodule& f);

  std::size_t left_dim() const { return left_dim_; }
  std::size_t right_dim() const { return right_dim_; }
  std::size_t plain_dim() const { return left_dim_ * right_dim_; }
  std::size_t dim() const { return basis_columns_.size(); }

  std::size_t plain_index(std::size_t p, std::size_t q) const { return p * right_dim_ + q; }
  const Subspace& relations() const { return relations_; }
  /// Plain columns chosen as the quotient basis, increasing.
  const std::vector<std::size_t>& basis_columns() const { return basis_columns_; }
  /// dim x plain_dim; kernel is exactly the relation subspace.
  Matrix project() const;
  /// plain_dim x dim; project * section = identity.
  Matrix section() const;

  /// The class of the plain vector v.
  Vector project(std::span<const Scalar> plain) const;
  /// The class of e x f.
  Vector tensor(std::span<const Scalar> e, std::span<const Scalar> f) const;
  /// The canonical plain representative of a class.
  Vector lift(std::span<const Scalar> t) const;
  /// The class of the plain basis vector at index c.
  const Vector& project_column(std::size_t c) const { return columns_[c]; }

  /// Induced bimodule structure on the quotient.
  const Bimodule& module() const { return module_; }

 private:
  std::size_t left_dim_ = 0;
  std::size_t right_dim_ = 0;
  Subspace relations_;
  std::vector<std::size_t> basis_columns_;
  std::vector<Vector> columns_;
  Bimodule module_;
};

/// Right A-linear maps E -> F, each stored as a dim(F) x dim(E) matrix. The
/// basis is the reduced echelon basis of the solution space, so the
/// coordinates of a map are its entries at the pivot positions.
class HomModule {
 public:
  HomModule() = default;
  HomModule(const Bimodule& e, const Bimodule& f);

  std::size_t dim() const { return basis_.size(); }
  std::size_t source_dim() const { return source_dim_; }
  std::size_t target_dim() const { return target_dim_; }
  const std::vector<Matrix>& basis() const { return basis_; }

  bool contains(const Matrix& t) const;
  /// Coordinates of t in the basis; t must be right A-linear.
  Vector coordinates(const Matrix& t) const;
  Matrix element(std::span<const Scalar> coords) const;

  /// (a T)(f) = a T(f).
  Matrix left_act(const Vector& a, const Matrix& t) const;
  /// (T a)(f) = T(a f).
  Matrix right_act(const Matrix& t, const Vector& a) const;
  /// The bimodule structure above, in coordinates.
  const Bimodule& module() const { return module_; }

 private:
  std::size_t source_dim_ = 0;
  std::size_t target_dim_ = 0;
  Bimodule source_;
  Bimodule target_;
  Subspace space_;
  std::vector<Matrix> basis_;
  Bimodule module_;
};

}  // namespace ncg

#endif  // NCG_BIMODULE_HPP
