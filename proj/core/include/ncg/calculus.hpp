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

#ifndef NCG_CALCULUS_HPP
#define NCG_CALCULUS_HPP

#include <string>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/bimodule.hpp"
#include "ncg/error.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

/// A first-order calculus extended to two-forms.
///   d0:    dim E x dim A
///   d1:    dim Omega2 x dim E
///   wedge: dim Omega2 x (dim E)^2, on the plain tensor basis of E x E
struct Calculus {
  Algebra algebra;
  Bimodule one_forms;
  Bimodule two_forms;
  Matrix d0;
  Matrix d1;
  Matrix wedge;

  /// Throws ContractError unless every matrix has the expected shape.
  void check_shapes() const;
};

/// One verified condition.
struct CheckItem {
  std::string name;
  bool passed = true;
  /// Stable failure code, set only when the check fails.
  std::string code;
  std::string witness;
};

struct CheckList {
  std::vector<CheckItem> items;

  bool ok() const;
  /// The first failed item, or nullptr.
  const CheckItem* first_failure() const;
  void add(std::string name, std::string code, std::string witness = {});
  void pass(std::string name);
};

/// Checks every calculus axiom on basis elements.
CheckList validate_calculus(const Calculus& c);

/// The certificate that a calculus is tame.
struct TamenessCertificate {
  QuotientTensor ee;                 // E tensored with E over A
  Subspace center;                   // Z(E)
  std::vector<Vector> central_basis; // reduced echelon basis of Z(E)
  Matrix wedge_hat;                  // Omega2 x dim ee
  Matrix sigma;                      // dim ee x dim ee
  Matrix p_sym;
  Subspace ker_wedge;
  Subspace complement_f;             // Ker(p_sym)
  Matrix q_inverse;                  // dim ee x Omega2, lands in F
  /// Columns give each basis vector of E as sum_r z_r a_r: column k holds
  /// the coordinates of a_r stacked over r.
  Matrix central_decomposition;
  CheckList conditions;
};

/// Builds sigma from the flip of central tensors and derives P_sym, F and
/// the inverse of wedge on F. Failure codes: "NotCentered",
/// "FlipNotWellDefined", "SigmaNotInvolution", "SigmaNotBilinear",
/// "PsymRangeMismatch", "QNotInvertible".
Outcome<TamenessCertificate> build_symmetry(const Calculus& c);

/// The element of F mapped to w by the wedge.
Vector q_inverse_apply(const TamenessCertificate& cert, const Vector& w);

/// Writes e as sum_r z_r a_r over the central basis; returns the a_r.
std::vector<Vector> central_components(const Calculus& c, const TamenessCertificate& cert,
                                       const Vector& e);

/// The wedge of e x f in Omega2.
Vector wedge_of(const Calculus& c, const Vector& e, const Vector& f);

}  // namespace ncg

#endif  // NCG_CALCULUS_HPP
