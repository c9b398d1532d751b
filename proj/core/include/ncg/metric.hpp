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

#ifndef NCG_METRIC_HPP
#define NCG_METRIC_HPP

#include <vector>

#include "ncg/bimodule.hpp"
#include "ncg/calculus.hpp"
#include "ncg/error.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

/// An element of E* = Hom_A(E, A): a dim A x dim E matrix.
using Functional = Matrix;

struct Metric {
  Matrix g;        // dim A x dim(E x_A E)
  Matrix v_g;      // dual coordinates x dim E
  Matrix v_g_inv;  // dim E x dual coordinates
};

/// Validates a metric given on the plain tensor basis of E x E.
/// Failure codes: "NotBalanced", "NotBilinear", "NotSymmetric",
/// "VgNotInvertible".
Outcome<Metric> validate_metric(const Calculus& c, const TamenessCertificate& cert,
                                const HomModule& dual, const Matrix& g_plain);

struct VectorFieldModule {
  std::vector<Functional> fields;  // X_p = V_g(z_p)
  std::vector<Matrix> deltas;      // delta_{X_p} = X_p d0
  Subspace dual_center;            // Z(E*) in dual coordinates
};

/// A tame calculus with a validated bilinear metric and its vector fields.
class Geometry {
 public:
  /// Runs the calculus checks, the tameness construction, metric
  /// validation and the vector-field construction. The failure code is the
  /// first violated condition; the extra code "CenterMismatch" signals
  /// V_g(Z(E)) != Z(E*).
  static Outcome<Geometry> create(Calculus c, const Matrix& g_plain);
  static Outcome<Geometry> create(Calculus c, TamenessCertificate cert, const Matrix& g_plain);

  const Calculus& calculus() const { return calc_; }
  const TamenessCertificate& cert() const { return cert_; }
  const QuotientTensor& ee() const { return cert_.ee; }
  const HomModule& dual() const { return dual_; }
  const Metric& metric() const { return metric_; }
  const VectorFieldModule& vector_fields() const { return fields_; }
  const std::vector<Functional>& fields() const { return fields_.fields; }

  std::size_t algebra_dim() const { return calc_.algebra.dim(); }
  std::size_t form_dim() const { return calc_.one_forms.dim(); }

  /// g(t) for t in E x_A E.
  Vector g(const Vector& t) const { return metric_.g.apply(t); }
  /// g(eta x xi).
  Vector pair(const Vector& eta, const Vector& xi) const;
  Functional v_g(const Vector& eta) const;
  Vector v_g_inverse(const Functional& phi) const;
  /// g(V_g^-1 phi x V_g^-1 psi).
  Vector g_tilde(const Functional& phi, const Functional& psi) const;
  /// delta_phi(a) = phi(da), as a dim A x dim A matrix.
  Matrix delta(const Functional& phi) const { return phi * calc_.d0; }

  bool is_central(const Functional& phi) const;
  /// (a phi)(e) = a phi(e).
  Functional left_act(const Vector& a, const Functional& phi) const;
  /// (phi a)(e) = phi(a e).
  Functional right_act(const Functional& phi, const Vector& a) const;
  /// (phi x psi)(t) = sum phi(e_p) psi(e_q) over the canonical lift of t.
  /// Throws ContractError("YNotCentral") unless psi is central.
  Vector pairing(const Functional& phi, const Functional& psi, const Vector& t) const;
  /// The functional t -> (phi x psi)(t) on E x_A E, as dim A x dim(E x_A E).
  Matrix pairing_matrix(const Functional& phi, const Functional& psi) const;

  /// Coordinates of phi over {X_p b_i}: result[p] is the algebra element a_p
  /// with phi = sum_p X_p a_p.
  std::vector<Vector> field_decomposition(const Functional& phi) const;

 private:
  Geometry() = default;

  Calculus calc_;
  TamenessCertificate cert_;
  HomModule dual_;
  Metric metric_;
  VectorFieldModule fields_;
  Matrix field_span_inverse_;
};

/// The metric on two-fold tensors, tabulated on pairs of quotient basis
/// vectors of E x_A E.
struct MetricSquare {
  std::vector<std::vector<Vector>> table;
  HomModule dual2;   // Hom_A(E x_A E, A)
  Matrix v_g2;       // dual2 coordinates x dim(E x_A E)
  Matrix v_g2_inv;

  Vector eval(const Vector& x, const Vector& y) const;
  /// V_g2(x) as a dim A x dim(E x_A E) matrix.
  Matrix v(const Vector& x) const;
};

/// Builds g2 and V_g2 and verifies V_g(w) x V_g(h) = V_g2(h x w) on the
/// central basis. Failure code: "InconsistentMetric".
Outcome<MetricSquare> metric_square(const Geometry& geo);

}  // namespace ncg

#endif  // NCG_METRIC_HPP
