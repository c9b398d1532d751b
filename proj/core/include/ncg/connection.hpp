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

#ifndef NCG_CONNECTION_HPP
#define NCG_CONNECTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncg/calculus.hpp"
#include "ncg/error.hpp"
#include "ncg/linalg.hpp"
#include "ncg/metric.hpp"

namespace ncg {

/// A connection, stored by its values on the basis of E: column k is
/// nabla(e_k) in E x_A E.
struct Connection {
  Matrix values;

  Vector apply(const Vector& e) const { return values.apply(e); }
  friend bool operator==(const Connection&, const Connection&) = default;
};

/// nabla(e b) = nabla(e) b + e x db on basis pairs. Failure code:
/// "NotLeibniz".
std::optional<Failure> check_leibniz(const Calculus& c, const TamenessCertificate& cert,
                                     const Connection& nabla);

/// Generators Phi_j of E with a right A-linear splitting s: E -> A^N such
/// that sum_j Phi_j s_j(e) = e.
struct FramePresentation {
  std::vector<Vector> generators;
  /// (N * dim A) x dim E; rows j*dim A .. (j+1)*dim A - 1 hold s_j.
  Matrix splitting;
  /// p_jk = s_j(Phi_k) satisfies p^2 = p.
  bool idempotent_check = false;

  Vector component(std::size_t j, const Vector& e, std::size_t algebra_dim) const;
};

/// Default generators: the central basis. Failure code: "NoSplitting".
Outcome<FramePresentation> frame_presentation(const Calculus& c, const TamenessCertificate& cert,
                                              std::optional<std::vector<Vector>> generators = {});

/// nabla(e) = sum_j Phi_j x d(s_j(e)).
Connection grassmann(const Calculus& c, const TamenessCertificate& cert,
                     const FramePresentation& frame);

/// wedge o nabla + d, as a dim Omega2 x dim E matrix. Failure code:
/// "NotRightLinear".
Outcome<Matrix> torsion(const Calculus& c, const TamenessCertificate& cert, const Connection& nabla);

/// nabla_gr - Q^-1 T(nabla_gr): the torsionless reference connection.
Outcome<Connection> nabla_zero(const Calculus& c, const TamenessCertificate& cert,
                               const FramePresentation& frame);

/// (nabla_Y X)(w) = delta_Y(X(w)) - (X x Y)(nabla w). Y must be central.
Functional covariant_derivative(const Geometry& geo, const Connection& nabla, const Functional& x,
                                const Functional& y);

/// table[p][q] = nabla_{X_p} X_q.
using CovariantTable = std::vector<std::vector<Functional>>;
CovariantTable covariant_table(const Geometry& geo, const Connection& nabla);

/// The field Z with Z(da) = [delta_X, delta_Y](a). Failure codes:
/// "BracketUnsolvable", "BracketNotCentral".
Outcome<Functional> lie_bracket(const Geometry& geo, const Functional& x, const Functional& y);

/// [X, phi] = sum_p [X, X_p] a_p + delta_X(a_p) X_p for phi = sum_p X_p a_p.
Functional bracket_general(const Geometry& geo, const Functional& x, const Functional& phi);

/// A verdict reached two ways.
struct DualVerdict {
  bool covariant = false;
  bool form = false;
  std::string witness;

  bool agree() const { return covariant == form; }
};

/// nabla_X Y - nabla_Y X - [X, Y] = 0 on basis pairs, against torsion = 0.
DualVerdict check_torsionless_cov(const Geometry& geo, const Connection& nabla);

/// The form-level compatibility map on central pairs:
/// (g x id)[sigma_23(nabla(w) x h) + w x nabla(h)].
Vector pi_zero(const Geometry& geo, const Connection& nabla, const Vector& w, const Vector& h);

/// delta_Y(g~(Z x X)) = g~(nabla_Y Z x X) + g~(nabla_Y X x Z) on basis
/// triples, against Pi_g(nabla) = dg on {z_p x z_q b_r}.
DualVerdict check_compat_cov(const Geometry& geo, const Connection& nabla);

/// The right-hand side of the Koszul formula for 2 g~(nabla_X Y x Z).
Vector koszul_rhs(const Geometry& geo, const Functional& x, const Functional& y, const Functional& z);

struct KoszulResult {
  CovariantTable table;
  /// in_fields[p][q]: whether table[p][q] lies in X(A).
  std::vector<std::vector<bool>> in_fields;
  Connection nabla;
};

/// Recovers the covariant table from the Koszul formula and reconstructs
/// the connection. Failure code: "SystemSingular".
Outcome<KoszulResult> levi_civita_koszul(const Geometry& geo);

/// The unique connection whose covariant table is the given one. Failure
/// code: "SystemSingular".
Outcome<Connection> reconstruct(const Geometry& geo, const CovariantTable& table);

struct DirectResult {
  Connection nabla;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t kernel_dim = 0;
};

/// Solves nabla = nabla_0 + alpha with alpha right A-linear, wedge o alpha
/// = 0 and Pi_g(nabla) = dg. Failure codes: "NoSolution",
/// "NonUniqueSolution".
Outcome<DirectResult> levi_civita_direct(const Geometry& geo, const Connection& nabla0);

/// [X,Y](w) = X(d(Y(w))) - Y(d(X(w))) + (X x Y - Y x X) nabla0(w) on all
/// basis pairs and basis forms, and (X x Y - Y x X) nabla0(da) = 0.
CheckList classical_bracket_check(const Geometry& geo, const Connection& nabla0);

/// Right A-linear maps E -> E x_A E.
HomModule connection_differences(const Calculus& c, const TamenessCertificate& cert);

/// nabla + alpha with alpha a seeded integer combination of the basis of
/// Hom_A(E, E x_A E).
Connection perturb(const HomModule& differences, const Connection& nabla, std::uint64_t seed);

}  // namespace ncg

#endif  // NCG_CONNECTION_HPP
