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

#ifndef NCG_BUILDERS_HPP
#define NCG_BUILDERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/calculus.hpp"
#include "ncg/error.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

/// A Lie algebra L acting on A by derivations.
struct ChevalleySpec {
  Algebra algebra;
  /// actions[k] is the derivation X_k, dim A x dim A.
  std::vector<Matrix> actions;
  /// brackets[k][l] holds the coordinates of [X_k, X_l] in L.
  std::vector<std::vector<Vector>> brackets;

  std::size_t lie_dim() const { return actions.size(); }
};

/// The Chevalley-Eilenberg calculus with Omega1 = Hom(L, A) and
/// Omega2 = Hom(Lambda^2 L, A). Coordinates: theta_j b_x sits at j*dim A + x
/// in Omega1; (theta_k ^ theta_l) b_x for k < l sits at
/// pair_index(k, l)*dim A + x in Omega2. Failure code: "InvalidAction".
Outcome<Calculus> build_chevalley(const ChevalleySpec& spec);

/// Position of the pair k < l in the lexicographic list of pairs.
std::size_t pair_index(std::size_t lie_dim, std::size_t k, std::size_t l);

/// Metric theta_i b_x (x) theta_j b_y -> c_ij b_x b_y on the plain tensor
/// basis of the Chevalley Omega1. c must be lie_dim x lie_dim with entries
/// in the center of A given as algebra coordinates.
Matrix constant_metric(const ChevalleySpec& spec, const std::vector<std::vector<Vector>>& c);
/// c_ij = delta_ij.
Matrix euclidean_metric(const ChevalleySpec& spec);
/// A symmetric invertible constant matrix c_ij = s_ij 1 drawn from
/// mt19937_64(seed), never the identity.
std::vector<std::vector<Vector>> seeded_coefficients(const ChevalleySpec& spec, std::uint64_t seed);

struct Preset {
  std::string name;
  ChevalleySpec chevalley;
  Calculus calculus;
  Matrix metric;  // plain tensor basis
};

/// Names accepted by make_preset.
std::vector<std::string> preset_names();
/// Throws std::invalid_argument for unknown names or sizes.
Preset make_preset(const std::string& name, int n);

/// M_2 over Q(i) with basis {1, U, V, W}, L = span{ad U, ad V, ad W}.
Preset preset_matrix_derivations(int n = 2);
/// The clock-and-shift algebra U^n = V^n = 1, VU = qUV (q = -1 for n = 2,
/// q = i for n = 4) with L = span{ad U}.
Preset preset_abelian_torus(int n = 2);
/// M_2 tensor the group algebra of Z_2, with L = span{ad U}. Its center is
/// two-dimensional.
Preset preset_matrix_times_group();

}  // namespace ncg

#endif  // NCG_BUILDERS_HPP
