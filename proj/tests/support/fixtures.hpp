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

#ifndef NCGEOM_TESTS_FIXTURES_HPP
#define NCGEOM_TESTS_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ncg/builders.hpp"
#include "ncg/connection.hpp"

namespace ncg::testing {

/// A preset with its geometry, frame and nabla0, built once per process.
struct Setup {
  Preset preset;
  Geometry geo;
  FramePresentation frame;
  Connection grassmann;
  Connection nabla0;
};

Setup build_setup(Preset preset, const Matrix& metric);
Setup build_setup(Preset preset);

const Setup& matrix_derivations();
const Setup& abelian_torus();
const Setup& matrix_times_group();

/// The two shipped presets, by name.
const Setup& shipped(const std::string& name);
std::vector<std::string> shipped_names();

/// The Levi-Civita connection through the direct route.
const Connection& levi_civita(const Setup& s);

Vector algebra_element(const Algebra& a, const std::string& label);

/// K[Z_2] = span{1, t}, t^2 = 1.
Algebra group_algebra_z2();
/// E = K[Z_2] with a e b = a e alpha(b), alpha(t) = -t. Its center is zero.
Bimodule twisted_bimodule();
/// The calculus d t = 1 into the twisted bimodule, Omega2 = 0. It satisfies
/// every calculus axiom but is not centered.
Calculus twisted_calculus();

/// Deterministic small integer vector.
Vector sample_vector(std::size_t n, std::uint64_t seed);

}  // namespace ncg::testing

#endif  // NCGEOM_TESTS_FIXTURES_HPP
