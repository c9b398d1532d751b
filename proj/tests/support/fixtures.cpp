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

#include "fixtures.hpp"

#include <map>
#include <memory>
#include <random>
#include <stdexcept>

namespace ncg::testing {

Setup build_setup(Preset preset, const Matrix& metric) {
  Geometry geo = Geometry::create(preset.calculus, metric).value();
  FramePresentation frame = frame_presentation(preset.calculus, geo.cert(), std::nullopt).value();
  Connection gr = grassmann(preset.calculus, geo.cert(), frame);
  Connection n0 = nabla_zero(preset.calculus, geo.cert(), frame).value();
  return Setup{std::move(preset), std::move(geo), std::move(frame), std::move(gr), std::move(n0)};
}

Setup build_setup(Preset preset) {
  Matrix metric = preset.metric;
  return build_setup(std::move(preset), metric);
}

const Setup& matrix_derivations() {
  static const Setup s = build_setup(preset_matrix_derivations(2));
  return s;
}

const Setup& abelian_torus() {
  static const Setup s = build_setup(preset_abelian_torus(2));
  return s;
}

const Setup& matrix_times_group() {
  static const Setup s = build_setup(preset_matrix_times_group());
  return s;
}

const Setup& shipped(const std::string& name) {
  if (name == "matrix-derivations") return matrix_derivations();
  if (name == "abelian-torus") return abelian_torus();
  throw std::invalid_argument(name);
}

std::vector<std::string> shipped_names() { return preset_names(); }

const Connection& levi_civita(const Setup& s) {
  static std::map<const Setup*, std::unique_ptr<Connection>> cache;
  auto& slot = cache[&s];
  if (!slot) slot = std::make_unique<Connection>(levi_civita_direct(s.geo, s.nabla0).value().nabla);
  return *slot;
}

Vector algebra_element(const Algebra& a, const std::string& label) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.labels()[i] == label) return a.basis(i);
  }
  throw std::invalid_argument("no basis element " + label);
}

Algebra group_algebra_z2() {
  std::vector<std::vector<Vector>> mul = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
  return Algebra::create({"1", "t"}, {1, 0}, mul).value();
}

Bimodule twisted_bimodule() {
  Algebra a = group_algebra_z2();
  return Bimodule(2, {a.left_basis(0), a.left_basis(1)}, {a.right_basis(0), Scalar(-1) * a.right_basis(1)});
}

Calculus twisted_calculus() {
  Algebra a = group_algebra_z2();
  Matrix d0(2, 2);
  d0(0, 1) = 1;  // d t = 1
  return Calculus{a, twisted_bimodule(), Bimodule::zero(a), d0, Matrix(0, 2), Matrix(0, 4)};
}

Vector sample_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Vector v(n);
  for (auto& x : v) x = Scalar(static_cast<long>(rng() % 7) - 3);
  return v;
}

}  // namespace ncg::testing
