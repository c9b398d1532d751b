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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ncg/builders.hpp"
#include "ncg/metric.hpp"

namespace ncg {
namespace {

using Coefficients = std::vector<std::vector<Vector>>;

Coefficients scalar_coefficients(const ChevalleySpec& spec, const std::vector<std::vector<long>>& c) {
  Coefficients out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (long x : c[i]) out[i].push_back(Scalar(x) * spec.algebra.unit());
  return out;
}

std::string metric_failure(const Preset& p, const Matrix& g_plain) {
  auto geo = Geometry::create(p.calculus, g_plain);
  return geo.ok() ? std::string() : geo.failure().code;
}

class PresetMetric : public ::testing::TestWithParam<std::string> {
 protected:
  const testing::Setup& setup() const { return testing::shipped(GetParam()); }
};

TEST(MetricValidation, EuclideanMetricsAreAccepted) {
  EXPECT_EQ(metric_failure(preset_matrix_derivations(2), preset_matrix_derivations(2).metric), "");
  EXPECT_EQ(metric_failure(preset_abelian_torus(2), preset_abelian_torus(2).metric), "");
  EXPECT_EQ(metric_failure(preset_matrix_times_group(), preset_matrix_times_group().metric), "");
}

TEST(MetricValidation, SeededMetricsAreAccepted) {
  Preset p = preset_matrix_derivations(2);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    EXPECT_EQ(metric_failure(p, constant_metric(p.chevalley, seeded_coefficients(p.chevalley, seed))), "");
  }
}

TEST(MetricValidation, AsymmetricMetricIsRejected) {
  Preset p = preset_matrix_derivations(2);
  Matrix g = constant_metric(p.chevalley, scalar_coefficients(p.chevalley, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(metric_failure(p, g), "NotSymmetric");
}

TEST(MetricValidation, DegenerateMetricIsRejected) {
  Preset p = preset_matrix_derivations(2);
  Matrix g = constant_metric(p.chevalley, scalar_coefficients(p.chevalley, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(metric_failure(p, g), "VgNotInvertible");
}

TEST(MetricValidation, NonCentralCoefficientsAreNotBilinear) {
  Preset p = preset_matrix_derivations(2);
  Vector u = testing::algebra_element(p.chevalley.algebra, "U");
  Coefficients c(3, std::vector<Vector>(3, Vector(4)));
  for (std::size_t i = 0; i < 3; ++i) c[i][i] = u;
  EXPECT_EQ(metric_failure(p, constant_metric(p.chevalley, c)), "NotBilinear");
}

TEST(MetricValidation, UnbalancedValuesAreRejected) {
  Preset p = preset_matrix_derivations(2);
  Matrix g(4, 144);
  g(0, 1) = 1;  // g(e0 x e1) = 1, everything else 0
  EXPECT_EQ(metric_failure(p, g), "NotBalanced");
}

TEST(MetricValidation, WrongShapeIsAContractViolation) {
  Preset p = preset_matrix_derivations(2);
  EXPECT_THROW((void)Geometry::create(p.calculus, Matrix(4, 12)), ContractError);
}

TEST(VectorFields, EuclideanFieldsActAsTheLieGenerators) {
  // delta_X(a) = X(da) = g(theta_k x da) = da(X_k) = X_k(a)
  const auto& s = testing::matrix_derivations();
  ASSERT_EQ(s.geo.fields().size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(s.geo.cert().central_basis[k], unit_vector(12, k * 4));
    EXPECT_EQ(s.geo.delta(s.geo.fields()[k]), s.preset.chevalley.actions[k]);
  }
}

TEST(MetricSquareTable, EuclideanValuesAreCrossedDeltas) {
  // g2((theta_i x theta_j) x (theta_k x theta_l)) = delta_jk delta_il
  const auto& s = testing::matrix_derivations();
  auto sq = metric_square(s.geo).value();
  const auto& z = s.geo.cert().central_basis;
  const auto& ee = s.geo.ee();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          Vector expected = (j == k && i == l) ? s.preset.calculus.algebra.unit() : Vector(4);
          EXPECT_EQ(sq.eval(ee.tensor(z[i], z[j]), ee.tensor(z[k], z[l])), expected);
        }
}

TEST_P(PresetMetric, MetricSquareDefiningFormula) {
  // g2((eta x xi) x (eta' x xi')) = g(eta x g(xi x eta') xi')
  const auto& geo = setup().geo;
  auto sq = metric_square(geo).value();
  const Bimodule& e = geo.calculus().one_forms;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Vector a = testing::sample_vector(e.dim(), 10 * seed + 1);
    Vector b = testing::sample_vector(e.dim(), 10 * seed + 2);
    Vector c = testing::sample_vector(e.dim(), 10 * seed + 3);
    Vector d = testing::sample_vector(e.dim(), 10 * seed + 4);
    Vector inner = e.act_left(geo.pair(b, c), d);
    EXPECT_EQ(sq.eval(geo.ee().tensor(a, b), geo.ee().tensor(c, d)), geo.pair(a, inner));
  }
}

TEST_P(PresetMetric, MetricSquareIsABilinearIsomorphism) {
  const auto& geo = setup().geo;
  auto sq = metric_square(geo).value();
  const std::size_t d = geo.ee().dim();
  EXPECT_EQ(sq.v_g2_inv * sq.v_g2, Matrix::identity(d));
  const Bimodule& eem = geo.ee().module();
  const Algebra& a = geo.calculus().algebra;
  Vector x = testing::sample_vector(d, 41);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    // V(x a)(y) = V(x)(a y), V(a x)(y) = a V(x)(y)
    EXPECT_EQ(sq.v(eem.right(i).apply(x)), sq.v(x) * eem.left(i));
    EXPECT_EQ(sq.v(eem.left(i).apply(x)), a.left_basis(i) * sq.v(x));
  }
}

TEST_P(PresetMetric, TensorOfFieldsIsMetricSquareOfFlippedTensor) {
  // V_g(w) x V_g(h) = V_g2(h x w) for central w, h
  const auto& geo = setup().geo;
  auto sq = metric_square(geo).value();
  const auto& z = geo.cert().central_basis;
  for (const auto& w : z)
    for (const auto& h : z) EXPECT_EQ(geo.pairing_matrix(geo.v_g(w), geo.v_g(h)), sq.v(geo.ee().tensor(h, w)));
}

TEST_P(PresetMetric, SymmetrizerIsSelfAdjointForMetricSquare) {
  // g2(P_sym(x) x y) = g2(x x P_sym(y))
  const auto& geo = setup().geo;
  auto sq = metric_square(geo).value();
  const Matrix& p = geo.cert().p_sym;
  const std::size_t d = geo.ee().dim();
  for (std::size_t i = 0; i < d; ++i) {
    Vector x = unit_vector(d, i);
    Vector px = p.apply(x);
    for (std::size_t j = 0; j < d; ++j) {
      Vector y = unit_vector(d, j);
      ASSERT_EQ(sq.eval(px, y), sq.eval(x, p.apply(y))) << i << ", " << j;
    }
  }
}

TEST_P(PresetMetric, FieldPairingIsSymmetricOnFlipInvariantTensors) {
  // (V_g(w) x V_g(t))(xi) = (V_g(t) x V_g(w))(xi) whenever sigma(xi) = xi
  const auto& geo = setup().geo;
  const auto& cert = geo.cert();
  const Subspace fixed = kernel(cert.sigma - Matrix::identity(geo.ee().dim()));
  ASSERT_GT(fixed.dim(), 0u);
  const auto& f = geo.fields();
  for (std::size_t p = 0; p < f.size(); ++p)
    for (std::size_t q = 0; q < f.size(); ++q)
      for (const auto& xi : fixed.basis()) EXPECT_EQ(geo.pairing(f[p], f[q], xi), geo.pairing(f[q], f[p], xi));
}

TEST_P(PresetMetric, MetricIsSymmetricWithOneCentralFactor) {
  const auto& geo = setup().geo;
  const std::size_t m = geo.form_dim();
  for (const auto& z : geo.cert().central_basis)
    for (std::size_t k = 0; k < m; ++k) EXPECT_EQ(geo.pair(z, unit_vector(m, k)), geo.pair(unit_vector(m, k), z));
}

TEST_P(PresetMetric, MetricOfCentralFormsIsCentral) {
  const auto& geo = setup().geo;
  const auto& z = geo.cert().central_basis;
  for (const auto& w : z)
    for (const auto& h : z) EXPECT_TRUE(geo.calculus().algebra.is_central(geo.pair(w, h)));
}

TEST_P(PresetMetric, MetricOfCentralFormsHasCentralDifferential) {
  const auto& geo = setup().geo;
  const auto& z = geo.cert().central_basis;
  for (const auto& w : z)
    for (const auto& h : z) EXPECT_TRUE(geo.cert().center.contains(geo.calculus().d0.apply(geo.pair(w, h))));
}

TEST_P(PresetMetric, FieldsTakeCentralValuesOnCentralForms) {
  const auto& geo = setup().geo;
  for (const auto& x : geo.fields())
    for (const auto& z : geo.cert().central_basis) EXPECT_TRUE(geo.calculus().algebra.is_central(x.apply(z)));
}

TEST_P(PresetMetric, VectorFieldsAreTheCenterOfTheDual) {
  const auto& geo = setup().geo;
  const auto& dual = geo.dual();
  std::vector<Vector> coords;
  for (const auto& x : geo.fields()) coords.push_back(dual.coordinates(x));
  EXPECT_EQ(Subspace::span(dual.dim(), coords), geo.vector_fields().dual_center);
  for (const auto& x : geo.fields()) EXPECT_TRUE(geo.is_central(x));
}

TEST_P(PresetMetric, VectorFieldsAreRightTotalInTheDual) {
  const auto& geo = setup().geo;
  const auto& dual = geo.dual();
  Subspace span(dual.dim());
  for (const auto& x : geo.fields())
    for (std::size_t i = 0; i < geo.algebra_dim(); ++i)
      span.insert(dual.coordinates(geo.right_act(x, geo.calculus().algebra.basis(i))));
  EXPECT_EQ(span.dim(), dual.dim());
}

TEST_P(PresetMetric, DeltaIsADerivationExactlyOnVectorFields) {
  const auto& geo = setup().geo;
  const auto& dual = geo.dual();
  const Algebra& a = geo.calculus().algebra;
  for (const auto& x : geo.fields()) EXPECT_TRUE(a.is_derivation(geo.delta(x)));
  for (std::size_t t = 0; t < dual.dim(); ++t) {
    const Matrix& phi = dual.basis()[t];
    EXPECT_EQ(a.is_derivation(geo.delta(phi)), geo.vector_fields().dual_center.contains(dual.coordinates(phi)))
        << "dual basis element " << t;
  }
}

TEST_P(PresetMetric, InducedPairingEvaluatesAgainstInverse) {
  // phi(V_g^-1(psi)) = g~(phi x psi)
  const auto& geo = setup().geo;
  const auto& dual = geo.dual();
  for (std::size_t s = 0; s < dual.dim(); ++s)
    for (std::size_t t = 0; t < dual.dim(); ++t) {
      const Matrix& phi = dual.basis()[s];
      const Matrix& psi = dual.basis()[t];
      EXPECT_EQ(phi.apply(geo.v_g_inverse(psi)), geo.g_tilde(phi, psi));
    }
}

TEST_P(PresetMetric, InducedPairingIsSymmetricAgainstVectorFields) {
  const auto& geo = setup().geo;
  const auto& dual = geo.dual();
  for (const auto& x : geo.fields())
    for (const auto& phi : dual.basis()) EXPECT_EQ(geo.g_tilde(x, phi), geo.g_tilde(phi, x));
}

TEST_P(PresetMetric, InducedPairingOfVectorFieldsIsCentral) {
  const auto& geo = setup().geo;
  for (const auto& x : geo.fields())
    for (const auto& y : geo.fields()) EXPECT_TRUE(geo.calculus().algebra.is_central(geo.g_tilde(x, y)));
}

TEST(InducedPairing, EuclideanFieldsAreOrthonormal) {
  const auto& s = testing::matrix_derivations();
  const auto& f = s.geo.fields();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      EXPECT_EQ(s.geo.g_tilde(f[i], f[j]), i == j ? s.geo.calculus().algebra.unit() : Vector(4));
}

TEST_P(PresetMetric, DerivationOfRightScaledFieldIsRightScaled) {
  // delta_Z(g~(X x Y)) a = delta_{Z a}(g~(X x Y))
  const auto& geo = setup().geo;
  const Algebra& a = geo.calculus().algebra;
  const auto& f = geo.fields();
  for (const auto& x : f)
    for (const auto& y : f) {
      Vector b = geo.g_tilde(x, y);
      for (std::size_t i = 0; i < a.dim(); ++i)
        EXPECT_EQ(a.multiply(geo.delta(f.back()).apply(b), a.basis(i)),
                  geo.delta(geo.right_act(f.back(), a.basis(i))).apply(b));
    }
}

TEST_P(PresetMetric, InducedPairingIsBilinear) {
  const auto& geo = setup().geo;
  const auto& dual = geo.dual();
  const Algebra& a = geo.calculus().algebra;
  const Matrix& phi = dual.basis().front();
  const Matrix& psi = dual.basis().back();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vector b = a.basis(i);
    EXPECT_EQ(geo.g_tilde(geo.left_act(b, phi), psi), a.multiply(b, geo.g_tilde(phi, psi)));
    EXPECT_EQ(geo.g_tilde(phi, geo.right_act(psi, b)), a.multiply(geo.g_tilde(phi, psi), b));
    EXPECT_EQ(geo.g_tilde(geo.right_act(phi, b), psi), geo.g_tilde(phi, geo.left_act(b, psi)));
  }
}

TEST_P(PresetMetric, FieldDecompositionReassembles) {
  const auto& geo = setup().geo;
  const auto& dual = geo.dual();
  for (const auto& phi : dual.basis()) {
    std::vector<Vector> a = geo.field_decomposition(phi);
    Matrix sum(phi.rows(), phi.cols());
    for (std::size_t p = 0; p < a.size(); ++p) sum += geo.right_act(geo.fields()[p], a[p]);
    EXPECT_EQ(sum, phi);
  }
}

TEST_P(PresetMetric, PairingRequiresCentralSecondFactor) {
  const auto& geo = setup().geo;
  const auto& dual = geo.dual();
  for (const auto& phi : dual.basis()) {
    if (geo.is_central(phi)) continue;
    EXPECT_THROW((void)geo.pairing_matrix(geo.fields()[0], phi), ContractError);
    return;
  }
  GTEST_SKIP() << "every dual basis element is central";
}

INSTANTIATE_TEST_SUITE_P(Shipped, PresetMetric, ::testing::ValuesIn(testing::shipped_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });

}  // namespace
}  // namespace ncg
