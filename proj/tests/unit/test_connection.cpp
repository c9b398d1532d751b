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
#include "ncg/connection.hpp"

namespace ncg {
namespace {

using Fixture = testing::Setup;

std::string name_of(const ::testing::TestParamInfo<std::string>& info) {
  std::string s = info.param;
  for (auto& ch : s)
    if (ch == '-') ch = '_';
  return s;
}

Vector flatten(const Matrix& m) {
  Vector out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& x : m.row(r)) out.push_back(x);
  return out;
}

// Coordinates of m in the span of the given matrices, or nullopt.
std::optional<Vector> decompose(const std::vector<Matrix>& basis, const Matrix& m) {
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  auto sol = solve(Matrix::from_columns(cols), flatten(m));
  if (!sol) return std::nullopt;
  return sol->particular;
}

class PresetConnection : public ::testing::TestWithParam<std::string> {
 protected:
  const Fixture& setup() const { return testing::shipped(GetParam()); }
};

TEST_P(PresetConnection, FrameSplittingReassemblesForms) {
  const Fixture& s = setup();
  const Calculus& c = s.geo.calculus();
  EXPECT_TRUE(s.frame.idempotent_check);
  for (std::size_t k = 0; k < c.one_forms.dim(); ++k) {
    Vector e = unit_vector(c.one_forms.dim(), k);
    Vector sum(c.one_forms.dim());
    for (std::size_t j = 0; j < s.frame.generators.size(); ++j)
      sum = sum + c.one_forms.act_right(s.frame.generators[j], s.frame.component(j, e, c.algebra.dim()));
    EXPECT_EQ(sum, e);
  }
}

TEST_P(PresetConnection, ReferenceConnectionsSatisfyLeibniz) {
  const Fixture& s = setup();
  const Calculus& c = s.geo.calculus();
  EXPECT_FALSE(check_leibniz(c, s.geo.cert(), s.grassmann).has_value());
  EXPECT_FALSE(check_leibniz(c, s.geo.cert(), s.nabla0).has_value());
  EXPECT_FALSE(check_leibniz(c, s.geo.cert(), testing::levi_civita(s)).has_value());
}

TEST_P(PresetConnection, ReferenceConnectionIsTorsionless) {
  const Fixture& s = setup();
  EXPECT_TRUE(torsion(s.geo.calculus(), s.geo.cert(), s.nabla0).value().is_zero());
}

TEST_P(PresetConnection, GrassmannKillsTheCentralFrame) {
  // nabla_gr(theta_j) = 0 and nabla_gr(theta_j a) = theta_j x da
  const Fixture& s = setup();
  const Calculus& c = s.geo.calculus();
  const auto& z = s.geo.cert().central_basis;
  for (const auto& theta : z) {
    EXPECT_TRUE(is_zero(s.grassmann.apply(theta)));
    for (std::size_t i = 0; i < c.algebra.dim(); ++i) {
      Vector a = c.algebra.basis(i);
      EXPECT_EQ(s.grassmann.apply(c.one_forms.act_right(theta, a)), s.geo.ee().tensor(theta, c.d0.apply(a)));
    }
  }
}

TEST_P(PresetConnection, GrassmannTorsionOnFrameIsItsDifferential) {
  // T(theta_j) = d theta_j, and nabla_0(theta_j) = -Q^-1(d theta_j)
  const Fixture& s = setup();
  const Calculus& c = s.geo.calculus();
  Matrix t = torsion(c, s.geo.cert(), s.grassmann).value();
  for (const auto& theta : s.geo.cert().central_basis) {
    EXPECT_EQ(t.apply(theta), c.d1.apply(theta));
    EXPECT_EQ(s.nabla0.apply(theta), Scalar(-1) * q_inverse_apply(s.geo.cert(), c.d1.apply(theta)));
  }
}

TEST(GrassmannConnection, ExpandsExactFormsOverTheFrame) {
  // nabla_gr(dU) = sum_k theta_k x d(X_k(U))
  const Fixture& s = testing::matrix_derivations();
  const Calculus& c = s.geo.calculus();
  Vector u = testing::algebra_element(c.algebra, "U");
  Vector expected(s.geo.ee().dim());
  for (std::size_t k = 0; k < 3; ++k) {
    Vector xu = s.preset.chevalley.actions[k].apply(u);
    expected = expected + s.geo.ee().tensor(s.geo.cert().central_basis[k], c.d0.apply(xu));
  }
  EXPECT_EQ(s.grassmann.apply(c.d0.apply(u)), expected);
}

TEST(GrassmannConnection, IsTorsionlessForAbelianBrackets) {
  const Fixture& s = testing::abelian_torus();
  EXPECT_TRUE(torsion(s.geo.calculus(), s.geo.cert(), s.grassmann).value().is_zero());
  EXPECT_EQ(s.nabla0, s.grassmann);
}

TEST(GrassmannConnection, HasTorsionOnMatrixDerivations) {
  const Fixture& s = testing::matrix_derivations();
  EXPECT_FALSE(torsion(s.geo.calculus(), s.geo.cert(), s.grassmann).value().is_zero());
  DualVerdict v = check_torsionless_cov(s.geo, s.grassmann);
  EXPECT_FALSE(v.covariant);
  EXPECT_FALSE(v.form);
}

TEST_P(PresetConnection, ClassicalBracketFormulaHolds) {
  const Fixture& s = setup();
  CheckList list = classical_bracket_check(s.geo, s.nabla0);
  for (const auto& item : list.items) EXPECT_TRUE(item.passed) << item.name << ": " << item.witness;
}

TEST_P(PresetConnection, BracketMatchesCommutatorOfDerivations) {
  const Fixture& s = setup();
  const auto& f = s.geo.fields();
  std::vector<Matrix> deltas;
  for (const auto& x : f) deltas.push_back(s.geo.delta(x));
  for (std::size_t p = 0; p < f.size(); ++p)
    for (std::size_t q = 0; q < f.size(); ++q) {
      Matrix comm = deltas[p] * deltas[q] - deltas[q] * deltas[p];
      auto coords = decompose(deltas, comm);
      ASSERT_TRUE(coords.has_value());
      Functional expected(f[0].rows(), f[0].cols());
      for (std::size_t r = 0; r < f.size(); ++r) expected += (*coords)[r] * f[r];
      EXPECT_EQ(lie_bracket(s.geo, f[p], f[q]).value(), expected) << p << ", " << q;
    }
}

TEST(LieBracket, MatrixDerivationStructureConstants) {
  const Fixture& s = testing::matrix_derivations();
  const auto& f = s.geo.fields();
  EXPECT_EQ(lie_bracket(s.geo, f[0], f[1]).value(), Scalar(2) * f[2]);
  EXPECT_EQ(lie_bracket(s.geo, f[0], f[2]).value(), Scalar(2) * f[1]);
  EXPECT_EQ(lie_bracket(s.geo, f[1], f[2]).value(), Scalar(-2) * f[0]);
}

TEST_P(PresetConnection, BracketSatisfiesJacobi) {
  const Fixture& s = setup();
  const auto& f = s.geo.fields();
  auto br = [&](const Functional& a, const Functional& b) { return lie_bracket(s.geo, a, b).value(); };
  for (std::size_t p = 0; p < f.size(); ++p)
    for (std::size_t q = 0; q < f.size(); ++q)
      for (std::size_t r = 0; r < f.size(); ++r) {
        Matrix sum = br(f[p], br(f[q], f[r])) + br(f[q], br(f[r], f[p])) + br(f[r], br(f[p], f[q]));
        EXPECT_TRUE(sum.is_zero());
      }
}

TEST_P(PresetConnection, GeneralBracketExtendsFieldBracket) {
  const Fixture& s = setup();
  const auto& f = s.geo.fields();
  for (const auto& x : f)
    for (const auto& y : f) EXPECT_EQ(bracket_general(s.geo, x, y), lie_bracket(s.geo, x, y).value());
}

TEST_P(PresetConnection, GeneralBracketIsIndependentOfDecomposition) {
  // Rewrite phi = sum_p X_p a_p over the redundant generators X_p and
  // Y = X_0 + X_last, shifting c from X_0 and X_last onto Y.
  const Fixture& s = setup();
  const auto& f = s.geo.fields();
  const Algebra& a = s.geo.calculus().algebra;
  const Functional& x = f[0];
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    std::vector<Vector> coeff;
    for (std::size_t p = 0; p < f.size(); ++p) coeff.push_back(testing::sample_vector(a.dim(), 7 * seed + p));
    Functional phi(f[0].rows(), f[0].cols());
    for (std::size_t p = 0; p < f.size(); ++p) phi += s.geo.right_act(f[p], coeff[p]);
    Vector shift = testing::sample_vector(a.dim(), 100 + seed);
    std::vector<Functional> gens(f.begin(), f.end());
    gens.push_back(f[0] + f.back());
    std::vector<Vector> alt = coeff;
    alt[0] = alt[0] - shift;
    alt.back() = alt.back() - shift;
    alt.push_back(shift);
    Functional sum(f[0].rows(), f[0].cols());
    for (std::size_t i = 0; i < gens.size(); ++i) sum += s.geo.right_act(gens[i], alt[i]);
    ASSERT_EQ(sum, phi);
    Functional expected(f[0].rows(), f[0].cols());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      expected += s.geo.right_act(lie_bracket(s.geo, x, gens[i]).value(), alt[i]);
      expected += s.geo.right_act(gens[i], s.geo.delta(x).apply(alt[i]));
    }
    EXPECT_EQ(bracket_general(s.geo, x, phi), expected) << "seed " << seed;
  }
}

TEST_P(PresetConnection, GeneralBracketIsRightLeibniz) {
  // [X, Y a] = [X, Y] a + Y delta_X(a)
  const Fixture& s = setup();
  const auto& f = s.geo.fields();
  const Algebra& a = s.geo.calculus().algebra;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vector b = a.basis(i);
    Functional lhs = bracket_general(s.geo, f[0], s.geo.right_act(f.back(), b));
    Functional rhs = s.geo.right_act(lie_bracket(s.geo, f[0], f.back()).value(), b) +
                     s.geo.right_act(f.back(), s.geo.delta(f[0]).apply(b));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(LieBracket, NonCentralArgumentIsRejected) {
  const Fixture& s = testing::matrix_derivations();
  const Algebra& a = s.geo.calculus().algebra;
  Functional xu = s.geo.right_act(s.geo.fields()[0], testing::algebra_element(a, "U"));
  ASSERT_FALSE(s.geo.is_central(xu));
  auto z = lie_bracket(s.geo, xu, s.geo.fields()[1]);
  ASSERT_FALSE(z.ok());
  EXPECT_EQ(z.failure().code, "BracketNotCentral");
}

TEST_P(PresetConnection, KoszulAndDirectRoutesAgree) {
  const Fixture& s = setup();
  auto koszul = levi_civita_koszul(s.geo);
  auto direct = levi_civita_direct(s.geo, s.nabla0);
  ASSERT_TRUE(koszul.ok()) << koszul.failure().message;
  ASSERT_TRUE(direct.ok()) << direct.failure().message;
  EXPECT_EQ(koszul->nabla, direct->nabla);
  EXPECT_EQ(direct->kernel_dim, 0u);
  for (const auto& row : koszul->in_fields)
    for (bool b : row) EXPECT_TRUE(b);
}

TEST_P(PresetConnection, LeviCivitaIsTorsionlessAndCompatible) {
  const Fixture& s = setup();
  const Connection& lc = testing::levi_civita(s);
  DualVerdict t = check_torsionless_cov(s.geo, lc);
  DualVerdict m = check_compat_cov(s.geo, lc);
  EXPECT_TRUE(t.covariant && t.form) << t.witness;
  EXPECT_TRUE(m.covariant && m.form) << m.witness;
}

TEST_P(PresetConnection, EuclideanLeviCivitaMatchesConstantMetricKoszul) {
  // g(nabla_p X_q, X_r) = (C^r_pq - C^p_qr + C^q_rp) / 2 for g = delta, with
  // C the structure constants of the derivation commutators
  const Fixture& s = setup();
  const auto& f = s.geo.fields();
  const std::size_t n = f.size();
  std::vector<Matrix> deltas;
  for (const auto& x : f) deltas.push_back(s.geo.delta(x));
  auto c = [&](std::size_t r, std::size_t p, std::size_t q) {
    return decompose(deltas, deltas[p] * deltas[q] - deltas[q] * deltas[p]).value()[r];
  };
  CovariantTable table = covariant_table(s.geo, testing::levi_civita(s));
  const auto& z = s.geo.cert().central_basis;
  const Algebra& a = s.geo.calculus().algebra;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r) {
        Scalar expected = Scalar::rational(1, 2) * (c(r, p, q) - c(p, q, r) + c(q, r, p));
        EXPECT_EQ(table[p][q].apply(z[r]), expected * a.unit()) << p << q << r;
      }
}

TEST(LeviCivita, MatrixDerivationGoldenValue) {
  const Fixture& s = testing::matrix_derivations();
  CovariantTable table = covariant_table(s.geo, testing::levi_civita(s));
  const auto& z = s.geo.cert().central_basis;
  EXPECT_EQ(table[0][1].apply(z[2]), s.geo.calculus().algebra.unit());
  EXPECT_EQ(table[0][2].apply(z[1]), Scalar(-1) * s.geo.calculus().algebra.unit());
  EXPECT_EQ(table[2][0].apply(z[1]), Scalar(-3) * s.geo.calculus().algebra.unit());
}

TEST(LeviCivita, AbelianTorusIsFlat) {
  const Fixture& s = testing::abelian_torus();
  const Connection& lc = testing::levi_civita(s);
  EXPECT_EQ(lc, s.nabla0);
  for (const auto& theta : s.geo.cert().central_basis) EXPECT_TRUE(is_zero(lc.apply(theta)));
  for (const auto& row : covariant_table(s.geo, lc))
    for (const auto& x : row) EXPECT_TRUE(x.is_zero());
}

TEST_P(PresetConnection, ConnectionIsDeterminedByItsCovariantTable) {
  const Fixture& s = setup();
  for (const Connection* n : {&s.grassmann, &s.nabla0, &testing::levi_civita(s)})
    EXPECT_EQ(reconstruct(s.geo, covariant_table(s.geo, *n)).value(), *n);
}

TEST_P(PresetConnection, PerturbedConnectionsKeepRoutesInAgreement) {
  const Fixture& s = setup();
  const Calculus& c = s.geo.calculus();
  HomModule diffs = connection_differences(c, s.geo.cert());
  ASSERT_GT(diffs.dim(), 0u);
  for (const Connection* base : {&s.grassmann, &s.nabla0, &testing::levi_civita(s)}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      Connection n = perturb(diffs, *base, seed);
      EXPECT_FALSE(check_leibniz(c, s.geo.cert(), n).has_value());
      EXPECT_EQ(reconstruct(s.geo, covariant_table(s.geo, n)).value(), n);
      DualVerdict t = check_torsionless_cov(s.geo, n);
      DualVerdict m = check_compat_cov(s.geo, n);
      EXPECT_TRUE(t.agree()) << "seed " << seed << ": " << t.witness;
      EXPECT_TRUE(m.agree()) << "seed " << seed << ": " << m.witness;
    }
  }
}

TEST_P(PresetConnection, PerturbingLeviCivitaBreaksAProperty) {
  const Fixture& s = setup();
  HomModule diffs = connection_differences(s.geo.calculus(), s.geo.cert());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Connection n = perturb(diffs, testing::levi_civita(s), seed);
    ASSERT_NE(n, testing::levi_civita(s));
    EXPECT_FALSE(check_torsionless_cov(s.geo, n).form && check_compat_cov(s.geo, n).form) << "seed " << seed;
  }
}

TEST_P(PresetConnection, CovariantDerivativeIsRightLeibnizInTheField) {
  // nabla_Y(X a) = (nabla_Y X) a + X delta_Y(a)
  const Fixture& s = setup();
  const Connection& lc = testing::levi_civita(s);
  const auto& f = s.geo.fields();
  const Algebra& a = s.geo.calculus().algebra;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vector b = a.basis(i);
    for (const auto& x : f)
      for (const auto& y : f) {
        Functional lhs = covariant_derivative(s.geo, lc, s.geo.right_act(x, b), y);
        Functional rhs = s.geo.right_act(covariant_derivative(s.geo, lc, x, y), b) +
                         s.geo.right_act(x, s.geo.delta(y).apply(b));
        EXPECT_EQ(lhs, rhs);
      }
  }
}

TEST_P(PresetConnection, CovariantDerivativeIsAdditive) {
  const Fixture& s = setup();
  const auto& f = s.geo.fields();
  const Connection& n = s.grassmann;
  Functional x = f[0] + f.back();
  EXPECT_EQ(covariant_derivative(s.geo, n, x, f[0]),
            covariant_derivative(s.geo, n, f[0], f[0]) + covariant_derivative(s.geo, n, f.back(), f[0]));
  EXPECT_EQ(covariant_derivative(s.geo, n, f[0], x),
            covariant_derivative(s.geo, n, f[0], f[0]) + covariant_derivative(s.geo, n, f[0], f.back()));
}

TEST(CovariantDerivative, DirectionIsLinearOverTheCenter) {
  // nabla_{Y a} X = (nabla_Y X) a for central a
  const Fixture& s = testing::matrix_times_group();
  const Algebra& a = s.geo.calculus().algebra;
  Vector t = testing::algebra_element(a, "t");
  ASSERT_TRUE(a.is_central(t));
  const Functional& x = s.geo.fields()[0];
  Functional yt = s.geo.right_act(x, t);
  ASSERT_TRUE(s.geo.is_central(yt));
  for (const Connection* n : {&s.grassmann, &s.nabla0}) {
    EXPECT_EQ(covariant_derivative(s.geo, *n, x, yt), s.geo.right_act(covariant_derivative(s.geo, *n, x, x), t));
  }
}

TEST(CovariantDerivative, TorsionTensorIsLinearOverTheCenter) {
  // T(X a, Y) = T(X, Y) a for central a
  const Fixture& s = testing::matrix_times_group();
  const Algebra& a = s.geo.calculus().algebra;
  Vector t = testing::algebra_element(a, "t");
  const auto& f = s.geo.fields();
  auto tt = [&](const Functional& x, const Functional& y) {
    return covariant_derivative(s.geo, s.grassmann, y, x) - covariant_derivative(s.geo, s.grassmann, x, y) -
           lie_bracket(s.geo, x, y).value();
  };
  for (const auto& x : f)
    for (const auto& y : f) {
      Functional xt = s.geo.right_act(x, t);
      EXPECT_EQ(tt(xt, y), s.geo.right_act(tt(x, y), t));
      EXPECT_EQ(tt(x, s.geo.right_act(y, t)), s.geo.right_act(tt(x, y), t));
    }
}

TEST_P(PresetConnection, KoszulFormulaHoldsAgainstEveryDualElement) {
  // 2 g~(nabla_X Y x Z) = koszul_rhs(X, Y, Z), Z ranging over a basis of E*
  const Fixture& s = setup();
  CovariantTable table = covariant_table(s.geo, testing::levi_civita(s));
  const auto& f = s.geo.fields();
  for (std::size_t p = 0; p < f.size(); ++p)
    for (std::size_t q = 0; q < f.size(); ++q)
      for (const auto& z : s.geo.dual().basis())
        EXPECT_EQ(Scalar(2) * s.geo.g_tilde(table[p][q], z), koszul_rhs(s.geo, f[p], f[q], z));
}

TEST_P(PresetConnection, SeededMetricsAgreeAcrossRoutes) {
  const Fixture& base = setup();
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const ChevalleySpec& spec = base.preset.chevalley;
    Fixture s = testing::build_setup(base.preset, constant_metric(spec, seeded_coefficients(spec, seed)));
    auto koszul = levi_civita_koszul(s.geo);
    auto direct = levi_civita_direct(s.geo, s.nabla0);
    ASSERT_TRUE(koszul.ok() && direct.ok()) << "seed " << seed;
    EXPECT_EQ(koszul->nabla, direct->nabla) << "seed " << seed;
    EXPECT_TRUE(check_torsionless_cov(s.geo, direct->nabla).form);
    EXPECT_TRUE(check_compat_cov(s.geo, direct->nabla).form);
  }
}

TEST(ConnectionFailures, ZeroMapIsNotAConnection) {
  const Fixture& s = testing::matrix_derivations();
  const Calculus& c = s.geo.calculus();
  Connection zero{Matrix(s.geo.ee().dim(), c.one_forms.dim())};
  auto leibniz = check_leibniz(c, s.geo.cert(), zero);
  ASSERT_TRUE(leibniz.has_value());
  EXPECT_EQ(leibniz->code, "NotLeibniz");
  auto t = torsion(c, s.geo.cert(), zero);
  ASSERT_FALSE(t.ok());
  EXPECT_EQ(t.failure().code, "NotRightLinear");
}

TEST(ConnectionFailures, WrongShapeIsAContractViolation) {
  const Fixture& s = testing::matrix_derivations();
  Connection bad{Matrix(3, 3)};
  EXPECT_THROW((void)check_leibniz(s.geo.calculus(), s.geo.cert(), bad), ContractError);
}

INSTANTIATE_TEST_SUITE_P(Shipped, PresetConnection, ::testing::ValuesIn(testing::shipped_names()), name_of);

}  // namespace
}  // namespace ncg
