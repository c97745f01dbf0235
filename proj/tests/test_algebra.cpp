// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "holoconf/algebra.hpp"
#include "holoconf/error.hpp"
#include "holoconf/sampling.hpp"

using namespace holoconf;
using G = GeneratorId;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

void expect_c(cplx got, cplx want, double tol) {
  EXPECT_LE(std::abs(got - want), tol) << "got " << got << " want " << want;
}

// [X, Y]_j = X^i d_i Y_j - Y^i d_i X_j with central differences of the
// coefficient values.
std::array<cplx, 2> bracket_fd(const VectorField& x, const VectorField& y, double p0, double p1) {
  const double h = 1e-5;
  auto d = [&](const VectorField& f, int i) {
    const Point2 a = i == 0 ? Point2{p0 + h, p1} : Point2{p0, p1 + h};
    const Point2 b = i == 0 ? Point2{p0 - h, p1} : Point2{p0, p1 - h};
    const auto fa = f.at(a), fb = f.at(b);
    return std::array<cplx, 2>{(fa[0] - fb[0]) / (2 * h), (fa[1] - fb[1]) / (2 * h)};
  };
  const auto xv = x.at({p0, p1}), yv = y.at({p0, p1});
  const auto dx0 = d(x, 0), dx1 = d(x, 1), dy0 = d(y, 0), dy1 = d(y, 1);
  std::array<cplx, 2> out{};
  for (int j = 0; j < 2; ++j)
    out[j] = xv[0] * dy0[j] + xv[1] * dy1[j] - yv[0] * dx0[j] - yv[1] * dx1[j];
  return out;
}

}  // namespace

TEST(Generator, Examples) {
  const auto b = generator(G::b, Realization::holographic).at({0.6, 1.0});
  expect_c(b[0], std::tan(0.6), 1e-15);
  expect_c(b[1], 0.0, 1e-15);

  const cplx v(0.3, -0.8);
  expect_c(generator(G::q0, Realization::upsilon_line).at({v, 0.0})[0], v * v, 1e-15);

  const auto p1 = generator(G::p1, Realization::cartesian).at({0.4, 0.9});
  expect_c(p1[0], 0.0, 0.0);
  expect_c(p1[1], 1.0, 0.0);
}

TEST(Generator, ParseNames) {
  EXPECT_EQ(parse_generator("q1"), G::q1);
  EXPECT_FALSE(parse_generator("q2").has_value());
  EXPECT_EQ(parse_realization("flat"), Realization::cartesian);
  EXPECT_EQ(parse_realization("upsilon"), Realization::upsilon_line);
  EXPECT_FALSE(parse_realization("sphere").has_value());
}

TEST(Bracket, HandComputedFlatExamples) {
  const auto pts = sample_points(Realization::cartesian, 50, 1);
  const VectorField bp = bracket(generator(G::b, Realization::cartesian), generator(G::p0, Realization::cartesian));
  EXPECT_LE(field_defect(bp, cplx(-1.0) * generator(G::p0, Realization::cartesian), pts), 1e-12);

  const VectorField sq = bracket(generator(G::s01, Realization::cartesian), generator(G::q0, Realization::cartesian));
  for (const auto& p : pts) {
    const double x0 = p[0].real(), x1 = p[1].real();
    const auto c = sq.at(p);
    expect_c(c[0], -2 * x0 * x1, 1e-12);
    expect_c(c[1], x0 * x0 - x1 * x1, 1e-12);
  }
}

TEST(Bracket, UpsilonLineTranslationPairIsNegated) {
  const auto pts = sample_points(Realization::upsilon_line, 50, 2);
  const Realization u = Realization::upsilon_line;
  const VectorField qp = bracket(generator(G::q0, u), generator(G::p0, u));
  EXPECT_LE(field_defect(qp, cplx(-2.0) * generator(G::b, u), pts), 1e-12);
}

TEST(Bracket, AgreesWithFiniteDifferenceOracle) {
  for (Realization r : {Realization::cartesian, Realization::polar, Realization::conformal}) {
    const auto pts = sample_points(r, 10, 5);
    for (G a : kAllGenerators)
      for (G b : kAllGenerators) {
        const VectorField x = generator(a, r), y = generator(b, r);
        const VectorField xy = bracket(x, y);
        for (const auto& p : pts) {
          const auto want = bracket_fd(x, y, p[0].real(), p[1].real());
          const auto got = xy.at(p);
          for (int j = 0; j < 2; ++j) expect_c(got[j], want[j], 1e-6 * (1 + std::abs(want[j])));
        }
      }
  }
}

TEST(Bracket, MismatchedRealizationsAreRejected) {
  try {
    (void)bracket(generator(G::b, Realization::polar), generator(G::b, Realization::conformal));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::realization_mismatch);
  }
}

TEST(StructureTable, EveryRealizationFollowsTheDocumentedLedger) {
  const SignLedger doc = documented_field_ledger();
  for (Realization r : kAllRealizations) {
    const SignLedger t = structure_table(r);
    EXPECT_EQ(t.entries.size(), 15u);
    EXPECT_TRUE(t.complete());
    EXPECT_TRUE(t.same_signs(doc)) << to_string(r);
    EXPECT_EQ(t.sign("[p0,q0]"), -1);
    EXPECT_EQ(t.sign("[p1,q0]"), -1);
    EXPECT_EQ(t.sign("[b,p0]"), 1);
    EXPECT_EQ(t.sign("[s01,q1]"), 1);
  }
}

TEST(StructureTable, UnmatchedBracketIsAnError) {
  // A model whose brackets never vanish cannot match any relation.
  LieModel broken;
  broken.name = "broken";
  broken.generators.assign(kAllGenerators.begin(), kAllGenerators.end());
  broken.bracket_defect = [](const Coeffs6&, const Coeffs6&, const Coeffs6&) { return 1.0; };
  const SignLedger l = commutator_ledger(broken, 1e-10);
  EXPECT_FALSE(l.complete());
  EXPECT_EQ(l.sign("[b,p0]"), 0);
}

TEST(Act, Examples) {
  const ChartPoint h{ChartId::holographic, 0.7, 2.1};
  expect_c(act(G::b, 3.0, h), 3.0 * solve(3.0, h), 1e-13);

  const ChartPoint q{ChartId::holographic, kPi / 4, 0.2};
  expect_c(act(G::q1, 1.0, q), -kI * solve(2.0, q), 1e-13);

  SampleStream s(4);
  for (ChartId c : kAllCharts) expect_c(act(G::p0, 0.0, sample_chart_point(s, c)), 0.0, 1e-15);
}

TEST(Act, EigenactionOnRandomPairs) {
  SampleStream s(8);
  for (ChartId c : kAllCharts)
    for (G g : kAllGenerators)
      for (int k = 0; k < 50; ++k) {
        const cplx a = sample_alpha(s);
        const ChartPoint p = sample_chart_point(s, c);
        const cplx want = eigen_rhs(g, a, p);
        expect_c(act(g, a, p), want, 1e-10 * (1 + std::abs(want)));
      }
}

TEST(Pack, Examples) {
  const auto pack = so31_pack(Realization::upsilon_line);
  const cplx v(0.5, 0.9);
  expect_c(pack[1].at({v, 0.0})[0], (v * v - 1.0) / 2.0, 1e-15);      // s02
  expect_c(pack[4].at({v, 0.0})[0], -(kI - kI * v * v) / 2.0, 1e-15);  // s13
  const auto pts = sample_points(Realization::holographic, 20, 9);
  EXPECT_EQ(field_defect(so31_pack(Realization::holographic)[5], generator(G::b, Realization::holographic), pts), 0.0);
}

TEST(Minkowski, Examples) {
  const MinkowskiResult r = minkowski_check(Realization::cartesian);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.ledger.sign("[s01,s02]"), 1);
  EXPECT_EQ(r.ledger.sign("[s02,s03]"), -1);

  MetricSigns flipped = kMinkowskiMetric;
  flipped[3] = 1.0;
  EXPECT_FALSE(minkowski_check(Realization::cartesian, flipped).passed);
}

TEST(Minkowski, OnlyTheLorentzianPatternPasses) {
  for (Realization r : kAllRealizations) {
    const auto scan = minkowski_metric_scan(vector_field_model(r), 1e-10);
    ASSERT_EQ(scan.size(), 1u) << to_string(r);
    EXPECT_EQ(scan.front(), kMinkowskiMetric);
  }
}

TEST(Minkowski, LorentzCommutatorByHand) {
  // [s02, s03] = -g00 s23 = -b for g = diag(1,1,1,-1).
  const Coeffs6 c = lorentz_commutator(0, 2, 0, 3, kMinkowskiMetric);
  EXPECT_EQ(c[index_of(G::b)], cplx(-1.0));
  // [s03, s13] = -g33 s01 = +s01.
  const Coeffs6 d = lorentz_commutator(0, 3, 1, 3, kMinkowskiMetric);
  EXPECT_EQ(d[index_of(G::s01)], cplx(1.0));
}

TEST(CnSn, Examples) {
  expect_c(cn(1.0), 1.0, 0.0);
  expect_c(sn(1.0), 0.0, 0.0);
  const double phi = 0.7;
  expect_c(cn(std::polar(1.0, phi)), std::cos(phi), 1e-15);
  expect_c(sn(std::polar(1.0, phi)), std::sin(phi), 1e-15);
  expect_c(cn(0.5) * cn(0.5) + sn(0.5) * sn(0.5), 1.0, 1e-15);
  EXPECT_THROW(cn(0.0), Error);
  EXPECT_THROW(sn(0.0), Error);
}

TEST(AngularTensor, Examples) {
  SampleStream s(10);
  for (int k = 0; k < 5; ++k) expect_c(angular_tensor(sample_upsilon(s))[2][3], 1.0, 0.0);
  expect_c(angular_tensor(1.0)[0][3], -1.0, 1e-15);
  const MinkTensor m = angular_tensor({0.3, 0.4});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) expect_c(m[i][j] + m[j][i], 0.0, 0.0);
  EXPECT_THROW(angular_tensor(0.0), Error);
}

TEST(AngularTensor, MatchesPackedMultipliers) {
  SampleStream s(11);
  const auto pack = so31_pack(Realization::upsilon_line);
  for (int k = 0; k < 50; ++k) {
    const cplx v = sample_upsilon(s);
    const MinkTensor m = angular_tensor(v);
    for (std::size_t idx = 0; idx < 6; ++idx) {
      const auto [mu, nu] = kPackedIndices[idx];
      expect_c(m[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)], pack[idx].at({v, 0.0})[0] / v, 1e-12);
    }
  }
}

TEST(Paravector, SubstitutionReproducesGenerators) {
  const auto pts = sample_points(Realization::holographic, 50, 12);
  const Realization h = Realization::holographic;
  const ScalarField one = [](const Jet& t, const Jet&) { return Jet(1.0, t.order()); };
  const ScalarField zero = [](const Jet& t, const Jet&) { return Jet(0.0, t.order()); };
  EXPECT_LE(field_defect(paravector_substitute(one, zero), generator(G::b, h), pts), 1e-12);

  const ScalarField re_v = [](const Jet& t, const Jet& p) { return cos(p) * sin(t); };
  const ScalarField im_v = [](const Jet& t, const Jet& p) { return sin(p) * sin(t); };
  EXPECT_LE(field_defect(paravector_substitute(re_v, im_v), generator(G::q0, h), pts), 1e-12);

  const ScalarField re_inv = [](const Jet& t, const Jet& p) { return cos(p) / sin(t); };
  const ScalarField im_inv = [](const Jet& t, const Jet& p) { return -sin(p) / sin(t); };
  EXPECT_LE(field_defect(paravector_substitute(re_inv, im_inv), generator(G::p0, h), pts), 1e-12);

  // The literal sin(phi) real part does not give q0.
  const ScalarField re_literal = [](const Jet& t, const Jet& p) { return sin(p) * sin(t); };
  EXPECT_GT(field_defect(paravector_substitute(re_literal, im_v), generator(G::q0, h), pts), 1e-3);
}

TEST(TangentCurve, Examples) {
  SampleStream s(13);
  const ChartPoint p = sample_chart_point(s, ChartId::holographic);
  expect_c(tangent_curve(0.0, p), solve(1.0, p), 0.0);

  const ChartPoint q{ChartId::holographic, kPi / 3, 0.0};
  const double h = 1e-6;
  const cplx deriv = (tangent_curve(h, q) - tangent_curve(-h, q)) / (2 * h);
  expect_c(deriv, solve(1.0, q), 1e-9);
  // The same derivative as tan(theta) d_theta applied to v.
  expect_c(generator(G::b, Realization::holographic).apply(solution_field(1.0, ChartId::holographic), to_point(q)),
           solve(1.0, q), 1e-14);

  const ChartPoint r{ChartId::holographic, kPi / 4, 0.9};
  EXPECT_LE(std::abs(tangent_curve(1e-3, r) - tangent_curve_angle_form(1e-3, r)), 1e-5);
  EXPECT_THROW(tangent_curve(0.1, {ChartId::polar, 1.0, 0.0}), Error);
}

TEST(DegreeShift, MonomialDegreesMove) {
  const VectorField p0 = generator(G::p0, Realization::upsilon_line);
  const VectorField q0 = generator(G::q0, Realization::upsilon_line);
  const cplx v(0.7, 0.4);
  for (int n = 0; n <= 8; ++n) {
    const ScalarField f = [n](const Jet& y, const Jet&) { return pow(y, n); };
    expect_c(p0.apply(f, {v, 0.0}), n == 0 ? cplx(0.0) : double(n) * std::pow(v, n - 1), 1e-13);
    expect_c(q0.apply(f, {v, 0.0}), double(n) * std::pow(v, n + 1), 1e-13);
  }
}

TEST(Jacobi, HoldsForCombinations) {
  SampleStream s(14);
  for (Realization r : kAllRealizations) {
    const auto pts = sample_points(r, 20, 15);
    for (int k = 0; k < 3; ++k) {
      Coeffs6 a{}, b{}, c{};
      for (auto* v : {&a, &b, &c})
        for (auto& x : *v) x = {s.uniform(-1, 1), s.uniform(-1, 1)};
      const VectorField x = combination(r, a), y = combination(r, b), z = combination(r, c);
      const VectorField lhs = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x));
      EXPECT_LE(field_defect(lhs, cplx(-1.0) * bracket(z, bracket(x, y)), pts), 1e-10) << to_string(r);
    }
  }
}

TEST(Pushforward, MatchesClosedForms) {
  for (ChartId c : kAllCharts) {
    const auto pts = sample_points(realization_of(c), 30, 16);
    for (G g : kAllGenerators)
      EXPECT_LE(field_defect(generator(g, realization_of(c)), pushforward_generator(g, c), pts), 1e-12)
          << to_string(c) << " " << to_string(g);
  }
}
