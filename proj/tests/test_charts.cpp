// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <functional>
#include <numbers>

#include <gtest/gtest.h>

#include "holoconf/charts.hpp"
#include "holoconf/error.hpp"
#include "holoconf/sampling.hpp"

using namespace holoconf;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_matrix(const Matrix2& got, const Matrix2& want, double tol = 1e-12) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) EXPECT_NEAR(got(r, c), want(r, c), tol) << "entry " << r << c;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::io;
}

// Central-difference oracle for the basis vectors.
std::array<Vec2, 2> basis_fd(const ChartPoint& p) {
  const double h = 1e-6;
  auto at = [&](double d0, double d1) { return embed_as(p.chart, p.y0 + d0, p.y1 + d1); };
  const auto a0 = at(h, 0), b0 = at(-h, 0), a1 = at(0, h), b1 = at(0, -h);
  return {Vec2{(a0[0] - b0[0]) / (2 * h), (a0[1] - b0[1]) / (2 * h)},
          Vec2{(a1[0] - b1[0]) / (2 * h), (a1[1] - b1[1]) / (2 * h)}};
}

}  // namespace

TEST(Embed, Examples) {
  const Vec2 a = embed({ChartId::polar, 1.0, 0.0});
  EXPECT_NEAR(a[0], 1.0, 1e-15);
  EXPECT_NEAR(a[1], 0.0, 1e-15);

  const double phi = 0.8;
  const Vec2 b = embed({ChartId::holographic, 1.5707, phi});
  EXPECT_NEAR(std::hypot(b[0], b[1]), 1.0, 1e-8);
  EXPECT_NEAR(b[0], std::cos(phi), 1e-8);

  const Vec2 c = embed({ChartId::conformal, 0.0, kPi / 2});
  EXPECT_NEAR(c[0], 0.0, 1e-15);
  EXPECT_NEAR(c[1], 1.0, 1e-15);
}

TEST(Embed, RejectsPointsOutsideTheChart) {
  EXPECT_EQ(code_of([] { embed({ChartId::polar, 0.0, 1.0}); }), ErrorCode::domain);
  EXPECT_EQ(code_of([] { embed({ChartId::polar, -1.0, 1.0}); }), ErrorCode::domain);
  EXPECT_EQ(code_of([] { embed({ChartId::holographic, kPi / 2, 0.0}); }), ErrorCode::domain);
  EXPECT_EQ(code_of([] { embed({ChartId::holographic, kPi / 2 - 1e-9, 0.0}); }), ErrorCode::domain);
  EXPECT_EQ(code_of([] { embed({ChartId::conformal, 0.0, 2 * kPi}); }), ErrorCode::domain);
  EXPECT_EQ(code_of([] { embed({ChartId::cartesian, NAN, 0.0}); }), ErrorCode::domain);
}

TEST(Basis, Examples) {
  auto b = basis({ChartId::polar, 2.0, 0.0});
  EXPECT_NEAR(b[0][0], 1.0, 1e-15);
  EXPECT_NEAR(b[0][1], 0.0, 1e-15);
  EXPECT_NEAR(b[1][0], 0.0, 1e-15);
  EXPECT_NEAR(b[1][1], 2.0, 1e-15);

  b = basis({ChartId::holographic, kPi / 4, 0.0});
  EXPECT_NEAR(b[0][0], std::cos(kPi / 4), 1e-15);
  EXPECT_NEAR(b[1][1], std::sin(kPi / 4), 1e-15);
  EXPECT_NEAR(b[0][1], 0.0, 1e-15);

  b = basis({ChartId::conformal, 0.0, 0.0});
  EXPECT_NEAR(b[0][0], 1.0, 1e-15);
  EXPECT_NEAR(b[1][1], 1.0, 1e-15);
}

TEST(Basis, MatchesFiniteDifferences) {
  SampleStream s(4);
  for (ChartId chart : kAllCharts)
    for (int k = 0; k < 30; ++k) {
      const ChartPoint p = sample_chart_point(s, chart);
      const auto got = basis(p), want = basis_fd(p);
      for (int a = 0; a < 2; ++a)
        for (int m = 0; m < 2; ++m) EXPECT_NEAR(got[a][m], want[a][m], 1e-7);
    }
}

TEST(Metric, Examples) {
  expect_matrix(metric({ChartId::polar, 3.0, 1.3}), Matrix2::diag(1.0, 9.0));
  expect_matrix(metric({ChartId::holographic, kPi / 4, 2.0}), Matrix2::diag(0.5, 0.5));
  expect_matrix(metric({ChartId::conformal, std::log(2.0), 0.4}), Matrix2::diag(4.0, 4.0));
}

TEST(Metric, ExplicitDiagonalForms) {
  SampleStream s(8);
  for (int k = 0; k < 50; ++k) {
    const ChartPoint pp = sample_chart_point(s, ChartId::polar);
    expect_matrix(metric(pp), Matrix2::diag(1.0, pp.y0 * pp.y0));
    const ChartPoint ph = sample_chart_point(s, ChartId::holographic);
    const double c = std::cos(ph.y0), sn = std::sin(ph.y0);
    expect_matrix(metric(ph), Matrix2::diag(c * c, sn * sn));
    const ChartPoint pc = sample_chart_point(s, ChartId::conformal);
    const double e2 = std::exp(2 * pc.y0);
    expect_matrix(metric(pc), Matrix2::diag(e2, e2), 1e-12 * e2);
  }
}

TEST(JacobianMixed, Examples) {
  expect_matrix(jacobian_mixed({ChartId::polar, 2.0, 0.0}), Matrix2::diag(1.0, 0.5));
  expect_matrix(jacobian_mixed({ChartId::holographic, kPi / 4, 0.0}), Matrix2::diag(std::sqrt(2.0), std::sqrt(2.0)));
  expect_matrix(jacobian_mixed({ChartId::conformal, 0.0, 0.0}), Matrix2::diag(1.0, 1.0));
}

TEST(JacobianMixed, ContractsToIdentityAndMatchesClosedForm) {
  SampleStream s(12);
  for (ChartId chart : kAllCharts)
    for (int k = 0; k < 30; ++k) {
      const ChartPoint p = sample_chart_point(s, chart);
      const Matrix2 mixed = jacobian_mixed(p);
      expect_matrix(jacobian(p) * transpose(mixed), Matrix2::diag(1.0, 1.0), 1e-12);
      expect_matrix(transpose(mixed) * jacobian(p), Matrix2::diag(1.0, 1.0), 1e-12);
      expect_matrix(mixed, closed_form::jacobian_mixed(p), 1e-10);
    }
}

TEST(Invert, RoundTripAndDomain) {
  SampleStream s(2);
  for (ChartId chart : kAllCharts)
    for (int k = 0; k < 30; ++k) {
      const ChartPoint p = sample_chart_point(s, chart);
      const ChartPoint q = invert(chart, embed(p));
      EXPECT_NEAR(q.y0, p.y0, 1e-10);
      double d = std::abs(q.y1 - p.y1);
      if (chart != ChartId::cartesian) d = std::min(d, 2 * kPi - d);
      EXPECT_LT(d, 1e-10);
    }
  EXPECT_EQ(code_of([] { invert(ChartId::holographic, {1.0, 0.0}); }), ErrorCode::domain);
  EXPECT_EQ(code_of([] { invert(ChartId::conformal, {0.0, 0.0}); }), ErrorCode::domain);
  EXPECT_EQ(code_of([] { invert(ChartId::polar, {0.0, 0.0}); }), ErrorCode::domain);
  const ChartPoint w = invert(ChartId::polar, {1.0, -1e-3});
  EXPECT_GE(w.y1, 0.0);
  EXPECT_LT(w.y1, 2 * kPi);
}

TEST(Compactify, Examples) {
  ConformalVector u = compactify({0.0, 0.0}, false);
  EXPECT_DOUBLE_EQ(u.u2, 0.5);
  EXPECT_DOUBLE_EQ(u.u3, 0.5);
  u = compactify({0.0, 0.0}, true);
  EXPECT_DOUBLE_EQ(u.u2, 1.0);
  EXPECT_DOUBLE_EQ(u.u3, 1.0);
  u = compactify({1.0, 0.0}, true);
  EXPECT_DOUBLE_EQ(u.u0, 1.0);
  EXPECT_DOUBLE_EQ(u.u2, 0.0);
  EXPECT_DOUBLE_EQ(u.u3, 1.0);
}

TEST(Compactify, NullAndOnTheSphere) {
  SampleStream s(6);
  for (int k = 0; k < 1000; ++k) {
    const Vec2 x{s.uniform(-4, 4), s.uniform(-4, 4)};
    const double x2 = x[0] * x[0] + x[1] * x[1];
    EXPECT_NEAR(null_defect(compactify(x, false)) / (1 + x2 * x2), 0.0, 1e-12);
    const ConformalVector u = compactify(x, true);
    EXPECT_NEAR(u.u0 * u.u0 + u.u1 * u.u1 + u.u2 * u.u2, 1.0, 1e-12);
  }
}

TEST(SpecialConformal, ZeroTranslationIsIdentity) {
  const Vec2 y = special_conformal({0.3, -1.7}, {0.0, 0.0});
  EXPECT_NEAR(y[0], 0.3, 1e-15);
  EXPECT_NEAR(y[1], -1.7, 1e-15);
}

TEST(SpecialConformal, HandEvaluatedComposition) {
  const Vec2 y = special_conformal({0.0, 2.0}, {0.0, -0.25});
  EXPECT_NEAR(y[0], 0.0, 1e-14);
  EXPECT_NEAR(y[1], 4.0, 1e-14);
}

// Translating the inverted point by c moves x by -c^mu q_mu(x) to first
// order: at x = (1, 0), c = (0.01, 0) the exact image is 1/1.01.
TEST(SpecialConformal, FirstOrderChangeIsMinusCQ) {
  const double eps = 0.01;
  const Vec2 y = special_conformal({1.0, 0.0}, {eps, 0.0});
  EXPECT_NEAR(y[0], 1.0 / 1.01, 1e-15);
  EXPECT_NEAR(y[0] - 1.0, -eps * 1.0, eps * eps);
  EXPECT_NEAR(y[1], 0.0, 1e-15);
}

TEST(SpecialConformal, PoleIsReported) {
  EXPECT_EQ(code_of([] { special_conformal({0.0, 0.0}, {0.1, 0.0}); }), ErrorCode::pole);
  // 1/x + c = 0 sends the point to infinity.
  EXPECT_EQ(code_of([] { special_conformal({2.0, 0.0}, {-0.5, 0.0}); }), ErrorCode::pole);
}
