// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoconf/charts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "holoconf/error.hpp"

namespace holoconf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void domain_error(const ChartPoint& p, const char* why) {
  std::ostringstream msg;
  msg << to_string(p.chart) << " point (" << p.y0 << ", " << p.y1 << "): " << why;
  throw Error(ErrorCode::domain, msg.str());
}

double wrap_angle(double phi) {
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return phi;
}

}  // namespace

std::string_view to_string(ChartId chart) noexcept {
  switch (chart) {
    case ChartId::cartesian:
      return "cartesian";
    case ChartId::polar:
      return "polar";
    case ChartId::holographic:
      return "holographic";
    case ChartId::conformal:
      return "conformal";
  }
  return "unknown";
}

std::optional<ChartId> parse_chart(std::string_view name) noexcept {
  for (auto c : kAllCharts) {
    if (to_string(c) == name) return c;
  }
  if (name == "flat") return ChartId::cartesian;
  return std::nullopt;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
  return out;
}

Matrix2 transpose(const Matrix2& a) { return {{a.m[0], a.m[2], a.m[1], a.m[3]}}; }

Matrix2 inverse(const Matrix2& a) {
  const double det = a.det();
  if (det == 0.0 || !std::isfinite(det)) throw Error(ErrorCode::singular, "matrix is singular");
  return {{a.m[3] / det, -a.m[1] / det, -a.m[2] / det, a.m[0] / det}};
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

void validate(const ChartPoint& p) {
  if (!std::isfinite(p.y0) || !std::isfinite(p.y1)) domain_error(p, "non-finite coordinate");
  if (p.chart == ChartId::cartesian) return;
  if (p.y1 < 0.0 || p.y1 >= kTwoPi) domain_error(p, "angle outside [0, 2pi)");
  switch (p.chart) {
    case ChartId::polar:
      if (p.y0 <= kBoundaryGuard) domain_error(p, "radius must be positive");
      break;
    case ChartId::holographic:
      if (p.y0 <= kBoundaryGuard || p.y0 >= std::numbers::pi / 2 - kBoundaryGuard)
        domain_error(p, "theta outside (0, pi/2)");
      break;
    default:
      break;
  }
}

Vec2 embed(const ChartPoint& p) {
  validate(p);
  return embed_as(p.chart, p.y0, p.y1);
}

ChartPoint invert(ChartId chart, const Vec2& x) {
  if (chart == ChartId::cartesian) return {chart, x[0], x[1]};
  const double r = std::hypot(x[0], x[1]);
  const double phi = wrap_angle(std::atan2(x[1], x[0]));
  ChartPoint p{chart, 0.0, phi};
  switch (chart) {
    case ChartId::polar:
      p.y0 = r;
      break;
    case ChartId::holographic:
      if (r >= 1.0) domain_error(p, "holographic chart covers only the open unit disk");
      p.y0 = std::asin(r);
      break;
    case ChartId::conformal:
      if (r == 0.0) domain_error(p, "origin has no conformal coordinates");
      p.y0 = std::log(r);
      break;
    default:
      break;
  }
  validate(p);
  return p;
}

std::array<Vec2, 2> basis(const ChartPoint& p) {
  validate(p);
  const auto x = embed_as(p.chart, Jet::variable(p.y0, 0, 1), Jet::variable(p.y1, 1, 1));
  return {Vec2{x[0].d(0).real(), x[1].d(0).real()}, Vec2{x[0].d(1).real(), x[1].d(1).real()}};
}

Matrix2 jacobian(const ChartPoint& p) {
  const auto e = basis(p);
  return {{e[0][0], e[1][0], e[0][1], e[1][1]}};
}

Matrix2 metric(const ChartPoint& p) {
  const Matrix2 a = jacobian(p);
  return transpose(a) * a;
}

Matrix2 jacobian_mixed(const ChartPoint& p) {
  const Matrix2 g = metric(p);
  if (std::abs(g.det()) <= std::numeric_limits<double>::min()) {
    throw Error(ErrorCode::singular, "chart metric is degenerate at this point");
  }
  return jacobian(p) * inverse(g);
}

namespace closed_form {

std::array<Vec2, 2> basis(const ChartPoint& p) {
  validate(p);
  const double c = std::cos(p.y1);
  const double s = std::sin(p.y1);
  switch (p.chart) {
    case ChartId::cartesian:
      return {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}};
    case ChartId::polar:
      return {Vec2{c, s}, Vec2{-p.y0 * s, p.y0 * c}};
    case ChartId::holographic: {
      const double ct = std::cos(p.y0);
      const double st = std::sin(p.y0);
      return {Vec2{ct * c, ct * s}, Vec2{-st * s, st * c}};
    }
    case ChartId::conformal: {
      const double e = std::exp(p.y0);
      return {Vec2{e * c, e * s}, Vec2{-e * s, e * c}};
    }
  }
  return {};
}

Matrix2 metric(const ChartPoint& p) {
  validate(p);
  switch (p.chart) {
    case ChartId::cartesian:
      return Matrix2::diag(1.0, 1.0);
    case ChartId::polar:
      return Matrix2::diag(1.0, p.y0 * p.y0);
    case ChartId::holographic: {
      const double ct = std::cos(p.y0);
      const double st = std::sin(p.y0);
      return Matrix2::diag(ct * ct, st * st);
    }
    case ChartId::conformal: {
      const double e2 = std::exp(2.0 * p.y0);
      return Matrix2::diag(e2, e2);
    }
  }
  return {};
}

Matrix2 jacobian_mixed(const ChartPoint& p) {
  validate(p);
  const double c = std::cos(p.y1);
  const double s = std::sin(p.y1);
  switch (p.chart) {
    case ChartId::cartesian:
      return Matrix2::diag(1.0, 1.0);
    case ChartId::polar:
      return {{c, -s / p.y0, s, c / p.y0}};
    case ChartId::holographic: {
      const double ct = std::cos(p.y0);
      const double st = std::sin(p.y0);
      return {{c / ct, -s / st, s / ct, c / st}};
    }
    case ChartId::conformal: {
      const double e = std::exp(-p.y0);
      return {{e * c, -e * s, e * s, e * c}};
    }
  }
  return {};
}

}  // namespace closed_form

double null_defect(const ConformalVector& u) {
  return u.u0 * u.u0 + u.u1 * u.u1 + u.u2 * u.u2 - u.u3 * u.u3;
}

ConformalVector compactify(const Vec2& x, bool rescaled) {
  const double x2 = x[0] * x[0] + x[1] * x[1];
  ConformalVector u{x[0], x[1], 0.5 * (1.0 - x2), 0.5 * (1.0 + x2)};
  if (rescaled) {
    const double k = 1.0 / u.u3;
    u = {u.u0 * k, u.u1 * k, u.u2 * k, 1.0};
  }
  return u;
}

Vec2 special_conformal(const Vec2& x, const Vec2& c) {
  const auto invert_point = [](const Vec2& v) {
    const double n2 = v[0] * v[0] + v[1] * v[1];
    if (n2 <= std::numeric_limits<double>::min()) {
      throw Error(ErrorCode::pole, "special conformal map crosses its pole");
    }
    return Vec2{v[0] / n2, v[1] / n2};
  };
  const Vec2 w = invert_point(x);
  return invert_point(Vec2{w[0] + c[0], w[1] + c[1]});
}

}  // namespace holoconf
