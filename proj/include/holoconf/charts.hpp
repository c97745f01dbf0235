// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "holoconf/jet.hpp"

namespace holoconf {

enum class ChartId { cartesian, polar, holographic, conformal };

inline constexpr std::array<ChartId, 4> kAllCharts = {ChartId::cartesian, ChartId::polar, ChartId::holographic,
                                                      ChartId::conformal};

std::string_view to_string(ChartId chart) noexcept;
std::optional<ChartId> parse_chart(std::string_view name) noexcept;

/// Coordinates (y0, y1) in one chart:
///   cartesian   (x0, x1)
///   polar       (r, phi),      r > 0
///   holographic (theta, phi),  0 < theta < pi/2
///   conformal   (rho, phi)
/// phi always lies in [0, 2*pi).
struct ChartPoint {
  ChartId chart = ChartId::cartesian;
  double y0 = 0.0;
  double y1 = 0.0;
};

using Vec2 = std::array<double, 2>;

/// Row-major 2x2 real matrix.
struct Matrix2 {
  std::array<double, 4> m{};

  double operator()(int row, int col) const { return m[static_cast<std::size_t>(2 * row + col)]; }
  double& operator()(int row, int col) { return m[static_cast<std::size_t>(2 * row + col)]; }

  static Matrix2 diag(double a, double b) { return {{a, 0.0, 0.0, b}}; }
  double det() const { return m[0] * m[3] - m[1] * m[2]; }
};

Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 transpose(const Matrix2& a);
Matrix2 inverse(const Matrix2& a);
double max_abs_diff(const Matrix2& a, const Matrix2& b);

/// Points within this distance of a chart boundary are rejected.
inline constexpr double kBoundaryGuard = 1e-8;

/// Throws Error(domain) if p lies outside its chart's validity region.
void validate(const ChartPoint& p);

/// The coordinate functions x_mu(y), generic over double and Jet.
template <class T>
std::array<T, 2> embed_as(ChartId chart, const T& y0, const T& y1) {
  using std::cos;
  using std::exp;
  using std::sin;
  switch (chart) {
    case ChartId::cartesian:
      return {y0, y1};
    case ChartId::polar:
      return {y0 * cos(y1), y0 * sin(y1)};
    case ChartId::holographic:
      return {sin(y0) * cos(y1), sin(y0) * sin(y1)};
    case ChartId::conformal:
      return {exp(y0) * cos(y1), exp(y0) * sin(y1)};
  }
  return {y0, y1};
}

Vec2 embed(const ChartPoint& p);

/// Inverse coordinate map; throws Error(domain) when x has no preimage
/// (origin for the angular charts, |x| >= 1 for holographic).
ChartPoint invert(ChartId chart, const Vec2& x);

/// Columns d x / d y_alpha, obtained by forward-mode differentiation of
/// embed_as.
std::array<Vec2, 2> basis(const ChartPoint& p);

/// A_mu^alpha = d x_mu / d y_alpha (row mu, column alpha).
Matrix2 jacobian(const ChartPoint& p);

/// Gram matrix g^{alpha beta} of the basis vectors.
Matrix2 metric(const ChartPoint& p);

/// A^mu_alpha = g^{mu nu} g_{alpha beta} A_nu^beta with the flat metric the
/// identity and g_{alpha beta} the inverse of metric(p). Throws
/// Error(singular) for a degenerate metric.
Matrix2 jacobian_mixed(const ChartPoint& p);

/// Hand-derived expressions, kept next to the differentiated versions so
/// the two can be compared.
namespace closed_form {
std::array<Vec2, 2> basis(const ChartPoint& p);
Matrix2 metric(const ChartPoint& p);
Matrix2 jacobian_mixed(const ChartPoint& p);
}  // namespace closed_form

struct ConformalVector {
  double u0 = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  double u3 = 0.0;
};

/// Minkowski square with signature (+, +, +, -).
double null_defect(const ConformalVector& u);

/// (x0, x1, (1 - x^2)/2, (1 + x^2)/2), or the same divided by its last
/// component when `rescaled` is set.
ConformalVector compactify(const Vec2& x, bool rescaled);

/// Inversion x -> x/|x|^2, translation by c, inversion again. Throws
/// Error(pole) when either inversion hits the origin.
Vec2 special_conformal(const Vec2& x, const Vec2& c);

}  // namespace holoconf
