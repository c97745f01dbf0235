// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoconf/laplace.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "holoconf/error.hpp"

namespace holoconf {

namespace {

constexpr cplx kI{0.0, 1.0};

}  // namespace

std::array<Jet, 2> coordinate_jets(const ChartPoint& p, int order) {
  return {Jet::variable(p.y0, 0, order), Jet::variable(p.y1, 1, order)};
}

cplx laplacian(ChartId chart, const ScalarField& f, const ChartPoint& p) {
  if (p.chart != chart) throw Error(ErrorCode::invalid_argument, "point belongs to a different chart");
  validate(p);
  const auto y = coordinate_jets(p, 2);
  const Jet v = f(y[0], y[1]);
  switch (chart) {
    case ChartId::cartesian:
    case ChartId::conformal:
      return v.d2(0, 0) + v.d2(1, 1);
    case ChartId::polar: {
      const double r = p.y0;
      return r * v.d(0) + r * r * v.d2(0, 0) + v.d2(1, 1);
    }
    case ChartId::holographic: {
      const double t = std::tan(p.y0);
      const double sec2 = 1.0 + t * t;
      return t * (sec2 * v.d(0) + t * v.d2(0, 0)) + v.d2(1, 1);
    }
  }
  return 0.0;
}

double rescale_factor(const ChartPoint& p) {
  validate(p);
  switch (p.chart) {
    case ChartId::cartesian:
      return 1.0;
    case ChartId::polar:
      return p.y0 * p.y0;
    case ChartId::holographic:
      return std::sin(p.y0) * std::sin(p.y0);
    case ChartId::conformal:
      return std::exp(2.0 * p.y0);
  }
  return 1.0;
}

ScalarField solution_field(cplx alpha, ChartId chart) {
  switch (chart) {
    case ChartId::cartesian:
      return [alpha](const Jet& x0, const Jet& x1) {
        Jet l = log(x0 + kI * x1);
        // Principal arg lies in (-pi, pi]; move the cut to the positive x0 axis.
        if (l.value().imag() < 0.0) l += kI * (2.0 * std::numbers::pi);
        return exp(alpha * l);
      };
    case ChartId::polar:
      return [alpha](const Jet& r, const Jet& phi) { return exp(alpha * (log(r) + kI * phi)); };
    case ChartId::holographic:
      return [alpha](const Jet& theta, const Jet& phi) { return exp(alpha * (log(sin(theta)) + kI * phi)); };
    case ChartId::conformal:
      return [alpha](const Jet& rho, const Jet& phi) { return exp(alpha * (rho + kI * phi)); };
  }
  return {};
}

cplx solve(cplx alpha, const ChartPoint& p) {
  validate(p);
  const auto y = coordinate_jets(p, 0);
  return solution_field(alpha, p.chart)(y[0], y[1]).value();
}

double residual(cplx alpha, const ChartPoint& p) {
  return std::abs(laplacian(p.chart, solution_field(alpha, p.chart), p));
}

cplx spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw Error(ErrorCode::invalid_argument, "spherical harmonic needs |m| <= l");
  const auto ul = static_cast<unsigned>(l);
  const auto um = static_cast<unsigned>(std::abs(m));
  const cplx positive = std::sph_legendre(ul, um, theta) * std::exp(kI * (static_cast<double>(um) * phi));
  if (m >= 0) return positive;
  return ((um % 2 == 0) ? 1.0 : -1.0) * std::conj(positive);
}

HarmonicRatio ylm_ratio(int l, std::span<const ChartPoint> grid, HarmonicBranch branch) {
  if (grid.empty()) throw Error(ErrorCode::invalid_argument, "harmonic ratio needs a non-empty grid");
  if (l < 1) throw Error(ErrorCode::invalid_argument, "harmonic ratio needs l >= 1");
  const int m = branch == HarmonicBranch::positive ? l : -l;
  std::vector<cplx> ratios;
  ratios.reserve(grid.size());
  for (const auto& p : grid) {
    if (p.chart != ChartId::holographic) throw Error(ErrorCode::invalid_argument, "grid must be holographic");
    validate(p);
    const cplx v = std::exp(kI * (static_cast<double>(m) * p.y1)) * std::pow(std::sin(p.y0), l);
    ratios.push_back(spherical_harmonic(l, m, p.y0, p.y1) / v);
  }
  cplx mean = 0.0;
  for (auto r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double var = 0.0;
  for (auto r : ratios) var += std::norm(r - mean);
  return {mean, std::sqrt(var / static_cast<double>(ratios.size()))};
}

}  // namespace holoconf
