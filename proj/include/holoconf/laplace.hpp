// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>

#include "holoconf/charts.hpp"
#include "holoconf/jet.hpp"

namespace holoconf {

/// Complex function of the chart coordinates, evaluated on jets so that
/// derivatives come along with the value.
using ScalarField = std::function<Jet(const Jet& y0, const Jet& y1)>;

/// Jets of the two chart coordinates at p, truncated at `order`.
std::array<Jet, 2> coordinate_jets(const ChartPoint& p, int order);

/// Rescaled Laplace operator of the chart applied to f at p:
///   cartesian    d00 + d11
///   polar        r dr r dr + dphiphi
///   holographic  tan(t) dt tan(t) dt + dphiphi
///   conformal    drhorho + dphiphi
cplx laplacian(ChartId chart, const ScalarField& f, const ChartPoint& p);

/// Ratio between the rescaled operator of the chart and the standard
/// Cartesian Laplacian: r^2 for polar, sin^2(theta) for holographic,
/// e^{2 rho} for conformal, 1 for cartesian.
double rescale_factor(const ChartPoint& p);

/// The separable solution v^alpha = exp(alpha (log r + i phi)) written in
/// the chart's coordinates, with phi in [0, 2 pi) and the principal real
/// logarithm of the radial factor.
ScalarField solution_field(cplx alpha, ChartId chart);

/// v^alpha evaluated at p.
cplx solve(cplx alpha, const ChartPoint& p);

/// |laplacian(v^alpha)| at p.
double residual(cplx alpha, const ChartPoint& p);

/// Y_l^m(theta, phi) with Condon-Shortley phase and unit L2 norm.
cplx spherical_harmonic(int l, int m, double theta, double phi);

enum class HarmonicBranch { positive, negative };

struct HarmonicRatio {
  cplx mean;
  double spread = 0.0;  ///< standard deviation of the ratio over the grid
};

/// Y_l^{+-l} / v^{+-l} over holographic grid points. The negative branch
/// divides Y_l^{-l} by e^{-i l phi} sin^l theta. Throws Error(invalid_argument)
/// for an empty grid or l < 1.
HarmonicRatio ylm_ratio(int l, std::span<const ChartPoint> grid, HarmonicBranch branch = HarmonicBranch::positive);

}  // namespace holoconf
