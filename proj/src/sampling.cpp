// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoconf/sampling.hpp"

#include <cmath>
#include <numbers>

namespace holoconf {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sample_angle(SampleStream& s) {
  const double phi = s.uniform(0.0, kTwoPi);
  return phi < kTwoPi ? phi : 0.0;
}
}  // namespace

ChartPoint sample_chart_point(SampleStream& s, ChartId chart) {
  using W = SampleWindows;
  switch (chart) {
    case ChartId::cartesian: {
      const double r = s.uniform(W::r_min, W::r_max);
      const double phi = sample_angle(s);
      return {chart, r * std::cos(phi), r * std::sin(phi)};
    }
    case ChartId::polar: {
      const double r = s.uniform(W::r_min, W::r_max);
      return {chart, r, sample_angle(s)};
    }
    case ChartId::holographic: {
      const double theta = s.uniform(W::theta_min, W::theta_max);
      return {chart, theta, sample_angle(s)};
    }
    case ChartId::conformal: {
      const double rho = s.uniform(W::rho_min, W::rho_max);
      return {chart, rho, sample_angle(s)};
    }
  }
  return {};
}

cplx sample_alpha(SampleStream& s) {
  const double re = s.uniform(-3.0, 3.0);
  const double im = s.uniform(-1.0, 1.0);
  return {re, im};
}

cplx sample_upsilon(SampleStream& s) {
  const double r = s.uniform(SampleWindows::v_min, SampleWindows::v_max);
  return std::polar(r, sample_angle(s));
}

Bicomplex sample_bicomplex(SampleStream& s) {
  Bicomplex b;
  b.re = s.uniform(-1.0, 1.0);
  b.im_i = s.uniform(-1.0, 1.0);
  b.im_j = s.uniform(-1.0, 1.0);
  b.im_ij = s.uniform(-1.0, 1.0);
  return b;
}

}  // namespace holoconf
