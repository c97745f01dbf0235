// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "holoconf/bicomplex.hpp"
#include "holoconf/charts.hpp"
#include "holoconf/jet.hpp"

namespace holoconf {

/// Seeded uniform stream. Doubles are built from the top 53 bits of the
/// engine output so the sequence does not depend on the standard library's
/// distribution implementation.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// Sampling windows inside each chart's validity region.
struct SampleWindows {
  static constexpr double r_min = 0.2, r_max = 2.5;
  static constexpr double theta_min = 0.1, theta_max = 1.45;
  static constexpr double rho_min = -1.0, rho_max = 1.0;
  static constexpr double v_min = 0.3, v_max = 2.0;
};

ChartPoint sample_chart_point(SampleStream& s, ChartId chart);

/// Complex scale dimension in [-3, 3] + i[-1, 1].
cplx sample_alpha(SampleStream& s);

/// Nonzero complex number in the annulus [v_min, v_max].
cplx sample_upsilon(SampleStream& s);

/// Components uniform in [-1, 1].
Bicomplex sample_bicomplex(SampleStream& s);

}  // namespace holoconf
