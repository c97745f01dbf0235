// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoconf/bicomplex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "holoconf/error.hpp"

namespace holoconf {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

double max_abs(const Bicomplex& a) {
  return std::max({std::abs(a.re), std::abs(a.im_i), std::abs(a.im_j), std::abs(a.im_ij)});
}

// a = z1 + j z2 with j e+ = -i e+ and j e- = +i e-.
IdempotentParts split(const Bicomplex& a) {
  const std::complex<double> z1{a.re, a.im_i};
  const std::complex<double> z2{a.im_j, a.im_ij};
  return {z1 - kI * z2, z1 + kI * z2};
}

Bicomplex combine(const IdempotentParts& parts) {
  const std::complex<double> z1 = 0.5 * (parts.plus + parts.minus);
  const std::complex<double> z2 = (parts.minus - parts.plus) / (2.0 * kI);
  return {z1.real(), z1.imag(), z2.real(), z2.imag()};
}

Bicomplex exp(const Bicomplex& a) {
  const auto p = split(a);
  return combine({std::exp(p.plus), std::exp(p.minus)});
}

Bicomplex inverse(const Bicomplex& a, double threshold) {
  const auto p = split(a);
  if (std::abs(p.plus) <= threshold || std::abs(p.minus) <= threshold) {
    throw Error(ErrorCode::singular, "bicomplex value lies on a null line and has no inverse");
  }
  return combine({1.0 / p.plus, 1.0 / p.minus});
}

HopfTriple involution_projections(const Bicomplex& s, double tol) {
  const Bicomplex c = s * conjugate(s);
  const Bicomplex r = s * reverse(s);
  const double scale = 1.0 + squared_length(s);
  const double stray = std::max({std::abs(c.im_i), std::abs(c.im_ij), std::abs(r.im_i), std::abs(r.im_j)});
  if (stray > tol * scale) {
    std::ostringstream msg;
    msg << "involution product left the expected plane (stray component " << stray << ")";
    throw Error(ErrorCode::structure, msg.str());
  }
  return {c.im_j, -r.im_ij, c.re, r.re};
}

}  // namespace holoconf
