// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "holoconf/algebra.hpp"
#include "holoconf/bicomplex.hpp"

namespace holoconf {

enum class Ring { real, complex, bicomplex };

std::string_view to_string(Ring ring) noexcept;

/// True when `value` lies in the subring (real: only re; complex: re and i).
bool in_ring(Ring ring, const Bicomplex& value);

/// 2x2 matrix ((a, b), (c, d)) over one of the rings, stored as bicomplex
/// entries.
struct SpinMatrix {
  Ring ring = Ring::real;
  Bicomplex a, b, c, d;

  static SpinMatrix identity(Ring ring);
  Bicomplex trace() const { return a + d; }
  Bicomplex det() const { return a * d - b * c; }
};

SpinMatrix operator*(const SpinMatrix& m, const SpinMatrix& n);
SpinMatrix operator+(const SpinMatrix& m, const SpinMatrix& n);
SpinMatrix operator-(const SpinMatrix& m, const SpinMatrix& n);
SpinMatrix operator*(const Bicomplex& s, const SpinMatrix& m);
SpinMatrix commutator(const SpinMatrix& m, const SpinMatrix& n);
double max_abs(const SpinMatrix& m);

/// Real ring carries b, p0, q0; the complex and bicomplex rings all six.
bool supports(Ring ring, GeneratorId g) noexcept;

/// sl(2) generator matrices. Real: b = diag(1, -1)/2, p0 = ((0,1),(0,0)),
/// q0 = ((0,0),(-1,0)). Complex adds s01 = i b, p1 = i p0, q1 = -i q0.
/// Bicomplex: p0 = ((0, o), (-o_bar, 0)), q0 = ((0, o_bar), (-o, 0)),
/// b = ij diag(1, -1)/2, with the same i-multiples for the rest.
/// Throws Error(unsupported) for a generator the ring does not carry.
SpinMatrix matrix_rep(GeneratorId g, Ring ring);

/// The ring's generators as a LieModel over its supported subalgebra.
LieModel matrix_model(Ring ring);

/// Commutators of matrix_rep against the reference relations.
SignLedger matrix_bracket_table(Ring ring, double tol = 1e-12);

/// v -> (a v + b) / (c v + d). Denominators are inverted through the
/// idempotent split; throws Error(pole) when c v + d is zero or a zero
/// divisor.
Bicomplex mobius_apply(const SpinMatrix& m, const Bicomplex& v);
cplx mobius_apply(const SpinMatrix& m, cplx v);

/// exp(eps * matrix_rep(g, ring)): componentwise exponential on the
/// diagonal generators, I + eps M on the nilpotent ones.
SpinMatrix exp_one_param(GeneratorId g, double eps, Ring ring);

/// |Mobius image of v0 under exp_one_param(g, eps, complex) - (v0 + eps X_g(v0))|
/// with X_g the v-line field of g.
double flow_consistency(GeneratorId g, cplx v0, double eps);

struct FlowOrder {
  double coarse = 0.0;  ///< defect at eps
  double fine = 0.0;    ///< defect at eps / 2
  double ratio = 0.0;   ///< coarse / fine, approximately 4 for a quadratic defect
};

FlowOrder flow_order(GeneratorId g, cplx v0, double eps);

struct S3Point {
  double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
};

/// (2(s1 s3 + s2 s4), 2(s2 s3 - s1 s4), s1^2 + s2^2 - s3^2 - s4^2) without
/// normalizing; len_sq is s1^2 + ... + s4^2.
HopfTriple hopf_unnormalized(const S3Point& s);

/// Hopf map of the normalized point. Throws Error(singular) for the zero
/// vector.
HopfTriple hopf(const S3Point& s);

/// Bicomplex number s1 + i s2 + j s3 + ij s4 = v1 + j v2.
Bicomplex to_bicomplex(const S3Point& s);

/// Pair (v1, v2) up to a common nonzero scalar.
struct ProjectivePoint {
  Bicomplex v1;
  Bicomplex v2;
};

/// v1 w2 = v2 w1.
bool equivalent(const ProjectivePoint& a, const ProjectivePoint& b, double tol = 1e-12);

struct ChartTransition {
  enum class Kind { both, first_only, second_only };
  Kind kind = Kind::both;
  cplx affine0;     ///< v1 / v2 in the chart (v, 1); valid unless first_only is impossible
  cplx affine1;     ///< v2 / v1 in the chart (1, w)
  cplx transition;  ///< (v1/v2) / |v1/v2|, unit modulus
};

/// Affine coordinates in the two standard charts of CP^1. A point with a
/// zero component lies in one chart only; kind reports which, and the
/// unavailable fields are left zero. Throws Error(invalid_argument) for
/// (0, 0) or non-complex components.
ChartTransition chart_transition(const ProjectivePoint& p);

}  // namespace holoconf
