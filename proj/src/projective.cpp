// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoconf/projective.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "holoconf/error.hpp"

namespace holoconf {

namespace {

constexpr Bicomplex kOne = Bicomplex::one();
constexpr Bicomplex kUnitI = Bicomplex::unit_i();
constexpr Bicomplex kUnitIJ = Bicomplex::unit_ij();

constexpr double kPoleThreshold = 1e-14;

Bicomplex scalar(cplx z) { return Bicomplex::from_complex(z); }

}  // namespace

std::string_view to_string(Ring ring) noexcept {
  switch (ring) {
    case Ring::real: return "real";
    case Ring::complex: return "complex";
    case Ring::bicomplex: return "bicomplex";
  }
  return "?";
}

bool in_ring(Ring ring, const Bicomplex& value) {
  switch (ring) {
    case Ring::real: return value.is_real();
    case Ring::complex: return value.is_complex();
    case Ring::bicomplex: return true;
  }
  return false;
}

SpinMatrix SpinMatrix::identity(Ring ring) { return {ring, kOne, {}, {}, kOne}; }

namespace {
Ring wider(Ring a, Ring b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }
}  // namespace

SpinMatrix operator*(const SpinMatrix& m, const SpinMatrix& n) {
  return {wider(m.ring, n.ring), m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
          m.c * n.b + m.d * n.d};
}

SpinMatrix operator+(const SpinMatrix& m, const SpinMatrix& n) {
  return {wider(m.ring, n.ring), m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
}

SpinMatrix operator-(const SpinMatrix& m, const SpinMatrix& n) {
  return {wider(m.ring, n.ring), m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
}

SpinMatrix operator*(const Bicomplex& s, const SpinMatrix& m) {
  const Ring r = s.is_real() ? m.ring : wider(m.ring, s.is_complex() ? Ring::complex : Ring::bicomplex);
  return {r, s * m.a, s * m.b, s * m.c, s * m.d};
}

SpinMatrix commutator(const SpinMatrix& m, const SpinMatrix& n) { return m * n - n * m; }

double max_abs(const SpinMatrix& m) {
  return std::max({max_abs(m.a), max_abs(m.b), max_abs(m.c), max_abs(m.d)});
}

bool supports(Ring ring, GeneratorId g) noexcept {
  if (ring != Ring::real) return true;
  return g == GeneratorId::b || g == GeneratorId::p0 || g == GeneratorId::q0;
}

SpinMatrix matrix_rep(GeneratorId g, Ring ring) {
  if (!supports(ring, g)) {
    std::ostringstream msg;
    msg << "generator " << to_string(g) << " has no " << to_string(ring) << " matrix";
    throw Error(ErrorCode::unsupported, msg.str());
  }
  const Bicomplex half{0.5, 0.0, 0.0, 0.0};
  SpinMatrix b, p0, q0;
  if (ring == Ring::bicomplex) {
    const auto [o, o_bar] = null_plane_units();
    b = {ring, 0.5 * kUnitIJ, {}, {}, -0.5 * kUnitIJ};
    p0 = {ring, {}, o, -o_bar, {}};
    q0 = {ring, {}, o_bar, -o, {}};
  } else {
    b = {ring, half, {}, {}, -half};
    p0 = {ring, {}, kOne, {}, {}};
    q0 = {ring, {}, {}, -kOne, {}};
  }
  SpinMatrix out;
  switch (g) {
    case GeneratorId::b: out = b; break;
    case GeneratorId::p0: out = p0; break;
    case GeneratorId::q0: out = q0; break;
    case GeneratorId::s01: out = kUnitI * b; break;
    case GeneratorId::p1: out = kUnitI * p0; break;
    case GeneratorId::q1: out = -kUnitI * q0; break;
  }
  out.ring = ring;
  return out;
}

namespace {

SpinMatrix matrix_combination(Ring ring, const Coeffs6& c) {
  SpinMatrix out{ring, {}, {}, {}, {}};
  for (auto g : kAllGenerators) {
    const cplx k = c[index_of(g)];
    if (k == 0.0) continue;
    if (!supports(ring, g)) return {ring, {NAN, NAN, NAN, NAN}, {}, {}, {}};
    out = out + scalar(k) * matrix_rep(g, ring);
  }
  out.ring = ring;
  return out;
}

}  // namespace

LieModel matrix_model(Ring ring) {
  LieModel m;
  m.name = std::string(to_string(ring)) + " matrices";
  for (auto g : kAllGenerators)
    if (supports(ring, g)) m.generators.push_back(g);
  m.bracket_defect = [ring](const Coeffs6& u, const Coeffs6& v, const Coeffs6& rhs) {
    const SpinMatrix lhs = commutator(matrix_combination(ring, u), matrix_combination(ring, v));
    const SpinMatrix want = matrix_combination(ring, rhs);
    const double d = max_abs(lhs - want) / (1.0 + std::max(max_abs(lhs), max_abs(want)));
    return std::isnan(d) ? INFINITY : d;
  };
  return m;
}

SignLedger matrix_bracket_table(Ring ring, double tol) { return commutator_ledger(matrix_model(ring), tol); }

Bicomplex mobius_apply(const SpinMatrix& m, const Bicomplex& v) {
  const Bicomplex num = m.a * v + m.b;
  const Bicomplex den = m.c * v + m.d;
  const auto parts = split(den);
  const double scale = 1.0 + max_abs(num);
  if (std::abs(parts.plus) <= kPoleThreshold * scale || std::abs(parts.minus) <= kPoleThreshold * scale) {
    const bool both = std::abs(parts.plus) <= kPoleThreshold * scale && std::abs(parts.minus) <= kPoleThreshold * scale;
    throw Error(ErrorCode::pole, both ? "fractional-linear map hits its pole"
                                      : "fractional-linear denominator is a zero divisor (pole on a null line)");
  }
  return num * inverse(den, 0.0);
}

cplx mobius_apply(const SpinMatrix& m, cplx v) { return mobius_apply(m, scalar(v)).as_complex(); }

SpinMatrix exp_one_param(GeneratorId g, double eps, Ring ring) {
  const SpinMatrix gen = matrix_rep(g, ring);
  SpinMatrix out;
  if (g == GeneratorId::b || g == GeneratorId::s01) {
    out = {ring, exp(eps * gen.a), {}, {}, exp(eps * gen.d)};
  } else {
    out = SpinMatrix::identity(ring) + Bicomplex{eps, 0.0, 0.0, 0.0} * gen;
  }
  out.ring = ring;
  return out;
}

double flow_consistency(GeneratorId g, cplx v0, double eps) {
  if (eps == 0.0) return 0.0;
  const cplx moved = mobius_apply(exp_one_param(g, eps, Ring::complex), v0);
  const cplx field = generator(g, Realization::upsilon_line).at({v0, 0.0})[0];
  return std::abs(moved - (v0 + eps * field));
}

FlowOrder flow_order(GeneratorId g, cplx v0, double eps) {
  FlowOrder f;
  f.coarse = flow_consistency(g, v0, eps);
  f.fine = flow_consistency(g, v0, 0.5 * eps);
  f.ratio = f.coarse / f.fine;
  return f;
}

HopfTriple hopf_unnormalized(const S3Point& s) {
  return {2.0 * (s.s1 * s.s3 + s.s2 * s.s4), 2.0 * (s.s2 * s.s3 - s.s1 * s.s4),
          s.s1 * s.s1 + s.s2 * s.s2 - s.s3 * s.s3 - s.s4 * s.s4,
          s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3 + s.s4 * s.s4};
}

HopfTriple hopf(const S3Point& s) {
  const double n = std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3 + s.s4 * s.s4);
  if (n == 0.0 || !std::isfinite(n)) throw Error(ErrorCode::singular, "Hopf map needs a nonzero point");
  return hopf_unnormalized({s.s1 / n, s.s2 / n, s.s3 / n, s.s4 / n});
}

Bicomplex to_bicomplex(const S3Point& s) { return {s.s1, s.s2, s.s3, s.s4}; }

bool equivalent(const ProjectivePoint& a, const ProjectivePoint& b, double tol) {
  const Bicomplex d = a.v1 * b.v2 - a.v2 * b.v1;
  const double scale = 1.0 + std::max({max_abs(a.v1), max_abs(a.v2)}) * std::max({max_abs(b.v1), max_abs(b.v2)});
  return max_abs(d) <= tol * scale;
}

ChartTransition chart_transition(const ProjectivePoint& p) {
  if (!p.v1.is_complex() || !p.v2.is_complex()) {
    throw Error(ErrorCode::invalid_argument, "chart transition is defined on the complex projective line");
  }
  const cplx v1 = p.v1.as_complex();
  const cplx v2 = p.v2.as_complex();
  if (v1 == 0.0 && v2 == 0.0) throw Error(ErrorCode::invalid_argument, "(0, 0) is not a projective point");
  ChartTransition t;
  if (v2 == 0.0) {
    t.kind = ChartTransition::Kind::second_only;
    return t;
  }
  if (v1 == 0.0) {
    t.kind = ChartTransition::Kind::first_only;
    return t;
  }
  t.affine0 = v1 / v2;
  t.affine1 = v2 / v1;
  t.transition = t.affine0 / std::abs(t.affine0);
  return t;
}

}  // namespace holoconf
