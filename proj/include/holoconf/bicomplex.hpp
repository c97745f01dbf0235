// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <utility>

namespace holoconf {

/// Commutative bicomplex number re + i*im_i + j*im_j + ij*im_ij with
/// i^2 = j^2 = -1 and (ij)^2 = +1.
struct Bicomplex {
  double re = 0.0;
  double im_i = 0.0;
  double im_j = 0.0;
  double im_ij = 0.0;

  /// Embeds a complex number along the i axis.
  static constexpr Bicomplex from_complex(std::complex<double> z) { return {z.real(), z.imag(), 0.0, 0.0}; }

  static constexpr Bicomplex one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Bicomplex unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Bicomplex unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Bicomplex unit_ij() { return {0.0, 0.0, 0.0, 1.0}; }

  /// True when the j and ij parts vanish exactly.
  constexpr bool is_complex() const { return im_j == 0.0 && im_ij == 0.0; }
  constexpr bool is_real() const { return is_complex() && im_i == 0.0; }
  std::complex<double> as_complex() const { return {re, im_i}; }

  friend constexpr bool operator==(const Bicomplex&, const Bicomplex&) = default;
};

constexpr Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
  return {a.re + b.re, a.im_i + b.im_i, a.im_j + b.im_j, a.im_ij + b.im_ij};
}
constexpr Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
  return {a.re - b.re, a.im_i - b.im_i, a.im_j - b.im_j, a.im_ij - b.im_ij};
}
constexpr Bicomplex operator-(const Bicomplex& a) { return {-a.re, -a.im_i, -a.im_j, -a.im_ij}; }
constexpr Bicomplex operator*(double s, const Bicomplex& a) { return {s * a.re, s * a.im_i, s * a.im_j, s * a.im_ij}; }
constexpr Bicomplex operator*(const Bicomplex& a, double s) { return s * a; }

constexpr Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
  return {
      a.re * b.re - a.im_i * b.im_i - a.im_j * b.im_j + a.im_ij * b.im_ij,
      a.re * b.im_i + a.im_i * b.re - a.im_j * b.im_ij - a.im_ij * b.im_j,
      a.re * b.im_j + a.im_j * b.re - a.im_i * b.im_ij - a.im_ij * b.im_i,
      a.re * b.im_ij + a.im_ij * b.re + a.im_i * b.im_j + a.im_j * b.im_i,
  };
}

inline Bicomplex& operator+=(Bicomplex& a, const Bicomplex& b) { return a = a + b; }
inline Bicomplex& operator-=(Bicomplex& a, const Bicomplex& b) { return a = a - b; }
inline Bicomplex& operator*=(Bicomplex& a, const Bicomplex& b) { return a = a * b; }

/// Negates i and ij, fixes 1 and j.
constexpr Bicomplex conjugate(const Bicomplex& a) { return {a.re, -a.im_i, a.im_j, -a.im_ij}; }

/// Negates i and j, fixes 1 and ij.
constexpr Bicomplex reverse(const Bicomplex& a) { return {a.re, -a.im_i, -a.im_j, a.im_ij}; }

constexpr double squared_length(const Bicomplex& a) {
  return a.re * a.re + a.im_i * a.im_i + a.im_j * a.im_j + a.im_ij * a.im_ij;
}

/// Largest absolute component.
double max_abs(const Bicomplex& a);

/// The null-plane units o = (i + j)/2 and o-bar = (j - i)/2.
struct NullPlaneUnits {
  Bicomplex o;
  Bicomplex o_bar;
};
constexpr NullPlaneUnits null_plane_units() { return {{0.0, 0.5, 0.5, 0.0}, {0.0, -0.5, 0.5, 0.0}}; }

/// Coordinates along the idempotents e+ = (1 + ij)/2 and e- = (1 - ij)/2.
/// Both parts are complex numbers in the unit i; multiplication acts
/// componentwise on them.
struct IdempotentParts {
  std::complex<double> plus;
  std::complex<double> minus;
};

IdempotentParts split(const Bicomplex& a);
Bicomplex combine(const IdempotentParts& parts);

Bicomplex exp(const Bicomplex& a);

/// Multiplicative inverse; throws Error(singular) when a lies on a null line
/// (either idempotent part vanishes).
Bicomplex inverse(const Bicomplex& a, double threshold = 1e-14);

/// Base coordinates of the Hopf map together with the squared length of the
/// total-space point.
struct HopfTriple {
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;
  double len_sq = 0.0;
};

/// Reads xi3 + j xi1 off the conjugation product and |s|^2 - ij xi2 off the
/// reversion product. Throws Error(structure) when either product carries a
/// component outside its expected plane beyond `tol` (relative to |s|^2).
HopfTriple involution_projections(const Bicomplex& s, double tol = 1e-12);

}  // namespace holoconf
