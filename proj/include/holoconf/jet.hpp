// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace holoconf {

using cplx = std::complex<double>;

/// Truncated Taylor polynomial in two variables with complex coefficients.
///
/// A jet of order N at a point y carries f(y + h) = sum c_ab h0^a h1^b for
/// a + b <= N. Arithmetic and the elementary functions below propagate the
/// expansion exactly up to the truncation order, so first and second
/// partial derivatives come out without finite-difference error. Order 1 is
/// a dual number, order 2 a hyper-dual number; bracket nesting uses higher
/// orders.
///
/// Binary operations truncate to the smaller order. Scalars behave as
/// constants of unlimited order.
class Jet {
 public:
  static constexpr int kMaxOrder = 4;
  static constexpr std::size_t kSize = (kMaxOrder + 1) * (kMaxOrder + 2) / 2;

  Jet() = default;
  Jet(cplx value, int order);  // NOLINT: constant jet

  /// The coordinate function y_var expanded around `value`.
  static Jet variable(cplx value, int var, int order);

  int order() const noexcept { return order_; }
  cplx value() const noexcept { return c_[0]; }

  /// Taylor coefficient of h0^a h1^b.
  cplx coeff(int a, int b) const;
  cplx& coeff(int a, int b);

  /// First partial derivative at the expansion point.
  cplx d(int var) const;
  /// Second partial derivative at the expansion point.
  cplx d2(int var_a, int var_b) const;

  /// Jet of the partial derivative, one order lower.
  Jet partial(int var) const;

  /// Reduce the truncation order.
  Jet truncated(int order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(cplx s);
  Jet& operator-=(cplx s);
  Jet& operator*=(cplx s);
  Jet& operator/=(cplx s);

  Jet operator-() const;

  static constexpr std::size_t index(int a, int b) {
    const int deg = a + b;
    return static_cast<std::size_t>(deg * (deg + 1) / 2 + b);
  }

 private:
  friend Jet compose(const Jet& x, std::span<const cplx> taylor);

  std::array<cplx, kSize> c_{};
  int order_ = kMaxOrder;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);

Jet operator+(Jet a, cplx s);
Jet operator+(cplx s, Jet a);
Jet operator-(Jet a, cplx s);
Jet operator-(cplx s, const Jet& a);
Jet operator*(Jet a, cplx s);
Jet operator*(cplx s, Jet a);
Jet operator/(Jet a, cplx s);
Jet operator/(cplx s, const Jet& a);

inline Jet operator+(Jet a, double s) { return std::move(a) + cplx(s); }
inline Jet operator+(double s, Jet a) { return std::move(a) + cplx(s); }
inline Jet operator-(Jet a, double s) { return std::move(a) - cplx(s); }
inline Jet operator-(double s, const Jet& a) { return cplx(s) - a; }
inline Jet operator*(Jet a, double s) { return std::move(a) * cplx(s); }
inline Jet operator*(double s, Jet a) { return std::move(a) * cplx(s); }
inline Jet operator/(Jet a, double s) { return std::move(a) / cplx(s); }
inline Jet operator/(double s, const Jet& a) { return cplx(s) / a; }

/// f(x) for the scalar function whose Taylor coefficients at x.value() are
/// `taylor` (taylor[k] = f^(k)(x0) / k!). Extra coefficients are ignored.
Jet compose(const Jet& x, std::span<const cplx> taylor);

Jet exp(const Jet& x);
/// Principal-branch logarithm.
Jet log(const Jet& x);
Jet sin(const Jet& x);
Jet cos(const Jet& x);
Jet tan(const Jet& x);
Jet sqrt(const Jet& x);
Jet reciprocal(const Jet& x);
Jet pow(const Jet& x, int n);
/// Principal-branch power x^alpha.
Jet pow(const Jet& x, cplx alpha);

}  // namespace holoconf
