// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "holoconf/jet.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

namespace holoconf {

namespace {

using Taylor = std::array<cplx, Jet::kMaxOrder + 1>;

double inverse_factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return 1.0 / f;
}

}  // namespace

Jet::Jet(cplx value, int order) : order_(std::clamp(order, 0, kMaxOrder)) { c_[0] = value; }

Jet Jet::variable(cplx value, int var, int order) {
  assert(var == 0 || var == 1);
  Jet j(value, order);
  if (j.order_ >= 1) j.c_[var == 0 ? index(1, 0) : index(0, 1)] = 1.0;
  return j;
}

cplx Jet::coeff(int a, int b) const {
  if (a < 0 || b < 0 || a + b > order_) return 0.0;
  return c_[index(a, b)];
}

cplx& Jet::coeff(int a, int b) {
  assert(a >= 0 && b >= 0 && a + b <= order_);
  return c_[index(a, b)];
}

cplx Jet::d(int var) const { return var == 0 ? coeff(1, 0) : coeff(0, 1); }

cplx Jet::d2(int var_a, int var_b) const {
  if (var_a != var_b) return coeff(1, 1);
  return 2.0 * (var_a == 0 ? coeff(2, 0) : coeff(0, 2));
}

Jet Jet::partial(int var) const {
  Jet out(0.0, std::max(order_ - 1, 0));
  if (order_ == 0) return out;
  for (int deg = 0; deg < order_; ++deg) {
    for (int b = 0; b <= deg; ++b) {
      const int a = deg - b;
      out.c_[index(a, b)] = var == 0 ? static_cast<double>(a + 1) * c_[index(a + 1, b)]
                                     : static_cast<double>(b + 1) * c_[index(a, b + 1)];
    }
  }
  return out;
}

Jet Jet::truncated(int order) const {
  Jet out = *this;
  if (order >= order_) return out;
  out.order_ = std::max(order, 0);
  for (std::size_t i = index(0, out.order_ + 1); i < kSize; ++i) out.c_[i] = 0.0;
  return out;
}

Jet& Jet::operator+=(const Jet& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  const Jet& rhs = o.order_ > order_ ? o.truncated(order_) : o;
  for (std::size_t i = 0; i < kSize; ++i) c_[i] += rhs.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) { return *this += -o; }

Jet& Jet::operator*=(const Jet& o) {
  const int n = std::min(order_, o.order_);
  Jet out(0.0, n);
  for (int d1 = 0; d1 <= n; ++d1) {
    for (int b1 = 0; b1 <= d1; ++b1) {
      const cplx x = c_[index(d1 - b1, b1)];
      if (x == 0.0) continue;
      for (int d2 = 0; d1 + d2 <= n; ++d2) {
        for (int b2 = 0; b2 <= d2; ++b2) {
          out.c_[index(d1 - b1 + d2 - b2, b1 + b2)] += x * o.c_[index(d2 - b2, b2)];
        }
      }
    }
  }
  *this = out;
  return *this;
}

Jet& Jet::operator/=(const Jet& o) { return *this *= reciprocal(o); }

Jet& Jet::operator+=(cplx s) {
  c_[0] += s;
  return *this;
}
Jet& Jet::operator-=(cplx s) {
  c_[0] -= s;
  return *this;
}
Jet& Jet::operator*=(cplx s) {
  for (auto& v : c_) v *= s;
  return *this;
}
Jet& Jet::operator/=(cplx s) {
  for (auto& v : c_) v /= s;
  return *this;
}

Jet Jet::operator-() const {
  Jet out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(const Jet& a, const Jet& b) {
  Jet out = a;
  return out *= b;
}
Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet operator+(Jet a, cplx s) { return a += s; }
Jet operator+(cplx s, Jet a) { return a += s; }
Jet operator-(Jet a, cplx s) { return a -= s; }
Jet operator-(cplx s, const Jet& a) { return -a + s; }
Jet operator*(Jet a, cplx s) { return a *= s; }
Jet operator*(cplx s, Jet a) { return a *= s; }
Jet operator/(Jet a, cplx s) { return a /= s; }
Jet operator/(cplx s, const Jet& a) { return reciprocal(a) * s; }

Jet compose(const Jet& x, std::span<const cplx> taylor) {
  const int n = x.order();
  Jet h = x;
  h.c_[0] = 0.0;
  const auto top = std::min<std::size_t>(static_cast<std::size_t>(n), taylor.size() - 1);
  Jet r(taylor[top], n);
  for (auto k = static_cast<std::ptrdiff_t>(top) - 1; k >= 0; --k) {
    r *= h;
    r += taylor[static_cast<std::size_t>(k)];
  }
  return r;
}

Jet exp(const Jet& x) {
  Taylor t;
  const cplx e = std::exp(x.value());
  for (int k = 0; k <= Jet::kMaxOrder; ++k) t[k] = e * inverse_factorial(k);
  return compose(x, t);
}

Jet log(const Jet& x) {
  Taylor t;
  const cplx a = x.value();
  t[0] = std::log(a);
  cplx ak = 1.0;
  for (int k = 1; k <= Jet::kMaxOrder; ++k) {
    ak *= a;
    t[k] = (k % 2 == 1 ? 1.0 : -1.0) / (static_cast<double>(k) * ak);
  }
  return compose(x, t);
}

Jet sin(const Jet& x) {
  Taylor t;
  const cplx s = std::sin(x.value());
  const cplx c = std::cos(x.value());
  const cplx cycle[4] = {s, c, -s, -c};
  for (int k = 0; k <= Jet::kMaxOrder; ++k) t[k] = cycle[k % 4] * inverse_factorial(k);
  return compose(x, t);
}

Jet cos(const Jet& x) {
  Taylor t;
  const cplx s = std::sin(x.value());
  const cplx c = std::cos(x.value());
  const cplx cycle[4] = {c, -s, -c, s};
  for (int k = 0; k <= Jet::kMaxOrder; ++k) t[k] = cycle[k % 4] * inverse_factorial(k);
  return compose(x, t);
}

Jet tan(const Jet& x) { return sin(x) / cos(x); }

Jet reciprocal(const Jet& x) {
  Taylor t;
  const cplx inv = 1.0 / x.value();
  cplx p = inv;
  for (int k = 0; k <= Jet::kMaxOrder; ++k) {
    t[k] = (k % 2 == 0 ? 1.0 : -1.0) * p;
    p *= inv;
  }
  return compose(x, t);
}

Jet pow(const Jet& x, cplx alpha) {
  Taylor t;
  const cplx a = x.value();
  cplx binom = 1.0;
  cplx ak = std::pow(a, alpha);
  for (int k = 0; k <= Jet::kMaxOrder; ++k) {
    t[k] = binom * ak;
    binom *= (alpha - static_cast<double>(k)) / static_cast<double>(k + 1);
    ak /= a;
  }
  return compose(x, t);
}

Jet sqrt(const Jet& x) { return pow(x, cplx(0.5)); }

Jet pow(const Jet& x, int n) {
  if (n < 0) return reciprocal(pow(x, -n));
  Jet out(1.0, x.order());
  Jet base = x;
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
    if (e & 1u) out *= base;
    base *= base;
  }
  return out;
}

}  // namespace holoconf
