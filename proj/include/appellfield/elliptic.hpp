// SPDX-License-Identifier: Apache-2.0
#pragma once

// Elliptic integrals in the parameter convention (m = k^2), evaluated through
// Carlson's symmetric forms with the duplication theorem.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>

#include "error.hpp"

namespace appellfield::elliptic {

namespace detail {

template <std::floating_point T>
constexpr T carlson_tol() {
  return std::numeric_limits<T>::epsilon();
}

template <std::floating_point T>
void require_finite(T v, const char* what) {
  if (!std::isfinite(v)) throw domain_error(what);
}

}  // namespace detail

// R_C(x, y); y < 0 returns the Cauchy principal value.
template <std::floating_point T>
T carlson_rc(T x, T y) {
  if (!(x >= 0) || !std::isfinite(x) || !std::isfinite(y) || y == 0)
    throw domain_error("carlson_rc: need x >= 0 and y != 0");
  if (y < 0) return std::sqrt(x / (x - y)) * carlson_rc(x - y, -y);
  const T y0 = y;
  T a = (x + 2 * y) / 3;
  const T a0 = a;
  T q = std::pow(3 * detail::carlson_tol<T>(), T(-1) / 8) * std::fabs(a0 - x);
  T scale = 1;
  while (q * scale >= std::fabs(a)) {
    const T lam = 2 * std::sqrt(x) * std::sqrt(y) + y;
    x = (x + lam) / 4;
    y = (y + lam) / 4;
    a = (a + lam) / 4;
    scale /= 4;
  }
  const T s = (y0 - a0) * scale / a;
  const T poly =
      1 + s * s * (T(3) / 10 + s * (T(1) / 7 + s * (T(3) / 8 + s * (T(9) / 22 + s * (T(159) / 208 + s * T(9) / 8)))));
  return poly / std::sqrt(a);
}

// R_F(x, y, z) for nonnegative arguments with at most one zero.
template <std::floating_point T>
T carlson_rf(T x, T y, T z) {
  detail::require_finite(x, "carlson_rf: non-finite argument");
  detail::require_finite(y, "carlson_rf: non-finite argument");
  detail::require_finite(z, "carlson_rf: non-finite argument");
  if (x < 0 || y < 0 || z < 0) throw domain_error("carlson_rf: negative argument");
  if ((x == 0) + (y == 0) + (z == 0) > 1) throw domain_error("carlson_rf: two or more zero arguments");
  const T x0 = x, y0 = y;
  T a = (x + y + z) / 3;
  const T a0 = a;
  T q = std::pow(3 * detail::carlson_tol<T>(), T(-1) / 6) *
        std::max({std::fabs(a0 - x), std::fabs(a0 - y), std::fabs(a0 - z)});
  T scale = 1;
  while (q * scale >= std::fabs(a)) {
    const T sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const T lam = sx * sy + sx * sz + sy * sz;
    x = (x + lam) / 4;
    y = (y + lam) / 4;
    z = (z + lam) / 4;
    a = (a + lam) / 4;
    scale /= 4;
  }
  const T X = (a0 - x0) * scale / a;
  const T Y = (a0 - y0) * scale / a;
  const T Z = -X - Y;
  const T e2 = X * Y - Z * Z;
  const T e3 = X * Y * Z;
  return (1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44) / std::sqrt(a);
}

// R_D(x, y, z) = R_J(x, y, z, z); z > 0 and at most one of x, y zero.
template <std::floating_point T>
T carlson_rd(T x, T y, T z) {
  detail::require_finite(x, "carlson_rd: non-finite argument");
  detail::require_finite(y, "carlson_rd: non-finite argument");
  detail::require_finite(z, "carlson_rd: non-finite argument");
  if (x < 0 || y < 0 || z <= 0) throw domain_error("carlson_rd: need x, y >= 0 and z > 0");
  if (x == 0 && y == 0) throw domain_error("carlson_rd: x and y both zero");
  const T x0 = x, y0 = y;
  T a = (x + y + 3 * z) / 5;
  const T a0 = a;
  T q = std::pow(detail::carlson_tol<T>() / 4, T(-1) / 6) *
        std::max({std::fabs(a0 - x), std::fabs(a0 - y), std::fabs(a0 - z)});
  T scale = 1;
  T sum = 0;
  while (q * scale >= std::fabs(a)) {
    const T sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const T lam = sx * sy + sx * sz + sy * sz;
    sum += scale / (sz * (z + lam));
    x = (x + lam) / 4;
    y = (y + lam) / 4;
    z = (z + lam) / 4;
    a = (a + lam) / 4;
    scale /= 4;
  }
  const T X = (a0 - x0) * scale / a;
  const T Y = (a0 - y0) * scale / a;
  const T Z = -(X + Y) / 3;
  const T xy = X * Y, z2 = Z * Z;
  const T e2 = xy - 6 * z2;
  const T e3 = (3 * xy - 8 * z2) * Z;
  const T e4 = 3 * (xy - z2) * z2;
  const T e5 = xy * Z * z2;
  const T poly = 1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88 - 3 * e4 / 22 - 9 * e2 * e3 / 52 + 3 * e5 / 26;
  return scale * poly / (a * std::sqrt(a)) + 3 * sum;
}

// R_J(x, y, z, p); p < 0 returns the Cauchy principal value.
template <std::floating_point T>
T carlson_rj(T x, T y, T z, T p) {
  detail::require_finite(x, "carlson_rj: non-finite argument");
  detail::require_finite(y, "carlson_rj: non-finite argument");
  detail::require_finite(z, "carlson_rj: non-finite argument");
  detail::require_finite(p, "carlson_rj: non-finite argument");
  if (x < 0 || y < 0 || z < 0) throw domain_error("carlson_rj: negative argument");
  if ((x == 0) + (y == 0) + (z == 0) > 1) throw domain_error("carlson_rj: two or more zero arguments");
  if (p == 0) throw domain_error("carlson_rj: p must be nonzero");
  if (p < 0) {
    T v[3] = {x, y, z};
    std::sort(v, v + 3);
    const T xt = v[0], yt = v[1], zt = v[2];
    const T a = 1 / (yt - p);
    const T b = a * (zt - yt) * (yt - xt);
    const T pt = yt + b;
    const T rho = xt * zt / yt;
    const T tau = p * pt / yt;
    return a * (b * carlson_rj(xt, yt, zt, pt) + 3 * (carlson_rc(rho, tau) - carlson_rf(xt, yt, zt)));
  }
  const T x0 = x, y0 = y, z0 = z;
  T a = (x + y + z + 2 * p) / 5;
  const T a0 = a;
  const T delta = (p - x) * (p - y) * (p - z);
  T q = std::pow(detail::carlson_tol<T>() / 4, T(-1) / 6) *
        std::max({std::fabs(a0 - x), std::fabs(a0 - y), std::fabs(a0 - z), std::fabs(a0 - p)});
  T scale = 1;
  T sum = 0;
  T scale3 = 1;
  while (q * scale >= std::fabs(a)) {
    const T sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z), sp = std::sqrt(p);
    const T lam = sx * sy + sx * sz + sy * sz;
    const T d = (sp + sx) * (sp + sy) * (sp + sz);
    const T e = scale3 * delta / (d * d);
    sum += scale / d * carlson_rc(T(1), 1 + e);
    x = (x + lam) / 4;
    y = (y + lam) / 4;
    z = (z + lam) / 4;
    p = (p + lam) / 4;
    a = (a + lam) / 4;
    scale /= 4;
    scale3 /= 64;
  }
  const T X = (a0 - x0) * scale / a;
  const T Y = (a0 - y0) * scale / a;
  const T Z = (a0 - z0) * scale / a;
  const T P = (-X - Y - Z) / 2;
  const T e2 = X * Y + X * Z + Y * Z - 3 * P * P;
  const T e3 = X * Y * Z + 2 * e2 * P + 4 * P * P * P;
  const T e4 = (2 * X * Y * Z + e2 * P + 3 * P * P * P) * P;
  const T e5 = X * Y * Z * P * P;
  const T poly = 1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88 - 3 * e4 / 22 - 9 * e2 * e3 / 52 + 3 * e5 / 26;
  return scale * poly / (a * std::sqrt(a)) + 6 * sum;
}

// (characteristic n, amplitude phi, parameter m).
template <std::floating_point T = double>
struct EllipticArgs {
  T n = 0;
  T phi = 0;
  T m = 0;

  void validate() const {
    if (!std::isfinite(n) || !std::isfinite(phi) || !std::isfinite(m))
      throw domain_error("EllipticArgs: non-finite field");
  }
};

// K(m) = F(pi/2 | m); any m < 1, including negative m.
template <std::floating_point T>
T comp_k(T m) {
  if (!std::isfinite(m)) throw domain_error("comp_k: non-finite parameter");
  if (m >= 1) throw domain_error("comp_k: diverges for m >= 1");
  return carlson_rf(T(0), 1 - m, T(1));
}

// E(m) = E(pi/2 | m); m <= 1.
template <std::floating_point T>
T comp_e(T m) {
  if (!std::isfinite(m)) throw domain_error("comp_e: non-finite parameter");
  if (m > 1) throw domain_error("comp_e: parameter must be <= 1");
  if (m == 1) return T(1);
  const T y = 1 - m;
  return carlson_rf(T(0), y, T(1)) - m / 3 * carlson_rd(T(0), y, T(1));
}

namespace detail {

// Pi(n | m) with 1 - n supplied separately so callers can keep it exact.
template <std::floating_point T>
T comp_pi_from_complement(T n, T one_minus_n, T m) {
  if (!std::isfinite(n) || !std::isfinite(one_minus_n) || !std::isfinite(m))
    throw domain_error("comp_pi: non-finite argument");
  if (m >= 1) throw domain_error("comp_pi: diverges for m >= 1");
  if (one_minus_n <= T(1e-12)) throw singular_characteristic_error("comp_pi: characteristic n >= 1");
  const T y = 1 - m;
  return carlson_rf(T(0), y, T(1)) + n / 3 * carlson_rj(T(0), y, T(1), one_minus_n);
}

// Complete integrals with 1 - m (and 1 - n) supplied exactly.  Unlike the
// public forms these accept any 1 - n > 0, for callers whose prefactors
// cancel the growth of Pi as n -> 1.
template <std::floating_point T>
T comp_k_c(T one_minus_m) {
  if (!(one_minus_m > 0)) throw domain_error("comp_k: diverges for m >= 1");
  return carlson_rf(T(0), one_minus_m, T(1));
}

template <std::floating_point T>
T comp_e_c(T m, T one_minus_m) {
  if (one_minus_m == 0) return T(1);
  return carlson_rf(T(0), one_minus_m, T(1)) - m / 3 * carlson_rd(T(0), one_minus_m, T(1));
}

template <std::floating_point T>
T comp_pi_c(T n, T one_minus_n, T one_minus_m) {
  if (!(one_minus_n > 0)) throw singular_characteristic_error("comp_pi: characteristic n >= 1");
  if (!(one_minus_m > 0)) throw domain_error("comp_pi: diverges for m >= 1");
  return carlson_rf(T(0), one_minus_m, T(1)) + n / 3 * carlson_rj(T(0), one_minus_m, T(1), one_minus_n);
}

// Split phi = k*pi + r with |r| <= pi/2; returns r and writes k.
template <std::floating_point T>
T reduce_amplitude(T phi, long& k) {
  const T pi = std::numbers::pi_v<T>;
  k = static_cast<long>(std::floor(phi / pi + T(0.5)));
  T r = phi - static_cast<T>(k) * pi;
  if (r > pi / 2) {
    r -= pi;
    ++k;
  } else if (r < -pi / 2) {
    r += pi;
    --k;
  }
  return r;
}

template <std::floating_point T>
T ellip_f_nonneg(T phi, T m) {
  long k = 0;
  const T r = reduce_amplitude(phi, k);
  const T s = std::sin(r), c = std::cos(r);
  const T ms2 = m * s * s;
  if (ms2 > 1) throw domain_error("ellip_f: m sin^2(phi) > 1");
  T value = 0;
  if (r != 0) {
    if (ms2 == 1 && c * c == 0) throw domain_error("ellip_f: diverges at m sin^2(phi) = 1");
    value = s * carlson_rf(c * c, 1 - ms2, T(1));
  }
  if (k != 0) value += 2 * static_cast<T>(k) * comp_k(m);
  return value;
}

template <std::floating_point T>
T ellip_e_nonneg(T phi, T m) {
  long k = 0;
  const T r = reduce_amplitude(phi, k);
  const T s = std::sin(r), c = std::cos(r);
  const T ms2 = m * s * s;
  if (ms2 > 1) throw domain_error("ellip_e: m sin^2(phi) > 1");
  T value = 0;
  if (r != 0) {
    const T x = c * c, y = 1 - ms2;
    if (x == 0 && y == 0) {
      value = s;  // E(pi/2 | 1) = 1
    } else {
      value = s * carlson_rf(x, y, T(1)) - m / 3 * s * s * s * carlson_rd(x, y, T(1));
    }
  }
  if (k != 0) value += 2 * static_cast<T>(k) * comp_e(m);
  return value;
}

template <std::floating_point T>
T ellip_pi_nonneg(T n, T phi, T m) {
  long k = 0;
  const T r = reduce_amplitude(phi, k);
  const T s = std::sin(r), c = std::cos(r);
  const T s2 = s * s;
  const T ms2 = m * s2;
  if (ms2 > 1) throw domain_error("ellip_pi: m sin^2(phi) > 1");
  const T limit = k != 0 ? T(1) : s2;
  if (n * limit >= 1 - T(1e-12)) throw singular_characteristic_error("ellip_pi: n sin^2(phi) >= 1");
  T value = 0;
  if (r != 0) {
    const T x = c * c, y = 1 - ms2;
    if (x == 0 && y == 0) throw domain_error("ellip_pi: diverges at m sin^2(phi) = 1");
    value = s * carlson_rf(x, y, T(1)) + n / 3 * s * s2 * carlson_rj(x, y, T(1), 1 - n * s2);
  }
  if (k != 0) value += 2 * static_cast<T>(k) * comp_pi_from_complement(n, 1 - n, m);
  return value;
}

}  // namespace detail

// F(phi | m), odd in phi.
template <std::floating_point T>
T ellip_f(T phi, T m) {
  if (!std::isfinite(phi) || !std::isfinite(m)) throw domain_error("ellip_f: non-finite argument");
  const T v = detail::ellip_f_nonneg(std::fabs(phi), m);
  return std::signbit(phi) ? -v : v;
}

// E(phi | m), odd in phi.
template <std::floating_point T>
T ellip_e(T phi, T m) {
  if (!std::isfinite(phi) || !std::isfinite(m)) throw domain_error("ellip_e: non-finite argument");
  const T v = detail::ellip_e_nonneg(std::fabs(phi), m);
  return std::signbit(phi) ? -v : v;
}

// Pi(n; phi | m), odd in phi.  Rejects n sin^2(phi) >= 1 - 1e-12.
template <std::floating_point T>
T ellip_pi(T n, T phi, T m) {
  if (!std::isfinite(n) || !std::isfinite(phi) || !std::isfinite(m))
    throw domain_error("ellip_pi: non-finite argument");
  const T v = detail::ellip_pi_nonneg(n, std::fabs(phi), m);
  return std::signbit(phi) ? -v : v;
}

// Pi(n | m); n < 1, m < 1.
template <std::floating_point T>
T comp_pi(T n, T m) {
  return detail::comp_pi_from_complement(n, 1 - n, m);
}

template <std::floating_point T>
T ellip_f(const EllipticArgs<T>& a) {
  a.validate();
  return ellip_f(a.phi, a.m);
}

template <std::floating_point T>
T ellip_e(const EllipticArgs<T>& a) {
  a.validate();
  return ellip_e(a.phi, a.m);
}

template <std::floating_point T>
T ellip_pi(const EllipticArgs<T>& a) {
  a.validate();
  return ellip_pi(a.n, a.phi, a.m);
}

}  // namespace appellfield::elliptic
