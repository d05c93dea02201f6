// SPDX-License-Identifier: Apache-2.0
#pragma once

// Jacobi amplitude and elliptic functions (descending Landen / AGM), the
// Jacobi zeta function, scaled theta functions, and the integral of Z * sc.

#include <array>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>

#include "elliptic.hpp"
#include "error.hpp"
#include "hypergeom.hpp"
#include "series_control.hpp"

namespace appellfield::jacobi {

// (u, m) with m in [0, 1).
template <std::floating_point T = double>
struct JacobiPoint {
  T u = 0;
  T m = 0;

  void validate() const {
    if (!std::isfinite(u) || !std::isfinite(m)) throw domain_error("JacobiPoint: non-finite field");
    if (m < 0 || m >= 1) throw domain_error("JacobiPoint: m must lie in [0, 1)");
  }
};

namespace detail {

template <std::floating_point T>
void check_parameter(T u, T m, const char* who) {
  if (!std::isfinite(u) || !std::isfinite(m)) throw domain_error(std::string(who) + ": non-finite argument");
  if (m < 0 || m >= 1) throw domain_error(std::string(who) + ": m must lie in [0, 1)");
}

}  // namespace detail

// am(u | m) by the arithmetic-geometric mean (A&S 16.4).
template <std::floating_point T>
T jacobi_am(T u, T m) {
  detail::check_parameter(u, m, "jacobi_am");
  if (m == 0) return u;
  constexpr int max_steps = 64;
  std::array<T, max_steps + 1> a{}, c{};
  a[0] = 1;
  T b = std::sqrt(1 - m);
  c[0] = std::sqrt(m);
  int n = 0;
  while (std::fabs(c[n]) > std::numeric_limits<T>::epsilon() * a[n] && n < max_steps) {
    a[n + 1] = (a[n] + b) / 2;
    c[n + 1] = (a[n] - b) / 2;
    b = std::sqrt(a[n] * b);
    ++n;
  }
  T phi = std::ldexp(a[n] * u, n);
  for (int i = n; i > 0; --i) phi = (phi + std::asin(c[i] / a[i] * std::sin(phi))) / 2;
  return phi;
}

template <std::floating_point T>
T jacobi_sn(T u, T m) {
  return std::sin(jacobi_am(u, m));
}

template <std::floating_point T>
T jacobi_cn(T u, T m) {
  return std::cos(jacobi_am(u, m));
}

template <std::floating_point T>
T jacobi_dn(T u, T m) {
  const T s = jacobi_sn(u, m);
  return std::sqrt(1 - m * s * s);
}

// Distance from u to the nearest odd multiple of K(m).
template <std::floating_point T>
T distance_to_pole(T u, T m) {
  const T kk = elliptic::comp_k(m);
  const T k = std::round((u / kk - 1) / 2);
  return std::fabs(u - (2 * k + 1) * kk);
}

// sc(u | m) = sn / cn; pole error within 1e-12 of u = (2k+1) K(m).
template <std::floating_point T>
T jacobi_sc(T u, T m) {
  detail::check_parameter(u, m, "jacobi_sc");
  if (distance_to_pole(u, m) < T(1e-12)) throw pole_error("jacobi_sc: u is an odd multiple of K(m)");
  return std::tan(jacobi_am(u, m));
}

// Z(u | m) = E(am u | m) - u E(m) / K(m); u is first reduced modulo 2K.
template <std::floating_point T>
T jacobi_zeta(T u, T m) {
  detail::check_parameter(u, m, "jacobi_zeta");
  if (m == 0) return 0;
  const T kk = elliptic::comp_k(m);
  const T ee = elliptic::comp_e(m);
  const T k = std::round(u / (2 * kk));
  const T ur = u - 2 * k * kk;
  return elliptic::ellip_e(jacobi_am(ur, m), m) - ur * ee / kk;
}

// Nome q = exp(-pi K(1-m) / K(m)).
template <std::floating_point T>
T nome(T m) {
  if (!(m > 0 && m < 1)) throw domain_error("nome: m must lie in (0, 1)");
  return std::exp(-std::numbers::pi_v<T> * elliptic::comp_k(1 - m) / elliptic::comp_k(m));
}

// Scaled theta function Theta_i(u | m) = theta_i(pi u / (2K), q), i = 1..4 (A&S 16.27).
template <std::floating_point T>
T theta(int i, T u, T m, const SeriesControl& ctl = {}) {
  ctl.validate();
  if (i < 1 || i > 4) throw domain_error("theta: index must be 1, 2, 3 or 4");
  if (!std::isfinite(u) || !std::isfinite(m)) throw domain_error("theta: non-finite argument");
  const T q = nome(m);
  const T v = std::numbers::pi_v<T> * u / (2 * elliptic::comp_k(m));
  const T lq = std::log(q);
  const T tol = static_cast<T>(ctl.rel_tol);
  T sum = 0;
  if (i == 1 || i == 2) {
    for (long n = 0;; ++n) {
      if (n >= ctl.max_terms) throw convergence_error("theta: term cap reached");
      const T w = std::exp(lq * static_cast<T>(n * (n + 1)));
      const T arg = static_cast<T>(2 * n + 1) * v;
      const T term = i == 1 ? ((n % 2) ? -w : w) * std::sin(arg) : w * std::cos(arg);
      sum += term;
      const T next = std::exp(lq * static_cast<T>((n + 1) * (n + 2)));
      if (next / (1 - q) <= tol * std::fabs(sum)) break;
    }
    return 2 * std::pow(q, T(0.25)) * sum;
  }
  sum = 1;
  for (long n = 1;; ++n) {
    if (n >= ctl.max_terms) throw convergence_error("theta: term cap reached");
    const T w = std::exp(lq * static_cast<T>(n * n));
    const T term = (i == 4 && (n % 2)) ? -w : w;
    sum += 2 * term * std::cos(2 * static_cast<T>(n) * v);
    const T next = std::exp(lq * static_cast<T>((n + 1) * (n + 1)));
    if (2 * next / (1 - q) <= tol * std::fabs(sum)) break;
  }
  return sum;
}

// Jump of the Z*sc closed form across u = (2n+1) K(m): pi^2 / (2 K(m) sqrt(1-m)).
inline double int_z_sc_jump(double m) {
  if (!(m > 0 && m < 1)) throw domain_error("int_z_sc_jump: m must lie in (0, 1)");
  return std::numbers::pi * std::numbers::pi / (2 * elliptic::comp_k(m) * std::sqrt(1 - m));
}

// Branch index n with (2n-1) K < u < (2n+1) K; adding n * jump to the closed
// form gives the continuous antiderivative vanishing at u = 0.
inline long int_z_sc_branch(double u, double m) {
  detail::check_parameter(u, m, "int_z_sc_branch");
  const double kk = elliptic::comp_k(m);
  return static_cast<long>(std::floor((u + kk) / (2 * kk)));
}

// int_0^u Z(t|m) sc(t|m) dt via -am(u) + pi sc(u) / (2K) F2(1/2; 1/2, 1; 1, 3/2; m, (m-1) sc^2(u)),
// plus branch * jump.  Branch 0 is exact on -K < u < K.
inline double int_z_sc(double u, double m, long branch, const SeriesControl& ctl = {}) {
  ctl.validate();
  detail::check_parameter(u, m, "int_z_sc");
  if (m == 0) throw domain_error("int_z_sc: m must lie in (0, 1)");
  if (distance_to_pole(u, m) < 1e-12) throw pole_error("int_z_sc: u is an odd multiple of K(m)");
  const double am = jacobi_am(u, m);
  const double sc = std::tan(am);
  const double kk = elliptic::comp_k(m);
  const double f2 = hypergeom::detail::appell_f2_half_column(m, (m - 1) * sc * sc, ctl);
  return -am + std::numbers::pi * sc / (2 * kk) * f2 + static_cast<double>(branch) * int_z_sc_jump(m);
}

}  // namespace appellfield::jacobi
