// SPDX-License-Identifier: Apache-2.0
#pragma once

// Pochhammer symbol, Gauss 2F1, generalized pFq, Appell F1/F2 double series,
// and the integral I_hyg(m, A; theta) = int_0^theta atanh(A / sqrt(1 - m sin^2(t/2))) dt
// together with its alternative series and parameter derivatives.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "detail/gauss_legendre.hpp"
#include "elliptic.hpp"
#include "error.hpp"
#include "series_control.hpp"

namespace appellfield::hypergeom {

// Rising factorial (x)_k = x (x+1) ... (x+k-1).
template <std::floating_point T>
T pochhammer(T x, unsigned k) {
  T p = 1;
  for (unsigned i = 0; i < k; ++i) p *= x + static_cast<T>(i);
  return p;
}

namespace detail {

inline bool nonpositive_integer(double c) { return c <= 0 && c == std::floor(c); }

inline double sgn(double v) { return (v > 0) - (v < 0); }

// Remainder bound for a series whose term ratio is eventually below r.
inline bool tail_small(double term, double r, double sum, double rel_tol) {
  if (term == 0) return true;
  if (!(r < 1)) return false;
  return std::fabs(term) * r / (1 - r) <= rel_tol * std::fabs(sum);
}

// Sum term(j, l) over anti-diagonals j + l = N.  lstep(N, j) maps term(j, N-1-j)
// to term(j, N-j); jstep(N) maps term(N-1, 0) to term(N, 0).  sigma bounds the
// asymptotic ratio between consecutive diagonals.
template <class LStep, class JStep>
double antidiagonal_sum(LStep lstep, JStep jstep, double sigma, const SeriesControl& ctl, const char* who) {
  if (!(sigma < 1)) throw convergence_error(std::string(who) + ": outside the convergence region");
  if (sigma > 0) {
    const double need = std::log(ctl.rel_tol * (1 - sigma)) / std::log(sigma);
    if (need > static_cast<double>(ctl.max_terms))
      throw convergence_error(std::string(who) + ": too close to the convergence boundary for max_terms");
  }
  const double tail = 1 / (1 - sigma);
  std::vector<double> d{1.0}, nd;
  double sum = 1.0;
  int quiet = 0;
  for (long n = 1;; ++n) {
    if (n > ctl.max_terms) throw convergence_error(std::string(who) + ": term cap reached");
    nd.assign(static_cast<std::size_t>(n) + 1, 0.0);
    double diag = 0, mag = 0;
    for (long j = 0; j < n; ++j) {
      const double prev = d[static_cast<std::size_t>(j)];
      if (prev != 0) nd[static_cast<std::size_t>(j)] = prev * lstep(n, j);
    }
    if (d[static_cast<std::size_t>(n - 1)] != 0) nd[static_cast<std::size_t>(n)] = d[static_cast<std::size_t>(n - 1)] * jstep(n);
    for (double v : nd) {
      diag += v;
      mag += std::fabs(v);
    }
    sum += diag;
    if (mag == 0) break;
    if (mag * tail <= ctl.rel_tol * std::fabs(sum)) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    d.swap(nd);
  }
  return sum;
}

// 2F1(1/2, 1; 3/2; y) for y < 1.
inline double atanh_ratio(double y) {
  if (y == 0) return 1.0;
  if (y > 0) {
    const double r = std::sqrt(y);
    return std::atanh(r) / r;
  }
  const double r = std::sqrt(-y);
  return std::atan(r) / r;
}

}  // namespace detail

// Gauss hypergeometric series; x < -1/2 goes through the Pfaff transformation.
inline double gauss_2f1(double a, double b, double c, double x, const SeriesControl& ctl = {}) {
  ctl.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(x))
    throw domain_error("gauss_2f1: non-finite argument");
  if (detail::nonpositive_integer(c)) throw domain_error("gauss_2f1: c is a nonpositive integer");
  if (x >= 1) throw convergence_error("gauss_2f1: series diverges for x >= 1");
  if (x < -0.5) {
    const double w = x / (x - 1);
    return std::pow(1 - x, -a) * gauss_2f1(a, c - b, c, w, ctl);
  }
  double term = 1, sum = 1;
  for (long n = 0;; ++n) {
    if (n >= ctl.max_terms) throw convergence_error("gauss_2f1: term cap reached");
    const double ratio = (a + n) * (b + n) / ((c + n) * (n + 1));
    term *= ratio * x;
    sum += term;
    if (term == 0) break;
    const double r = std::max(std::fabs(ratio * x), std::fabs(x));
    if (detail::tail_small(term, r, sum, ctl.rel_tol)) break;
  }
  return sum;
}

// Generalized hypergeometric series pFq for |x| < 1.
inline double pfq(std::span<const double> a, std::span<const double> b, double x, const SeriesControl& ctl = {}) {
  ctl.validate();
  for (double v : b)
    if (detail::nonpositive_integer(v)) throw domain_error("pfq: lower parameter is a nonpositive integer");
  if (!std::isfinite(x)) throw domain_error("pfq: non-finite argument");
  if (a.size() > b.size() + 1) throw convergence_error("pfq: series diverges for p > q + 1");
  if (a.size() == b.size() + 1 && !(std::fabs(x) < 1)) throw convergence_error("pfq: series diverges for |x| >= 1");
  double term = 1, sum = 1;
  for (long n = 0;; ++n) {
    if (n >= ctl.max_terms) throw convergence_error("pfq: term cap reached");
    double ratio = 1.0 / (n + 1);
    for (double v : a) ratio *= v + n;
    for (double v : b) ratio /= v + n;
    term *= ratio * x;
    sum += term;
    if (term == 0) break;
    const double limit = a.size() == b.size() + 1 ? std::fabs(x) : 0.0;
    if (detail::tail_small(term, std::max(std::fabs(ratio * x), limit), sum, ctl.rel_tol)) break;
  }
  return sum;
}

inline double pfq_4f3(double a1, double a2, double a3, double a4, double b1, double b2, double b3, double x,
                      const SeriesControl& ctl = {}) {
  const double a[] = {a1, a2, a3, a4};
  const double b[] = {b1, b2, b3};
  return pfq(a, b, x, ctl);
}

namespace detail {

inline double appell_f2_direct(double al, double be, double be2, double ga, double ga2, double x, double y,
                               const SeriesControl& ctl) {
  auto lstep = [=](long n, long j) {
    const double l = static_cast<double>(n - j);
    return (al + n - 1) * (be2 + l - 1) * y / (l * (ga2 + l - 1));
  };
  auto jstep = [=](long n) { return (al + n - 1) * (be + n - 1) * x / (n * (ga + n - 1)); };
  return antidiagonal_sum(lstep, jstep, std::fabs(x) + std::fabs(y), ctl, "appell_f2");
}

}  // namespace detail

// Appell F2 double series summed along anti-diagonals.  When x or y is
// negative the Euler transformation in that variable is used if it lands
// deeper inside |x| + |y| < 1.
inline double appell_f2(double alpha, double beta, double beta2, double gamma, double gamma2, double x, double y,
                        const SeriesControl& ctl = {}) {
  ctl.validate();
  for (double v : {alpha, beta, beta2, gamma, gamma2, x, y})
    if (!std::isfinite(v)) throw domain_error("appell_f2: non-finite argument");
  if (detail::nonpositive_integer(gamma) || detail::nonpositive_integer(gamma2))
    throw domain_error("appell_f2: gamma or gamma' is a nonpositive integer");
  const double ax = std::fabs(x), ay = std::fabs(y);
  const double direct = ax + ay;
  const double via_y = y < 0 ? (ax + ay) / (1 + ay) : 2.0;
  const double via_x = x < 0 ? (ax + ay) / (1 + ax) : 2.0;
  const double best = std::min({direct, via_y, via_x});
  if (!(best < 1)) throw convergence_error("appell_f2: no transformation reaches |x| + |y| < 1");
  if (best == direct) return detail::appell_f2_direct(alpha, beta, beta2, gamma, gamma2, x, y, ctl);
  if (best == via_y)
    return std::pow(1 - y, -alpha) *
           detail::appell_f2_direct(alpha, beta, gamma2 - beta2, gamma, gamma2, x / (1 - y), y / (y - 1), ctl);
  return std::pow(1 - x, -alpha) *
         detail::appell_f2_direct(alpha, gamma - beta, beta2, gamma, gamma2, x / (x - 1), y / (1 - x), ctl);
}

// Appell F1 double series for |x|, |y| < 1.
inline double appell_f1(double alpha, double beta, double beta2, double gamma, double x, double y,
                        const SeriesControl& ctl = {}) {
  ctl.validate();
  for (double v : {alpha, beta, beta2, gamma, x, y})
    if (!std::isfinite(v)) throw domain_error("appell_f1: non-finite argument");
  if (detail::nonpositive_integer(gamma)) throw domain_error("appell_f1: gamma is a nonpositive integer");
  if (!(std::fabs(x) < 1 && std::fabs(y) < 1)) throw convergence_error("appell_f1: needs |x| < 1 and |y| < 1");
  auto lstep = [=](long n, long j) {
    const double l = static_cast<double>(n - j);
    return (alpha + n - 1) * (beta2 + l - 1) * y / ((gamma + n - 1) * l);
  };
  auto jstep = [=](long n) { return (alpha + n - 1) * (beta + n - 1) * x / ((gamma + n - 1) * n); };
  return detail::antidiagonal_sum(lstep, jstep, std::max(std::fabs(x), std::fabs(y)), ctl, "appell_f1");
}

// Arguments of I_hyg(m, A; theta).
struct IhygArgs {
  double m = 0;
  double A = 0;
  double theta = 0;

  void validate() const {
    if (!std::isfinite(m) || !std::isfinite(A) || !std::isfinite(theta))
      throw domain_error("IhygArgs: non-finite field");
    if (m < 0 || m > 1) throw domain_error("IhygArgs: m must lie in [0, 1]");
    if (!(std::fabs(A) < 1)) throw domain_error("IhygArgs: |A| must be < 1");
    if (std::fabs(theta) > std::numbers::pi) throw domain_error("IhygArgs: theta must lie in [-pi, pi]");
    if (A * A > 1 - m) throw domain_error("IhygArgs: A^2 must not exceed 1 - m");
  }
};

namespace detail {

// Width of the excluded band m + A^2 in (1 - boundary_gap, 1).
inline constexpr double boundary_gap = 1e-9;

// Integrand of I_hyg, written so that atanh keeps its accuracy as the
// argument approaches 1.  gap = 1 - m - A^2.
inline double ihyg_integrand(double m, double A, double gap, double t) {
  const double sn = std::sin(0.5 * t), cs = std::cos(0.5 * t);
  const double sd = std::sqrt(1 - m * sn * sn);
  const double a = std::fabs(A);
  const double x = a / sd;
  double v;
  if (x < 0.5) {
    v = std::atanh(x);
  } else {
    const double delta = (gap + m * cs * cs) / (sd * (sd + a));
    v = 0.5 * std::log((1 + x) / delta);
  }
  return A < 0 ? -v : v;
}

inline double ihyg_quadrature(double m, double A, double theta) {
  const double gap = (1 - m) - A * A;
  const double v = appellfield::detail::gl_adaptive([&](double t) { return ihyg_integrand(m, A, gap, t); }, 0.0,
                                                    std::fabs(theta), 1e-15, 1e-300);
  return theta < 0 ? -v : v;
}

// Column sums sharing G_j = 2F1(1/2 + j, 1; 3/2; a2), scaled by (1 - a2)^j:
//   f2   = F2(1/2; 1/2, 1; 1, 3/2; m, a2) = sum_j ((1/2)_j / j!)^2 m^j G_j
//   tail = sum_k (1)_k/(3/2)_k c^{2k} F2(1/2; 1+k, 1; 1, 3/2; m s^2, a2)
//        = sum_j (1/2)_j / j! (m s^2)^j G_j H_j,  H_j = 2F1(j+1, 1; 3/2; c^2)
// with s = |sin(theta/2)|, c = cos(theta/2).  0 <= a2 < 1 - m.
struct ColumnSums {
  double f2 = 0;
  double tail = 0;
};

inline ColumnSums ihyg_columns(double m, double a2, double s, double c, bool want_tail, const SeriesControl& ctl) {
  ColumnSums out;
  const double lam = 1 - a2;
  const double rho = m / lam;
  if (!(rho < 1)) throw boundary_error("I_hyg: m / (1 - A^2) must be < 1");
  want_tail = want_tail && c > 0;
  // G recurrence: a = 1/2 + j, b = 1, c = 3/2, z = a2.
  double g_prev = detail::atanh_ratio(a2);
  double g_cur = 1.0;
  // H recurrence: a = 1 + j, b = 1, c = 3/2, z = c^2, lambda_h = s^2.
  const double w = c * c, lam_h = s * s;
  double h_prev = 1.0, h_cur = 1.0;
  if (want_tail) {
    h_prev = c == 0 ? 1.0 : std::atan2(c, s) / (c * s);
    h_cur = 0.5 * (1 + h_prev);
  }
  double coef = 1.0;  // (1/2)_j / j!
  double pw = 1.0;    // rho^j
  double f2 = g_prev, tail = want_tail ? h_prev * g_prev : 0.0;
  const double tail_factor = 2 / (1 - rho);
  for (long j = 1;; ++j) {
    if (j >= ctl.max_terms) throw convergence_error("I_hyg: column series hit the term cap");
    coef *= (j - 0.5) / j;
    pw *= rho;
    const double g = g_cur;
    const double tf = coef * coef * pw * g;
    f2 += tf;
    double tt = 0;
    if (want_tail) {
      tt = coef * pw * g * h_cur;
      tail += tt;
    }
    const bool done_f2 = std::fabs(tf) * tail_factor <= ctl.rel_tol * std::fabs(f2);
    const bool done_tail = !want_tail || std::fabs(tt) * tail_factor <= ctl.rel_tol * std::fabs(tail);
    if ((done_f2 && done_tail) || pw == 0) break;
    // advance G to index j + 1 (a = 1/2 + j)
    {
      const double a = 0.5 + j;
      const double next = ((1.5 - a) * lam * g_prev + (2 * a - 1.5 + (1 - a) * a2) * g_cur) / a;
      g_prev = g_cur;
      g_cur = next;
    }
    if (want_tail) {
      const double a = 1.0 + j;
      const double next = ((1.5 - a) * lam_h * h_prev + (2 * a - 1.5 + (1 - a) * w) * h_cur) / a;
      h_prev = h_cur;
      h_cur = next;
    }
  }
  out.f2 = f2;
  out.tail = tail;
  return out;
}

// F2(1/2; 1/2, 1; 1, 3/2; m, y) summed by columns in x.  For y < 0 this
// converges like m^j even where |m| + |y| >= 1.
inline double appell_f2_half_column(double m, double y, const SeriesControl& ctl) {
  if (!(m >= 0 && m < 1) || !(y < 1) || !std::isfinite(y)) throw domain_error("F2 column sum: bad arguments");
  if (y >= 0) return ihyg_columns(m, y, 1.0, 0.0, false, ctl).f2;
  const double lam = 1 - y;
  double g_prev = atanh_ratio(y);
  double g_cur = 1 / lam;
  double coef = 1.0, pw = 1.0, sum = g_prev;
  const double tail_factor = 2 / (1 - m);
  for (long j = 1;; ++j) {
    if (j >= ctl.max_terms) throw convergence_error("F2 column sum: term cap reached");
    coef *= (j - 0.5) / j;
    pw *= m;
    const double term = coef * coef * pw * g_cur;
    sum += term;
    if (std::fabs(term) * tail_factor <= ctl.rel_tol * std::fabs(sum) || pw == 0) break;
    const double a = 0.5 + j;
    const double next = ((1.5 - a) * g_prev + (2 * a - 1.5 + (1 - a) * y) * g_cur) / (a * lam);
    g_prev = g_cur;
    g_cur = next;
  }
  return sum;
}

// Surface value I_hyg(m, sqrt(1-m); pi) from its series representations:
// the 4F3 form for m <= 1/3 and the expansion about m = 1 otherwise.
inline double surface_series(double m, const SeriesControl& ctl) {
  const double pi = std::numbers::pi;
  if (m <= 1.0 / 3.0) {
    const double mu = m / (m - 1);
    return -pi * mu / 8 * pfq_4f3(1, 1, 1.5, 1.5, 2, 2, 2, mu, ctl) - pi / 2 * std::log(m / (16 * (1 - m)));
  }
  const double X = 1 - m;
  const double lx = std::log(X);
  double an = 1.0;             // ((1/2)_n / n!)^2
  double dn = 2 * std::log(2.0);  // psi(n+1) - psi(n+1/2)
  double alpha = 0, beta = 0, sum = 0;
  double xs = std::sqrt(X);    // X^(n + 1/2)
  for (long n = 0;; ++n) {
    if (n >= ctl.max_terms) throw convergence_error("surface value: term cap reached");
    alpha += an;
    beta += an * dn;
    const double s = n + 0.5;
    const double term = 0.5 * alpha * xs * (1 / (s * s) - lx / s) + beta * xs / s;
    sum += term;
    if (std::fabs(term) * 2 / (1 - X) <= ctl.rel_tol * std::fabs(sum) && n > 2) break;
    const double r = (n + 0.5) / (n + 1);
    an *= r * r;
    dn += 1.0 / (n + 1) - 1.0 / (n + 0.5);
    xs *= X;
  }
  return sum;
}

// int_0^{sqrt(1-m)} 2 K(1 - v^2) / (1 - v^2) dv, the quadrature form of the surface value.
inline double surface_quadrature(double m) {
  auto f = [](double v) { return 2 * elliptic::carlson_rf(0.0, v * v, 1.0) / ((1 - v) * (1 + v)); };
  return appellfield::detail::gl_adaptive(f, 0.0, std::sqrt(1 - m), 1e-14, 1e-300);
}

// I_hyg(m, A; pi) for A^2 <= 1 - m, anchored at the surface value:
// I(m, A) = sgn(A) [I_s(m) - int_0^T dI/dA(m, A* - t^2) 2t dt], A* = sqrt(1-m), T^2 = A* - |A|.
// gap, when nonnegative, is a precomputed A* - |A|.
inline double ihyg_pi_anchored(double m, double A, double gap, const SeriesControl& ctl) {
  const double astar = std::sqrt(1 - m);
  const double base = surface_series(m, ctl);
  if (gap < 0) gap = astar - std::fabs(A);
  const double sign = A < 0 ? -1.0 : 1.0;
  if (gap <= 0) return sign * base;
  const double kk = elliptic::comp_k(m);
  auto f = [&](double t) {
    const double t2 = t * t;
    const double a = astar - t2;
    const double oma2 = (1 - a) * (1 + a);
    const double n = m / oma2;
    const double omn = t2 * (2 * astar - t2) / oma2;
    const double pi_n = elliptic::detail::comp_pi_c(n, omn, 1 - m);
    return (2 * kk + 2 * a * a / oma2 * pi_n) * 2 * t;
  };
  const double corr = appellfield::detail::gl_adaptive(f, 0.0, std::sqrt(gap), 1e-15, 1e-300);
  return sign * (base - corr);
}

inline void check_interior(double m, double A) {
  if (m + A * A >= 1 - boundary_gap)
    throw boundary_error("I_hyg: m + A^2 is within 1e-9 of the boundary; use i_hyg_surface");
}

// I_hyg(m, A; pi) for any A^2 <= 1 - m, without the boundary-band check.
// gap as for ihyg_pi_anchored.
inline double ihyg_pi_value(double m, double A, const SeriesControl& ctl, double gap = -1) {
  if (A == 0 || m >= 1) return 0.0;
  if (m == 0) return std::numbers::pi * std::atanh(A);
  const double a2 = A * A;
  const double rho = m / (1 - a2);
  if (rho > ctl.near_boundary_ratio) return ihyg_pi_anchored(m, A, gap, ctl);
  return std::numbers::pi * A * ihyg_columns(m, a2, 1.0, 0.0, false, ctl).f2;
}

}  // namespace detail

// I_hyg(m, A; theta) for theta in [-pi, pi] and m + A^2 < 1.
inline double i_hyg(const IhygArgs& args, const SeriesControl& ctl = {}) {
  ctl.validate();
  args.validate();
  const double m = args.m, A = args.A, theta = args.theta;
  detail::check_interior(m, A);
  if (A == 0 || theta == 0) return 0.0;
  if (std::fabs(theta) == std::numbers::pi) {
    const double v = detail::ihyg_pi_value(m, A, ctl);
    return theta < 0 ? -v : v;
  }
  if (m == 0) return theta * std::atanh(A);
  const double s = std::sin(0.5 * theta);
  const double c = std::cos(0.5 * theta);
  const double a2 = A * A;
  if (std::fabs(s) < ctl.small_s_threshold || m / (1 - a2) > ctl.near_boundary_ratio)
    return detail::ihyg_quadrature(m, A, theta);
  const auto cols = detail::ihyg_columns(m, a2, std::fabs(s), c, true, ctl);
  return std::numbers::pi * A * detail::sgn(s) * cols.f2 - 2 * A * s * c * cols.tail;
}

inline double i_hyg(double m, double A, double theta, const SeriesControl& ctl = {}) {
  return i_hyg(IhygArgs{m, A, theta}, ctl);
}

// I_hyg(m, A; pi) = pi A F2(1/2; 1/2, 1; 1, 3/2; m, A^2).
inline double i_hyg_pi(double m, double A, const SeriesControl& ctl = {}) {
  ctl.validate();
  IhygArgs{m, A, std::numbers::pi}.validate();
  detail::check_interior(m, A);
  return detail::ihyg_pi_value(m, A, ctl);
}

// I_hyg(m, sqrt(1-m); pi) for 0 < m < 1.  The series value is returned after it
// has been checked against direct quadrature of int_m^1 K(t) dt / (t sqrt(1-t)).
inline double i_hyg_surface(double m, const SeriesControl& ctl = {}) {
  ctl.validate();
  if (!std::isfinite(m) || !(m > 0 && m < 1)) throw domain_error("i_hyg_surface: m must lie in (0, 1)");
  const double series = detail::surface_series(m, ctl);
  const double quad = detail::surface_quadrature(m);
  const double tol = std::max(1e-11, 1e4 * ctl.rel_tol) * std::max(1.0, std::fabs(series));
  if (std::fabs(series - quad) > tol)
    throw convergence_error("i_hyg_surface: series and quadrature forms disagree");
  return series;
}

// dI/dA = 2 F(theta/2 | m) + 2A^2/(1-A^2) Pi(m/(1-A^2); theta/2 | m).
inline double di_hyg_dA(double m, double A, double theta) {
  IhygArgs{m, A, theta}.validate();
  const double phi = 0.5 * theta;
  const double f = elliptic::ellip_f(phi, m);
  if (A == 0) return 2 * f;
  const double oma2 = (1 - A) * (1 + A);
  return 2 * f + 2 * A * A / oma2 * elliptic::ellip_pi(m / oma2, phi, m);
}

// dI/dm = (A/m) [Pi(m/(1-A^2); theta/2 | m) - F(theta/2 | m)], m in (0, 1).
inline double di_hyg_dm(double m, double A, double theta) {
  IhygArgs{m, A, theta}.validate();
  if (!(m > 0 && m < 1)) throw domain_error("di_hyg_dm: m must lie in (0, 1)");
  const double phi = 0.5 * theta;
  const double oma2 = (1 - A) * (1 + A);
  return A / m * (elliptic::ellip_pi(m / oma2, phi, m) - elliptic::ellip_f(phi, m));
}

namespace detail {

inline void check_small_args(double m, double A, double s, const char* who) {
  for (double v : {m, A, s})
    if (!std::isfinite(v)) throw domain_error(std::string(who) + ": non-finite argument");
  if (m < 0 || m > 1) throw domain_error(std::string(who) + ": m must lie in [0, 1]");
  if (!(std::fabs(A) < 1) || !(std::fabs(s) < 1))
    throw convergence_error(std::string(who) + ": needs |A| < 1 and |s| < 1");
}

}  // namespace detail

// Literal triple sum
//   2As sum_{l,j,k} (1)_j (1/2)_{l+j} (1/2)_k (1/2)_{l+k} / ((3/2)_j (3/2)_{l+k})
//       (m s^2)^l (A^2)^j (s^2)^k / (l! j! k!).
inline double lauricella_f11_triple(double m, double A, double s, const SeriesControl& ctl = {}) {
  ctl.validate();
  detail::check_small_args(m, A, s, "lauricella_f11_triple");
  if (A == 0 || s == 0) return 0.0;
  const double x = m * s * s, y = A * A, w = s * s;
  double total = 0;
  double tl = 1.0;  // t(l, 0, 0)
  for (long l = 0;; ++l) {
    if (l >= ctl.max_terms) throw convergence_error("lauricella_f11_triple: term cap reached");
    double slab = 0;
    double tj = tl;  // t(l, j, 0)
    for (long j = 0;; ++j) {
      if (j >= ctl.max_terms) throw convergence_error("lauricella_f11_triple: term cap reached");
      double row = 0;
      double tk = tj;
      for (long k = 0;; ++k) {
        if (k >= ctl.max_terms) throw convergence_error("lauricella_f11_triple: term cap reached");
        row += tk;
        const double r = (0.5 + k) * (0.5 + l + k) / ((1.5 + l + k) * (k + 1)) * w;
        tk *= r;
        if (detail::tail_small(tk, std::max(r, w), row, ctl.rel_tol)) {
          row += tk;
          break;
        }
      }
      slab += row;
      const double rj = (0.5 + l + j) / (1.5 + j) * y;
      tj *= rj;
      if (std::fabs(tj) / (1 - w) / (1 - std::max(rj, y)) <= ctl.rel_tol * std::fabs(slab) || tj == 0) break;
    }
    total += slab;
    const double rl = (0.5 + l) * (0.5 + l) / ((1.5 + l) * (l + 1)) * x;
    tl *= rl;
    if (std::fabs(tl) / ((1 - w) * (1 - y) * (1 - std::max(rl, x))) <= ctl.rel_tol * std::fabs(total) || tl == 0)
      break;
  }
  return 2 * A * s * total;
}

// The three single-sum rewritings of the triple sum:
//   1: sum over l with 2F1(1, 1/2+l; 3/2; A^2) 2F1(1/2, 1/2+l; 3/2+l; s^2)
//   2: sum over j with F1(1/2; 1/2+j, 1/2; 3/2; m s^2, s^2)
//   3: sum over k with F2(1/2; 1/2+k, 1; 3/2+k, 3/2; m s^2, A^2)
inline double i_hyg_alt(int variant, double m, double A, double s, const SeriesControl& ctl = {}) {
  ctl.validate();
  detail::check_small_args(m, A, s, "i_hyg_alt");
  if (variant < 1 || variant > 3) throw domain_error("i_hyg_alt: variant must be 1, 2 or 3");
  if (A == 0 || s == 0) return 0.0;
  const double x = m * s * s, y = A * A, w = s * s;
  double sum = 0;
  double coef = 1.0;
  for (long n = 0;; ++n) {
    if (n >= ctl.max_terms) throw convergence_error("i_hyg_alt: term cap reached");
    const double nn = static_cast<double>(n);
    double term = 0, ratio = 0, limit = 0;
    switch (variant) {
      case 1:
        // coef = (1/2)_l / l! x^l
        term = coef / (2 * nn + 1) * gauss_2f1(1, 0.5 + nn, 1.5, y, ctl) * gauss_2f1(0.5, 0.5 + nn, 1.5 + nn, w, ctl);
        ratio = (0.5 + nn) / (nn + 1) * x;
        limit = x / ((1 - y) * (1 - w));
        break;
      case 2:
        // coef = (1/2)_j / (3/2)_j y^j
        term = coef * appell_f1(0.5, 0.5 + nn, 0.5, 1.5, x, w, ctl);
        ratio = (0.5 + nn) / (1.5 + nn) * y;
        limit = y / (1 - x);
        break;
      default:
        // coef = (1/2)_k (1/2)_k / ((3/2)_k k!) w^k
        term = coef * appell_f2(0.5, 0.5 + nn, 1, 1.5 + nn, 1.5, x, y, ctl);
        ratio = (0.5 + nn) * (0.5 + nn) / ((1.5 + nn) * (nn + 1)) * w;
        limit = w / (1 - y);
        break;
    }
    sum += term;
    coef *= ratio;
    const double r = std::max(ratio, std::min(limit, 0.999));
    if (detail::tail_small(term, r, sum, ctl.rel_tol) && n > 1) break;
  }
  return 2 * A * s * sum;
}

}  // namespace appellfield::hypergeom
