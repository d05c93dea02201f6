// SPDX-License-Identifier: Apache-2.0
#pragma once

// Independent references: adaptive Gauss-Kronrod quadrature in one to three
// dimensions, brute-force field-line potentials, finite-difference operators
// and line integrals of gradients.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "fields.hpp"

namespace appellfield::oracle {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  // Endpoints (left, right) where the integrand may be singular; a flagged
  // endpoint is treated with the substitution x = a + (b - a) t^2.
  std::array<bool, 2> singular_endpoints{false, false};

  void validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0)) throw domain_error("QuadratureSpec: tolerances must be positive");
    if (max_subdivisions < 32) throw domain_error("QuadratureSpec: max_subdivisions must be >= 32");
  }
};

struct QuadResult {
  double value = 0;
  double error = 0;
};

namespace detail {

// 15-point Kronrod nodes and weights with the embedded 7-point Gauss rule.
inline constexpr std::array<double, 8> gk_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> gk_wk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gk_wg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                                0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a = 0, b = 0, value = 0, error = 0;
};

template <class F>
Segment gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double rk = fc * gk_wk[7], rg = fc * gk_wg[3], rabs = std::fabs(rk);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * gk_x[j];
    const double f1 = f(c - dx), f2 = f(c + dx);
    rk += gk_wk[j] * (f1 + f2);
    rabs += gk_wk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) rg += gk_wg[j / 2] * (f1 + f2);
  }
  Segment s{a, b, rk * h, std::fabs((rk - rg) * h)};
  const double floor = 50 * std::numeric_limits<double>::epsilon() * rabs * std::fabs(h);
  s.error = std::max(s.error, floor);
  if (!std::isfinite(s.value)) throw convergence_error("quadrature: integrand is not finite");
  return s;
}

// Global adaptive bisection of the initial pieces [pts[i], pts[i+1]].
template <class F>
QuadResult adaptive(F& f, std::span<const double> pts, double abs_tol, double rel_tol, int max_subdivisions) {
  auto by_error = [](const Segment& x, const Segment& y) { return x.error < y.error; };
  std::vector<Segment> heap;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1] == pts[i]) continue;
    heap.push_back(gk15(f, pts[i], pts[i + 1]));
  }
  std::make_heap(heap.begin(), heap.end(), by_error);
  auto totals = [&]() {
    QuadResult r;
    for (const auto& s : heap) {
      r.value += s.value;
      r.error += s.error;
    }
    return r;
  };
  QuadResult tot = totals();
  while (tot.error > std::max(abs_tol, rel_tol * std::fabs(tot.value))) {
    if (static_cast<int>(heap.size()) >= max_subdivisions)
      throw convergence_error("quadrature: subdivision limit reached");
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) throw convergence_error("quadrature: interval cannot be split further");
    heap.push_back(gk15(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(gk15(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end(), by_error);
    tot = totals();
  }
  return tot;
}

}  // namespace detail

// int_{points.front()}^{points.back()} f with the interior points as initial breaks.
template <class F>
QuadResult quad_1d(F&& f, std::span<const double> points, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (points.size() < 2) throw domain_error("quad_1d: need at least two points");
  for (double p : points)
    if (!std::isfinite(p)) throw domain_error("quad_1d: non-finite limit");
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i + 1] < points[i]) throw domain_error("quad_1d: points must be nondecreasing");
  const double a = points.front(), b = points.back();
  const bool left = spec.singular_endpoints[0], right = spec.singular_endpoints[1];
  if (!left && !right) return detail::adaptive(f, points, spec.abs_tol, spec.rel_tol, spec.max_subdivisions);
  // Split once at the midpoint; each flagged half is mapped with x = end +- w t^2.
  const double mid = 0.5 * (a + b);
  QuadResult out;
  auto half = [&](double lo, double hi, bool sing_lo, bool sing_hi) {
    const double w = hi - lo;
    QuadResult r;
    const std::array<double, 2> unit{0.0, 1.0};
    if (sing_lo) {
      auto g = [&](double t) { return 2 * w * t * f(lo + w * t * t); };
      r = detail::adaptive(g, unit, spec.abs_tol / 2, spec.rel_tol, spec.max_subdivisions);
    } else if (sing_hi) {
      auto g = [&](double t) { return 2 * w * t * f(hi - w * t * t); };
      r = detail::adaptive(g, unit, spec.abs_tol / 2, spec.rel_tol, spec.max_subdivisions);
    } else {
      const std::array<double, 2> ab{lo, hi};
      r = detail::adaptive(f, ab, spec.abs_tol / 2, spec.rel_tol, spec.max_subdivisions);
    }
    out.value += r.value;
    out.error += r.error;
  };
  half(a, mid, left, false);
  half(mid, b, false, right);
  return out;
}

template <class F>
QuadResult quad_1d(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  const std::array<double, 2> pts{a, b};
  return quad_1d(f, std::span<const double>(pts), spec);
}

// Iterated 2-D quadrature over x in [x0, x1], y in [y0(x), y1(x)].
struct Domain2 {
  double x0 = 0, x1 = 1;
  std::function<double(double)> y0 = [](double) { return 0.0; };
  std::function<double(double)> y1 = [](double) { return 1.0; };
  std::vector<double> x_breaks;                      // optional interior breakpoints in x
  std::function<std::vector<double>(double)> y_breaks;  // optional breakpoints in y at given x
};

namespace detail {

inline std::vector<double> with_breaks(double a, double b, const std::vector<double>& breaks) {
  std::vector<double> pts{a};
  for (double p : breaks)
    if (p > a && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  return pts;
}

// Inner integrals are solved more tightly than the outer one so that their
// errors stay below the outer tolerance.
inline QuadratureSpec inner_spec(const QuadratureSpec& s) {
  QuadratureSpec in = s;
  in.rel_tol = s.rel_tol / 10;
  in.abs_tol = s.abs_tol / 10;
  in.singular_endpoints = {false, false};
  return in;
}

}  // namespace detail

template <class F>
QuadResult quad_2d(F&& f, const Domain2& d, const QuadratureSpec& spec = {}) {
  spec.validate();
  const QuadratureSpec in = detail::inner_spec(spec);
  double inner_err = 0;
  auto outer = [&](double x) {
    const auto ys = detail::with_breaks(d.y0(x), d.y1(x), d.y_breaks ? d.y_breaks(x) : std::vector<double>{});
    const auto r = quad_1d([&](double y) { return f(x, y); }, std::span<const double>(ys), in);
    inner_err = std::max(inner_err, r.error);
    return r.value;
  };
  const auto pts = detail::with_breaks(d.x0, d.x1, d.x_breaks);
  QuadResult r = quad_1d(outer, std::span<const double>(pts), spec);
  r.error += inner_err * (d.x1 - d.x0);
  return r;
}

// Iterated 3-D quadrature over x, y(x), w(x, y).
struct Domain3 {
  double x0 = 0, x1 = 1;
  std::function<double(double)> y0 = [](double) { return 0.0; };
  std::function<double(double)> y1 = [](double) { return 1.0; };
  std::function<double(double, double)> w0 = [](double, double) { return 0.0; };
  std::function<double(double, double)> w1 = [](double, double) { return 1.0; };
  std::vector<double> x_breaks;
  std::function<std::vector<double>(double, double)> w_breaks;  // optional breakpoints in w at (x, y)
};

template <class F>
QuadResult quad_3d(F&& f, const Domain3& d, const QuadratureSpec& spec = {}) {
  spec.validate();
  const QuadratureSpec in = detail::inner_spec(spec);
  const QuadratureSpec in2 = detail::inner_spec(in);
  double inner_err = 0;
  auto outer = [&](double x) {
    auto mid = [&](double y) {
      const auto ws = detail::with_breaks(d.w0(x, y), d.w1(x, y), d.w_breaks ? d.w_breaks(x, y) : std::vector<double>{});
      const auto r = quad_1d([&](double w) { return f(x, y, w); }, std::span<const double>(ws), in2);
      inner_err = std::max(inner_err, r.error);
      return r.value;
    };
    const auto r = quad_1d(mid, d.y0(x), d.y1(x), in);
    inner_err = std::max(inner_err, r.error);
    return r.value;
  };
  const auto pts = detail::with_breaks(d.x0, d.x1, d.x_breaks);
  QuadResult r = quad_1d(outer, std::span<const double>(pts), spec);
  r.error += inner_err * (d.x1 - d.x0);
  return r;
}

// ---------------------------------------------------------------------------
// Coulomb integrals.

namespace detail {

// r^2 + r'^2 - 2 r r' cos(t) and r^2 + r'^2 + 2 r r' cos(t) without cancellation.
inline double dist2_minus(double r, double rp, double t) {
  const double s = std::sin(0.5 * t);
  return (r - rp) * (r - rp) + 4 * r * rp * s * s;
}
inline double dist2_plus(double r, double rp, double t) {
  const double c = std::cos(0.5 * t);
  return (r - rp) * (r - rp) + 4 * r * rp * c * c;
}

}  // namespace detail

// phi of the uniformly charged cylinder by 3-D quadrature of rho0 dV / L over
// (r', theta', z'), using the mirror symmetry in theta'.
inline QuadResult coulomb_cylinder(double r, double z, const fields::CylinderSpec& c, const QuadratureSpec& spec = {}) {
  c.validate();
  Domain3 d;
  d.x0 = 0;
  d.x1 = c.R;
  d.y0 = [](double) { return 0.0; };
  d.y1 = [](double) { return std::numbers::pi; };
  d.w0 = [&](double, double) { return -c.Z; };
  d.w1 = [&](double, double) { return c.Z; };
  if (r > 0 && r < c.R) d.x_breaks = {r};
  d.w_breaks = [&](double, double) { return std::vector<double>{z}; };
  auto f = [&](double rp, double th, double zp) {
    const double dz = zp - z;
    return rp / std::sqrt(detail::dist2_minus(r, rp, th) + dz * dz);
  };
  QuadResult q = quad_3d(f, d, spec);
  q.value *= 2 * c.rho0;
  q.error *= 2 * std::fabs(c.rho0);
  return q;
}

// phi of the tube by 2-D quadrature of sigma0 R dtheta' dz' / L.
inline QuadResult coulomb_tube(double r, double z, const fields::TubeSpec& t, const QuadratureSpec& spec = {}) {
  t.validate();
  Domain2 d;
  d.x0 = 0;
  d.x1 = std::numbers::pi;
  d.y0 = [&](double) { return -t.Z; };
  d.y1 = [&](double) { return t.Z; };
  d.y_breaks = [&](double) { return std::vector<double>{z}; };
  auto f = [&](double th, double zp) {
    const double dz = zp - z;
    return 1 / std::sqrt(detail::dist2_minus(r, t.R, th) + dz * dz);
  };
  QuadResult q = quad_2d(f, d, spec);
  q.value *= 2 * t.sigma0 * t.R;
  q.error *= 2 * std::fabs(t.sigma0 * t.R);
  return q;
}

// phi of the disk by 2-D quadrature of sigma r' dr' dtheta' / L.
inline QuadResult coulomb_disk(double r, double z, double R, double sigma, const QuadratureSpec& spec = {}) {
  Domain2 d;
  d.x0 = 0;
  d.x1 = R;
  d.y0 = [](double) { return 0.0; };
  d.y1 = [](double) { return std::numbers::pi; };
  if (r > 0 && r < R) d.x_breaks = {r};
  auto f = [&](double rp, double th) { return rp / std::sqrt(detail::dist2_minus(r, rp, th) + z * z); };
  QuadResult q = quad_2d(f, d, spec);
  q.value *= 2 * sigma;
  q.error *= 2 * std::fabs(sigma);
  return q;
}

// ---------------------------------------------------------------------------
// Field-line potential by direct integration.
//
// psi(r, z) = int rho r (z - z') (r + r' cos) / (L (L^2 - (z - z')^2)) dV + g(r).
// The z' integral is done in closed form; g(r) restores the uniform field lost
// by the r-derivative and is fixed on each vertical line by requiring
// psi -> Q z / sqrt(r^2 + z^2) at z = sgn(z) 50 max(R, Z).

using Body = std::variant<fields::CylinderSpec, fields::TubeSpec, fields::PointCharge>;

namespace detail {

// r (r + r' cos) / d^2 with d^2 = r^2 + r'^2 + 2 r r' cos.
inline double psi_kernel(double r, double rp, double th) {
  const double d2 = dist2_plus(r, rp, th);
  return d2 == 0 ? 0.0 : r * (r + rp * std::cos(th)) / d2;
}

// -(L(z' = Z) - L(z' = -Z)) at horizontal distance^2 d2.
inline double psi_zdiff(double d2, double z, double Z) {
  return -(std::sqrt(d2 + (Z - z) * (Z - z)) - std::sqrt(d2 + (Z + z) * (Z + z)));
}

inline double psi_integral(double r, double z, const fields::TubeSpec& t, const QuadratureSpec& spec) {
  if (r == 0) return 0.0;
  auto f = [&](double th) {
    const double d2 = dist2_plus(r, t.R, th);
    return psi_kernel(r, t.R, th) * psi_zdiff(d2, z, t.Z);
  };
  return 2 * t.sigma0 * t.R * quad_1d(f, 0.0, std::numbers::pi, spec).value;
}

// The kernel integrates to 2 pi H(r - r') over theta, so subtracting the d = 0
// value of the z-difference removes the 1/d singularity at (r', theta) = (r, pi).
inline double psi_integral(double r, double z, const fields::CylinderSpec& c, const QuadratureSpec& spec) {
  if (r == 0) return 0.0;
  const double gs = -(std::fabs(c.Z - z) - std::fabs(c.Z + z));
  Domain2 d;
  d.x0 = 0;
  d.x1 = c.R;
  d.y0 = [](double) { return 0.0; };
  d.y1 = [](double) { return std::numbers::pi; };
  if (r < c.R) d.x_breaks = {r};
  auto f = [&](double rp, double th) {
    const double d2 = dist2_plus(r, rp, th);
    return rp * psi_kernel(r, rp, th) * (psi_zdiff(d2, z, c.Z) - gs);
  };
  const double m = std::min(r, c.R);
  return 2 * c.rho0 * quad_2d(f, d, spec).value + std::numbers::pi * c.rho0 * gs * m * m;
}

inline double psi_integral(double r, double z, const fields::PointCharge& p, const QuadratureSpec&) {
  const double zp = z - p.z_offset;
  return p.q * zp / std::hypot(r, zp);
}

inline double body_charge(const fields::CylinderSpec& c) { return c.charge(); }
inline double body_charge(const fields::TubeSpec& t) { return t.charge(); }
inline double body_charge(const fields::PointCharge& p) { return p.q; }
inline double body_scale(const fields::CylinderSpec& c) { return std::max(c.R, c.Z); }
inline double body_scale(const fields::TubeSpec& t) { return std::max(t.R, t.Z); }
inline double body_scale(const fields::PointCharge& p) { return std::max(1.0, std::fabs(p.z_offset)); }

inline bool in_support(double r, double z, const fields::CylinderSpec& c) {
  return fields::inside_closed_cylinder(r, z, c.R, c.Z);
}
inline bool in_support(double r, double z, const fields::TubeSpec& t) {
  return fields::on_tube_sheet(r, z, t.R, t.Z) || (r == t.R && std::fabs(z) == t.Z);
}
inline bool in_support(double r, double z, const fields::PointCharge& p) { return r == 0 && z == p.z_offset; }

}  // namespace detail

inline double brute_psi(double r, double z, const Body& body, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (!std::isfinite(r) || !std::isfinite(z) || r < 0) throw domain_error("brute_psi: bad point");
  return std::visit(
      [&](const auto& b) {
        if (detail::in_support(r, z, b)) throw geometry_error("brute_psi: point lies in the charge support");
        const double q = detail::body_charge(b);
        const double zf = (z < 0 ? -50.0 : 50.0) * detail::body_scale(b);
        const double g = q * zf / std::hypot(r, zf) - detail::psi_integral(r, zf, b, spec);
        return detail::psi_integral(r, z, b, spec) + g;
      },
      body);
}

// ---------------------------------------------------------------------------
// Finite differences.

using Field2 = std::function<double(double, double)>;

inline void check_stencil(double r, double z, double h, const char* who) {
  if (!(h > 0) || !std::isfinite(r) || !std::isfinite(z)) throw domain_error(std::string(who) + ": bad arguments");
  if (r - h <= 0) throw geometry_error(std::string(who) + ": stencil crosses r = 0");
}

// phi_rr + phi_r / r + phi_zz with the 5-point stencil.
inline double fd_laplacian_cyl(const Field2& f, double r, double z, double h) {
  check_stencil(r, z, h, "fd_laplacian_cyl");
  const double c = f(r, z);
  const double rp = f(r + h, z), rm = f(r - h, z), zp = f(r, z + h), zm = f(r, z - h);
  return (rp - 2 * c + rm) / (h * h) + (rp - rm) / (2 * h * r) + (zp - 2 * c + zm) / (h * h);
}

// psi_rr - psi_r / r + psi_zz with the 5-point stencil.
inline double fd_psi_operator(const Field2& f, double r, double z, double h) {
  check_stencil(r, z, h, "fd_psi_operator");
  const double c = f(r, z);
  const double rp = f(r + h, z), rm = f(r - h, z), zp = f(r, z + h), zm = f(r, z - h);
  return (rp - 2 * c + rm) / (h * h) - (rp - rm) / (2 * h * r) + (zp - 2 * c + zm) / (h * h);
}

// Central-difference gradient (d/dr, d/dz).
inline std::pair<double, double> fd_gradient(const Field2& f, double r, double z, double h) {
  if (!(h > 0)) throw domain_error("fd_gradient: h must be positive");
  return {(f(r + h, z) - f(r - h, z)) / (2 * h), (f(r, z + h) - f(r, z - h)) / (2 * h)};
}

struct Point2 {
  double r = 0;
  double z = 0;
};

// Closed-loop integral of grad f . dl over the polygon through the vertices
// (closed back to the first).  Each edge is split into an odd number of
// pieces of length <= 4h, so an edge symmetric about a cut keeps its nodes
// off it; the trapezoid rule accumulates the tangential gradient.
inline double loop_integral_grad(const Field2& f, std::span<const Point2> loop, double h) {
  if (loop.size() < 3) throw domain_error("loop_integral_grad: loop needs at least three vertices");
  if (!(h > 0)) throw domain_error("loop_integral_grad: h must be positive");
  double total = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Point2 a = loop[i], b = loop[(i + 1) % loop.size()];
    const double dr = b.r - a.r, dz = b.z - a.z;
    const double len = std::hypot(dr, dz);
    if (len == 0) continue;
    long n = static_cast<long>(std::ceil(len / (4 * h)));
    if (n % 2 == 0) ++n;
    double seg = 0;
    for (long k = 0; k <= n; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(n);
      const auto [gr, gz] = fd_gradient(f, a.r + t * dr, a.z + t * dz, h);
      const double g = gr * dr + gz * dz;
      if (!std::isfinite(g)) throw geometry_error("loop_integral_grad: loop touches a singularity");
      seg += (k == 0 || k == n) ? 0.5 * g : g;
    }
    total += seg / static_cast<double>(n);
  }
  return total;
}

}  // namespace appellfield::oracle
