// SPDX-License-Identifier: Apache-2.0
#pragma once

// Acceptance battery: each criterion compares a closed form against an
// independent reference and reports its worst residual.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "elliptic.hpp"
#include "fields.hpp"
#include "hypergeom.hpp"
#include "jacobi.hpp"
#include "oracle.hpp"
#include "series_control.hpp"

namespace appellfield::verify {

struct Options {
  bool full = false;
  std::uint64_t seed = 42;
};

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
};

inline Result start(int id, std::string name) {
  Result r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

namespace detail {

inline std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

inline std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

inline double rel(double v, double ref, double floor = 1.0) { return std::fabs(v - ref) / std::max(std::fabs(ref), floor); }

// Observed order from errors at steps h and h/2.
inline double order(double e_h, double e_h2) { return std::log2(e_h / e_h2); }

inline double uniform(std::mt19937_64& g, double a, double b) {
  return a + (b - a) * (static_cast<double>(g() >> 11) * 0x1.0p-53);
}

inline oracle::QuadratureSpec tight() {
  oracle::QuadratureSpec q;
  q.abs_tol = 1e-15;
  q.rel_tol = 1e-13;
  return q;
}

// Defining integrand atanh(A / sqrt(1 - m sin^2(t/2))) integrated by the oracle.
inline double ihyg_oracle(double m, double A, double theta) {
  auto f = [&](double t) {
    const double s = std::sin(0.5 * t);
    return std::atanh(A / std::sqrt(1 - m * s * s));
  };
  return oracle::quad_1d(f, 0.0, theta, tight()).value;
}

struct Worst {
  double value = 0;
  void add(double v) {
    if (!(v <= value)) value = v;  // NaN propagates as worst
  }
};

}  // namespace detail

// 1. I_hyg against quadrature of its defining integral.
inline Result ihyg_identity(const Options&) {
  Result r = start(1, "I_hyg series vs quadrature of the defining integral");
  detail::Worst w;
  int n = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k) {
        const double m = 0.95 * (i + 0.5) / 10;
        const double A = -0.9 + 1.8 * (j + 0.5) / 10;
        const double th = 0.1 + (std::numbers::pi - 0.1) * (k + 0.5) / 10;
        if (m + A * A >= 0.98) continue;
        const double v = hypergeom::i_hyg(m, A, th);
        w.add(detail::rel(v, detail::ihyg_oracle(m, A, th), 1e-3));
        ++n;
      }
  r.passed = w.value < 1e-8;
  r.detail = detail::fmt("%.0f points, max scaled error %.3g (limit 1e-8)", n, w.value);
  return r;
}

// 2. The definite-integral reduction at theta = pi against the general-theta
// column formula evaluated at s = 1.
inline Result definite_reduction(const Options& opt) {
  Result r = start(2, "I_hyg(m, A; pi) reduction vs general-theta formula at s = 1");
  std::mt19937_64 g(opt.seed);
  const SeriesControl ctl;
  detail::Worst w;
  for (int n = 0; n < 100;) {
    const double m = detail::uniform(g, 0.0, 1.0), A = detail::uniform(g, -1.0, 1.0);
    if (m + A * A >= 0.999) continue;
    ++n;
    const double v = hypergeom::i_hyg_pi(m, A);
    const double s = std::sin(0.5 * std::numbers::pi), c = std::cos(0.5 * std::numbers::pi);
    double general;
    if (m / (1 - A * A) <= ctl.near_boundary_ratio) {
      const auto cols = hypergeom::detail::ihyg_columns(m, A * A, s, c, true, ctl);
      general = std::numbers::pi * A * cols.f2 - 2 * A * s * c * cols.tail;
    } else {
      general = hypergeom::detail::ihyg_quadrature(m, A, std::numbers::pi);
    }
    w.add(detail::rel(v, general));
  }
  r.passed = w.value < 1e-12;
  r.detail = detail::fmt("100 random points, max error %.3g (limit 1e-12)", w.value);
  return r;
}

// 3. Surface value: series form vs quadrature of int_m^1 K(t) / (t sqrt(1-t)) dt,
// and the limit m -> 1.
inline Result surface_value(const Options&) {
  Result r = start(3, "Surface value: series vs quadrature, and limit m -> 1");
  detail::Worst w;
  for (int i = 1; i <= 9; ++i) {
    const double m = 0.1 * i;
    // t = 1 - u^2 removes the inverse square root; K keeps a log singularity at u = 0.
    auto f = [](double u) {
      const double t = 1 - u * u;
      return 2 * elliptic::detail::comp_k_c(u * u) / t;
    };
    auto q = detail::tight();
    q.singular_endpoints = {true, false};
    const double quad = oracle::quad_1d(f, 0.0, std::sqrt(1 - m), q).value;
    w.add(detail::rel(hypergeom::detail::surface_series(m, SeriesControl{}), quad));
  }
  const double limit = hypergeom::i_hyg_surface(1 - 1e-6);
  const bool forms_ok = w.value < 1e-8;
  const bool limit_ok = std::fabs(limit) < 1e-4;
  r.passed = forms_ok && limit_ok;
  r.detail = detail::fmt("two-form max error %.3g (limit 1e-8); ", w.value) +
             detail::fmt("I_s(1 - 1e-6) = %.6g (limit |.| < 1e-4)", limit);
  return r;
}

// 4. int_0^u Z sc du: closed form vs quadrature, and the jump at u = K.
inline Result z_sc_formula(const Options&) {
  Result r = start(4, "Integral of Z*sc: closed form vs quadrature, jump at u = K");
  detail::Worst w, wj;
  double jump085 = 0;
  for (double m : {0.85, 0.3, 0.6, 0.99}) {
    const double K = elliptic::comp_k(m);
    auto f = [&](double t) { return jacobi::jacobi_zeta(t, m) * jacobi::jacobi_sc(t, m); };
    for (int i = 0; i <= 40; ++i) {
      const double u = -K + 0.05 + (2 * K - 0.1) * i / 40.0;
      const double cf = jacobi::int_z_sc(u, m, 0);
      const double q = u >= 0 ? oracle::quad_1d(f, 0.0, u, detail::tight()).value
                              : -oracle::quad_1d(f, u, 0.0, detail::tight()).value;
      w.add(std::fabs(cf - q) / std::max(1.0, std::fabs(q)));
    }
    const double d = 1e-7;
    const double measured = jacobi::int_z_sc(K - d, m, 0) - jacobi::int_z_sc(K + d, m, 0);
    wj.add(detail::rel(measured, jacobi::int_z_sc_jump(m)));
    if (m == 0.85) jump085 = measured;
  }
  const double quoted = std::fabs(jump085 - 5.33) / 5.33;
  r.passed = w.value < 1e-7 && wj.value < 5e-3 && quoted < 5e-3;
  r.detail = detail::fmt("closed form max error %.3g (limit 1e-7); ", w.value) +
             detail::fmt("jump(0.85) = %.6f (vs 5.33: %.2g), ", jump085, quoted) +
             detail::fmt("max jump error vs pi^2/(2K sqrt(1-m)) %.3g (limit 5e-3)", wj.value);
  return r;
}

// 5. dI/dA and dI/dm against central differences with h-halving.
inline Result parameter_derivatives(const Options& opt) {
  Result r = start(5, "Parameter derivatives vs central differences");
  std::mt19937_64 g(opt.seed + 5);
  double min_order = 1e300, max_err = 0;
  const double h = 0.02;
  for (int n = 0; n < 50;) {
    const double m = detail::uniform(g, 0.05, 0.85), A = detail::uniform(g, -0.7, 0.7);
    const double th = detail::uniform(g, 0.3, 3.0);
    if (m + (std::fabs(A) + 0.05) * (std::fabs(A) + 0.05) >= 0.95) continue;
    ++n;
    const double dA = hypergeom::di_hyg_dA(m, A, th), dm = hypergeom::di_hyg_dm(m, A, th);
    auto fdA = [&](double s) { return (hypergeom::i_hyg(m, A + s, th) - hypergeom::i_hyg(m, A - s, th)) / (2 * s); };
    auto fdm = [&](double s) { return (hypergeom::i_hyg(m + s, A, th) - hypergeom::i_hyg(m - s, A, th)) / (2 * s); };
    const double eA1 = std::fabs(fdA(h) - dA), eA2 = std::fabs(fdA(h / 2) - dA);
    const double em1 = std::fabs(fdm(h) - dm), em2 = std::fabs(fdm(h / 2) - dm);
    min_order = std::min({min_order, detail::order(eA1, eA2), detail::order(em1, em2)});
    max_err = std::max({max_err, eA2 / std::max(1.0, std::fabs(dA)), em2 / std::max(1.0, std::fabs(dm))});
  }
  r.passed = min_order >= 1.9;
  r.detail = detail::fmt("50 points, min observed order %.3f (limit 1.9), max error at h = 0.01: %.3g", min_order,
                         max_err);
  return r;
}

// 6. Triple sum and the three single-sum rewritings against i_hyg.
inline Result alternative_series(const Options& opt) {
  Result r = start(6, "Triple sum and alternative series vs I_hyg");
  std::mt19937_64 g(opt.seed + 6);
  detail::Worst w;
  for (int n = 0; n < 20; ++n) {
    const double m = detail::uniform(g, 0.01, 0.5), A = detail::uniform(g, -0.5, 0.5);
    const double s = detail::uniform(g, 0.05, 0.5);
    const std::array<double, 5> v = {hypergeom::i_hyg(m, A, 2 * std::asin(s)), hypergeom::lauricella_f11_triple(m, A, s),
                                     hypergeom::i_hyg_alt(1, m, A, s), hypergeom::i_hyg_alt(2, m, A, s),
                                     hypergeom::i_hyg_alt(3, m, A, s)};
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b) w.add(std::fabs(v[a] - v[b]));
  }
  r.passed = w.value < 1e-8;
  r.detail = detail::fmt("20 points, max pairwise difference %.3g (limit 1e-8)", w.value);
  return r;
}

// 7. The Pi identity over a grid of (r, r0, z).
inline Result pi_identity(const Options&) {
  Result r = start(7, "Pi identity residual");
  detail::Worst w;
  int inside = 0, outside = 0;
  for (double z : {0.3, 1.0, 4.0})
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        const double rr = 0.2 + 2.8 * (i + 0.5) / 20, r0 = 0.2 + 2.8 * (j + 0.25) / 20;
        const auto s = fields::pi_identity_sides(rr, r0, z);
        w.add(std::fabs(s.lhs - s.rhs) / std::max(1.0, std::fabs(s.lhs)));
        (r0 > rr ? inside : outside)++;
      }
  r.passed = w.value < 1e-9 && inside > 0 && outside > 0;
  r.detail = detail::fmt("%.0f points with H = 1, ", inside) + detail::fmt("%.0f with H = 0; ", outside) +
             detail::fmt("max residual %.3g (limit 1e-9)", w.value);
  return r;
}

// 8. Cylinder phi against 3-D quadrature of the Coulomb integral.
inline Result cylinder_phi_oracle(const Options& opt) {
  Result r = start(8, "Cylinder phi vs 3-D Coulomb quadrature");
  if (!opt.full) {
    r.skipped = true;
    r.passed = true;
    r.detail = "full suite only";
    return r;
  }
  const fields::CylinderSpec c{1, 0.7, 1};
  std::mt19937_64 g(opt.seed + 8);
  oracle::QuadratureSpec q;
  q.rel_tol = 1e-9;
  q.abs_tol = 1e-13;
  detail::Worst w;
  for (int n = 0; n < 20;) {
    const double rr = detail::uniform(g, 0.0, 3.0), z = detail::uniform(g, -3.0, 3.0);
    const double dr = std::max(rr - c.R, 0.0), dz = std::max(std::fabs(z) - c.Z, 0.0);
    if (std::hypot(dr, dz) < 0.05 * c.R) continue;
    ++n;
    w.add(detail::rel(fields::phi_cyl(rr, z, c), oracle::coulomb_cylinder(rr, z, c, q).value, 0.0));
  }
  r.passed = w.value < 1e-5;
  r.detail = detail::fmt("20 exterior points, max relative error %.3g (limit 1e-5)", w.value);
  return r;
}

// 9. Far field along 8 rays at distance 100 max(R, Z).
inline Result far_field(const Options&) {
  Result r = start(9, "Far field phi sqrt(r^2+z^2) / Q");
  const fields::CylinderSpec c{1, 0.7, 1};
  const fields::TubeSpec t{1, 0.7, 1};
  double lo = 1e300, hi = -1e300;
  const double D = 100 * std::max(c.R, c.Z);
  for (int k = 0; k < 8; ++k) {
    const double a = -std::numbers::pi / 2 + std::numbers::pi * (k + 0.5) / 8;
    const double rr = D * std::cos(a), z = D * std::sin(a);
    for (double v : {fields::phi_cyl(rr, z, c) * D / c.charge(), fields::phi_tube(rr, z, t) * D / t.charge()}) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  r.passed = lo >= 0.999 && hi <= 1.001;
  r.detail = detail::fmt("ratio range [%.8f, %.8f] (limit [0.999, 1.001])", lo, hi);
  return r;
}

namespace detail {

using F2 = std::function<double(double, double)>;

// Worst observed order of |op_h f - target| under h-halving at the points.
struct OrderStats {
  double min_order = 1e300;
  double max_err = 0;
};

inline void add_order(OrderStats& s, double e1, double e2) {
  s.min_order = std::min(s.min_order, order(e1, e2));
  s.max_err = std::max(s.max_err, e2);
}

struct P {
  double r, z;
};

// Points with every stencil node at least `margin` from the lines r = R, |z| = Z.
inline std::vector<P> sample(std::mt19937_64& g, int n, double r0, double r1, double z0, double z1,
                             const std::function<bool(double, double)>& keep) {
  std::vector<P> out;
  while (static_cast<int>(out.size()) < n) {
    const double r = uniform(g, r0, r1), z = uniform(g, z0, z1);
    if (keep(r, z)) out.push_back({r, z});
  }
  return out;
}

}  // namespace detail

// 10. Laplace / Poisson residuals and the term-by-term decomposition.
inline Result pde_residuals(const Options& opt) {
  Result r = start(10, "Laplace/Poisson residuals and term decomposition");
  std::mt19937_64 g(opt.seed + 10);
  const fields::CylinderSpec c{1, 0.7, 1};
  const fields::TubeSpec t{1, 0.7, 1};
  const double h = 0.02, margin = 0.1, pi = std::numbers::pi;
  auto away = [&](double rr, double z) {
    return std::fabs(rr - 1) > margin && std::fabs(std::fabs(z) - 0.7) > margin && std::fabs(z) > margin && rr > margin;
  };
  auto ext = [&](double rr, double z) { return away(rr, z) && !(rr < 1 && std::fabs(z) < 0.7); };
  auto in = [&](double rr, double z) { return away(rr, z) && rr < 1 && std::fabs(z) < 0.7; };
  const auto pe = detail::sample(g, 10, 0.1, 3.0, -3.0, 3.0, ext);
  const auto pi_ = detail::sample(g, 10, 0.1, 1.0, -0.7, 0.7, in);
  const auto pt = detail::sample(g, 10, 0.1, 3.0, -3.0, 3.0, away);
  detail::OrderStats lap, pois, parts;
  double corr_err = 0;
  auto check = [&](detail::OrderStats& s, const detail::F2& f, const detail::P& p, double target) {
    const double e1 = std::fabs(oracle::fd_laplacian_cyl(f, p.r, p.z, h) - target);
    const double e2 = std::fabs(oracle::fd_laplacian_cyl(f, p.r, p.z, h / 2) - target);
    detail::add_order(s, e1, e2);
  };
  const detail::F2 phic = [&](double a, double b) { return fields::phi_cyl(a, b, c); };
  const detail::F2 phit = [&](double a, double b) { return fields::phi_tube(a, b, t); };
  const detail::F2 phid = [&](double a, double b) { return fields::phi_disk(a, b, 1, 1, fields::DiskForm::lass_blitzer); };
  const detail::F2 ell = [&](double a, double b) { return fields::phi_cyl_parts(a, b, c).ell; };
  const detail::F2 hyg = [&](double a, double b) { return fields::phi_cyl_parts(a, b, c).hyg; };
  const detail::F2 cor = [&](double a, double b) { return fields::phi_cyl_parts(a, b, c).corr; };
  for (const auto& p : pe) check(lap, phic, p, 0);
  for (const auto& p : pt) check(lap, phit, p, 0);
  for (const auto& p : pt) check(lap, phid, p, 0);
  for (const auto& p : pi_) check(pois, phic, p, -4 * pi * c.rho0);
  for (const auto* set : {&pe, &pi_}) {
    for (const auto& p : *set) {
      check(parts, ell, p, 0);
      check(parts, hyg, p, 0);
      const double src = -4 * pi * c.rho0 * (p.r < c.R && std::fabs(p.z) < c.Z ? 1.0 : 0.0);
      corr_err = std::max(corr_err, std::fabs(oracle::fd_laplacian_cyl(cor, p.r, p.z, h) - src));
    }
  }
  r.passed = lap.min_order >= 1.8 && pois.min_order >= 1.8 && parts.min_order >= 1.8 && corr_err < 1e-6;
  r.detail = detail::fmt("min order: Laplace %.3f, ", lap.min_order) + detail::fmt("Poisson %.3f, ", pois.min_order) +
             detail::fmt("phi_ell/phi_hyg %.3f (limit 1.8); ", parts.min_order) +
             detail::fmt("phi_corr source error %.3g (limit 1e-6)", corr_err);
  return r;
}

// 11. Conjugacy psi_r = r phi_z, psi_z = -r phi_r and the psi operator.
inline Result conjugacy(const Options& opt) {
  Result r = start(11, "Conjugacy of phi and psi, psi PDE");
  std::mt19937_64 g(opt.seed + 11);
  const fields::CylinderSpec c{1, 0.7, 1};
  const fields::TubeSpec t{1, 0.7, 1};
  const double h = 0.02, margin = 0.1;
  auto away = [&](double rr, double z) {
    return std::fabs(rr - 1) > margin && std::fabs(std::fabs(z) - 0.7) > margin && std::fabs(z) > margin && rr > margin;
  };
  auto ext = [&](double rr, double z) { return away(rr, z) && !(rr < 1 && std::fabs(z) < 0.7); };
  detail::OrderStats grad, op;
  auto run = [&](const detail::F2& phi, const detail::F2& psi, const std::vector<detail::P>& pts) {
    for (const auto& p : pts) {
      double er[2], ez[2], eo[2];
      for (int k = 0; k < 2; ++k) {
        const double s = k == 0 ? h : h / 2;
        const auto [pr, pz] = oracle::fd_gradient(phi, p.r, p.z, s);
        const auto [sr, sz] = oracle::fd_gradient(psi, p.r, p.z, s);
        er[k] = std::fabs(sr - p.r * pz);
        ez[k] = std::fabs(sz + p.r * pr);
        eo[k] = std::fabs(oracle::fd_psi_operator(psi, p.r, p.z, s));
      }
      detail::add_order(grad, er[0], er[1]);
      detail::add_order(grad, ez[0], ez[1]);
      detail::add_order(op, eo[0], eo[1]);
    }
  };
  run([&](double a, double b) { return fields::phi_cyl(a, b, c); },
      [&](double a, double b) { return fields::psi_cyl_value(a, b, c); },
      detail::sample(g, 20, 0.1, 3.0, -3.0, 3.0, ext));
  run([&](double a, double b) { return fields::phi_tube(a, b, t); },
      [&](double a, double b) { return fields::psi_tube_value(a, b, t); },
      detail::sample(g, 20, 0.1, 3.0, -3.0, 3.0, away));
  r.passed = grad.min_order >= 1.8 && op.min_order >= 1.8;
  r.detail = detail::fmt("min order: gradient relations %.3f, psi operator %.3f (limit 1.8)", grad.min_order,
                         op.min_order);
  return r;
}

// 12. Loop integral of grad psi around loops that do and do not thread the tube.
inline Result topological_charge(const Options&) {
  Result r = start(12, "Tube topological charge from loop integrals");
  const fields::TubeSpec t{1, 0.7, 1};
  const oracle::Field2 psi = [&](double a, double b) { return fields::psi_tube_value(a, b, t); };
  const std::vector<oracle::Point2> threading = {{0.5, -1}, {1.5, -1}, {1.5, 1}, {0.5, 1}};
  const std::vector<oracle::Point2> outside = {{1.5, -0.5}, {2.5, -0.5}, {2.5, 0.5}, {1.5, 0.5}};
  const double jump = t.psi_jump();
  const double a = oracle::loop_integral_grad(psi, threading, 1e-3);
  const double b = oracle::loop_integral_grad(psi, outside, 1e-3);
  const double ea = std::fabs(std::fabs(a) - jump) / jump;
  r.passed = ea < 1e-3 && std::fabs(b) < 1e-3 * jump;
  r.detail = detail::fmt("threading loop %.6f vs 8 pi R Z sigma0 = %.6f; ", a, jump) +
             detail::fmt("non-threading loop %.3g (limit %.4g)", b, 1e-3 * jump);
  return r;
}

// 13. The two disk forms agree; the on-axis value matches the elementary form.
inline Result disk_forms(const Options&) {
  Result r = start(13, "Disk potential forms and on-axis value");
  detail::Worst w, wa, wq;
  const double R = 1, sigma = 1;
  oracle::QuadratureSpec quad;
  quad.abs_tol = 1e-14;
  quad.rel_tol = 1e-12;
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 30; ++j) {
      const double rr = 0.05 + 2.95 * i / 29.0, z = -3 + 6 * (j + 0.5) / 30;
      if (std::fabs(rr - R) < 1e-3) continue;
      const double a = fields::phi_disk(rr, z, R, sigma, fields::DiskForm::lass_blitzer);
      const double b = fields::phi_disk(rr, z, R, sigma, fields::DiskForm::takahashi);
      w.add(detail::rel(a, b));
    }
  for (double z : {-2.0, -0.3, 0.0, 0.01, 0.7, 5.0}) {
    const double exact = 2 * std::numbers::pi * sigma * (std::hypot(R, z) - std::fabs(z));
    for (auto f : {fields::DiskForm::lass_blitzer, fields::DiskForm::takahashi})
      wa.add(detail::rel(fields::phi_disk(0, z, R, sigma, f), exact));
    if (z != 0) wq.add(detail::rel(oracle::coulomb_disk(0, z, R, sigma, quad).value, exact));
  }
  r.passed = w.value < 1e-10 && wa.value < 1e-12 && wq.value < 1e-10;
  r.detail = detail::fmt("form agreement %.3g (limit 1e-10); ", w.value) +
             detail::fmt("on-axis %.3g (limit 1e-12), quadrature on axis %.3g", wa.value, wq.value);
  return r;
}

// 14. psi_cyl and psi_tube against the brute-force field-line potential.
inline Result psi_oracle(const Options& opt) {
  Result r = start(14, "Cylinder and tube psi vs brute-force integral");
  std::mt19937_64 g(opt.seed + 14);
  const fields::CylinderSpec c{1, 0.7, 1};
  const fields::TubeSpec t{1, 0.7, 1};
  detail::Worst wc, wt;
  auto clear = [&](double rr, double z) {
    const double dr = std::max(rr - 1, 0.0), dz = std::max(std::fabs(z) - 0.7, 0.0);
    return std::hypot(dr, dz) >= 0.05 && std::fabs(z) >= 0.1;
  };
  auto clear_tube = [&](double rr, double z) {
    const double dr = std::fabs(rr - 1), dz = std::max(std::fabs(z) - 0.7, 0.0);
    return std::hypot(dr, dz) >= 0.05 && std::fabs(z) >= 0.1;
  };
  for (const auto& p : detail::sample(g, 10, 0.0, 3.0, -3.0, 3.0, clear))
    wc.add(detail::rel(fields::psi_cyl_value(p.r, p.z, c), oracle::brute_psi(p.r, p.z, c), 0.0));
  for (const auto& p : detail::sample(g, 10, 0.0, 3.0, -3.0, 3.0, clear_tube))
    wt.add(detail::rel(fields::psi_tube_value(p.r, p.z, t), oracle::brute_psi(p.r, p.z, t), 0.0));
  r.passed = wc.value < 1e-4 && wt.value < 1e-4;
  r.detail = detail::fmt("max relative error: cylinder %.3g, tube %.3g (limit 1e-4)", wc.value, wt.value);
  return r;
}

// 15. Identities of the special-function layer.
inline Result special_identities(const Options&) {
  Result r = start(15, "Special-function identities");
  detail::Worst leg, mod, swap, collapse, pyth, add, period;
  const double pi = std::numbers::pi;
  for (int i = 1; i < 20; ++i) {
    const double m = i / 20.0;
    const double K = elliptic::comp_k(m), E = elliptic::comp_e(m);
    const double Kp = elliptic::comp_k(1 - m), Ep = elliptic::comp_e(1 - m);
    leg.add(std::fabs(E * Kp + Ep * K - K * Kp - pi / 2));
    mod.add(detail::rel(elliptic::comp_k(m / (m - 1)), std::sqrt(1 - m) * K));
    for (double u : {-2.3, -0.4, 0.3, 1.1, 3.7}) {
      const double sn = jacobi::jacobi_sn(u, m), cn = jacobi::jacobi_cn(u, m);
      pyth.add(std::fabs(sn * sn + cn * cn - 1));
      const double v = 0.37;
      const double lhs = jacobi::jacobi_zeta(u + v, m);
      const double rhs = jacobi::jacobi_zeta(u, m) + jacobi::jacobi_zeta(v, m) -
                         m * sn * jacobi::jacobi_sn(v, m) * jacobi::jacobi_sn(u + v, m);
      add.add(std::fabs(lhs - rhs));
      period.add(std::fabs(jacobi::jacobi_zeta(u + 2 * K, m) - jacobi::jacobi_zeta(u, m)));
    }
  }
  for (auto [x, y] : {std::pair{0.3, 0.2}, std::pair{0.1, 0.6}, std::pair{-0.4, 0.3}, std::pair{0.45, -0.5}}) {
    const double a = hypergeom::appell_f2(0.5, 0.3, 0.7, 1.2, 1.6, x, y);
    const double b = hypergeom::appell_f2(0.5, 0.7, 0.3, 1.6, 1.2, y, x);
    swap.add(detail::rel(a, b));
    collapse.add(detail::rel(hypergeom::appell_f2(0.5, 0.3, 0.7, 1.2, 1.6, x, 0.0),
                             hypergeom::gauss_2f1(0.5, 0.3, 1.2, x)));
  }
  const double worst_tight = std::max({leg.value, swap.value, collapse.value, pyth.value, add.value, period.value});
  r.passed = worst_tight < 1e-12 && mod.value < 1e-10;
  r.detail = detail::fmt("Legendre %.2g, ", leg.value) + detail::fmt("modular %.2g, ", mod.value) +
             detail::fmt("F2 swap %.2g, F2->2F1 %.2g, ", swap.value, collapse.value) +
             detail::fmt("sn^2+cn^2 %.2g, ", pyth.value) +
             detail::fmt("zeta addition %.2g, quasi-period %.2g (limits 1e-12, modular 1e-10)", add.value, period.value);
  return r;
}

inline constexpr int criterion_count = 15;

inline Result run(int id, const Options& opt) {
  using Fn = Result (*)(const Options&);
  static constexpr Fn table[criterion_count] = {ihyg_identity,       definite_reduction, surface_value,
                                                z_sc_formula,        parameter_derivatives, alternative_series,
                                                pi_identity,         cylinder_phi_oracle, far_field,
                                                pde_residuals,       conjugacy,          topological_charge,
                                                disk_forms,          psi_oracle,         special_identities};
  if (id < 1 || id > criterion_count) throw domain_error("verify: criterion id must lie in 1..15");
  const auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = table[id - 1](opt);
  } catch (const std::exception& e) {
    r.id = id;
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::vector<Result> run_all(const Options& opt) {
  std::vector<Result> out;
  for (int id = 1; id <= criterion_count; ++id) out.push_back(run(id, opt));
  return out;
}

// "PASS [01] name: detail (0.12 s)"
inline std::string format(const Result& r) {
  char head[32];
  std::snprintf(head, sizeof head, "%s [%02d] ", r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL"), r.id);
  char tail[32];
  std::snprintf(tail, sizeof tail, " (%.2f s)", r.seconds);
  return head + r.name + ": " + r.detail + tail;
}

}  // namespace appellfield::verify
