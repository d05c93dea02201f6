// SPDX-License-Identifier: Apache-2.0
#pragma once

// Closed-form potentials phi and field-line potentials psi of a uniformly
// charged cylinder, tube and disk, and of point charges.  Units: 4 pi eps0 = 1.
//
// The indefinite integrals follow the signature I(r, theta, z; r0): r is the
// integration (source) radius and r0 the observation radius.  The assemblies
// evaluate them at r = R, theta = pi, z = beta Z - z_obs, r0 = r_obs.

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "elliptic.hpp"
#include "error.hpp"
#include "hypergeom.hpp"
#include "series_control.hpp"

namespace appellfield::fields {

// Derived geometry of the kernel L = sqrt(r^2 + r0^2 + 2 r r0 cos(theta) + z^2).
// Complements (1 - m, 1 - n, ...) are formed without cancellation.  At z = 0
// the n- quantities are infinite and every term using them carries a z factor.
struct AuxGeometry {
  double r = 0;
  double z = 0;
  double r0 = 0;
  double L0 = 0;           // sqrt((r + r0)^2 + z^2)
  double m = 0;            // 4 r r0 / L0^2
  double one_minus_m = 1;  // ((r - r0)^2 + z^2) / L0^2
  double A = 0;            // z / L0
  double q = 0;            // sqrt(r0^2 + z^2)
  double n_plus = 0, n_minus = 0;
  double one_minus_n_plus = 1, one_minus_n_minus = 1;
  double pref_plus = 0, pref_minus = 0;  // 1 - (n/2)(1 + r/r0)
  int s_plus = 0, s_minus = 0;           // sgn(q -+ r)
  double N = 0;                          // 4 r r0 / (r + r0)^2
  double one_minus_N = 1;                // ((r - r0) / (r + r0))^2

  // L at angle theta.
  double L(double theta) const {
    return std::sqrt(r * r + r0 * r0 + 2 * r * r0 * std::cos(theta) + z * z);
  }

  // (L0 / 2 r0) s_alpha sqrt(n_alpha (n_alpha - m)), alpha = +1 or -1; r0 > 0, z != 0.
  double alternate_prefactor(int alpha) const {
    const double n = alpha > 0 ? n_plus : n_minus;
    const int s = alpha > 0 ? s_plus : s_minus;
    return L0 / (2 * r0) * s * std::sqrt(n * (n - m));
  }

  // A* - |A| = sqrt(1 - m) - |A| >= 0.
  double surface_gap() const {
    const double d = r - r0;
    const double w = std::sqrt(d * d + z * z);
    if (w == 0) return 0;
    return d * d / (L0 * (w + std::fabs(z)));
  }
};

inline AuxGeometry aux(double r, double z, double r0) {
  if (!std::isfinite(r) || !std::isfinite(z) || !std::isfinite(r0)) throw domain_error("aux: non-finite argument");
  if (r < 0 || r0 < 0) throw domain_error("aux: radii must be nonnegative");
  if (r == 0 && r0 == 0 && z == 0) throw geometry_error("aux: degenerate geometry r = r0 = z = 0");
  AuxGeometry g;
  g.r = r;
  g.z = z;
  g.r0 = r0;
  const double sum = r + r0, diff = r - r0, z2 = z * z;
  const double L02 = sum * sum + z2;
  g.L0 = std::sqrt(L02);
  g.m = 4 * r * r0 / L02;
  g.one_minus_m = (diff * diff + z2) / L02;
  g.A = z / g.L0;
  g.q = std::sqrt(r0 * r0 + z2);
  const double qp = g.q + r0;
  g.n_plus = 2 * r0 / qp;
  g.one_minus_n_plus = z2 / (qp * qp);
  g.pref_plus = (g.q - r) / qp;
  if (z != 0) {
    g.n_minus = -2 * r0 * qp / z2;
    g.one_minus_n_minus = 1 + 2 * r0 * qp / z2;
    g.pref_minus = 1 + sum * qp / z2;
  } else {
    g.n_minus = -std::numeric_limits<double>::infinity();
    g.one_minus_n_minus = std::numeric_limits<double>::infinity();
    g.pref_minus = std::numeric_limits<double>::infinity();
  }
  g.s_plus = (g.q > r) - (g.q < r);
  g.s_minus = 1;
  g.N = sum > 0 ? 4 * r * r0 / (sum * sum) : 0;
  g.one_minus_N = sum > 0 ? (diff / sum) * (diff / sum) : 1;
  return g;
}

struct CylinderSpec {
  double R = 1;
  double Z = 1;
  double rho0 = 1;

  void validate() const {
    if (!(std::isfinite(R) && R > 0) || !(std::isfinite(Z) && Z > 0))
      throw domain_error("CylinderSpec: R and Z must be finite and positive");
    if (!std::isfinite(rho0)) throw domain_error("CylinderSpec: rho0 must be finite");
  }
  double charge() const { return 2 * std::numbers::pi * R * R * Z * rho0; }
};

struct TubeSpec {
  double R = 1;
  double Z = 1;
  double sigma0 = 1;

  void validate() const {
    if (!(std::isfinite(R) && R > 0) || !(std::isfinite(Z) && Z > 0))
      throw domain_error("TubeSpec: R and Z must be finite and positive");
    if (!std::isfinite(sigma0)) throw domain_error("TubeSpec: sigma0 must be finite");
  }
  double charge() const { return 4 * std::numbers::pi * R * Z * sigma0; }
  // Jump between adjacent sheets of psi: 8 pi R Z sigma0 = 2Q.
  double psi_jump() const { return 2 * charge(); }
};

enum class DiskForm { lass_blitzer, takahashi };

struct DiskSpec {
  double R = 1;
  double sigma = 1;
  DiskForm form = DiskForm::lass_blitzer;

  void validate() const {
    if (!(std::isfinite(R) && R > 0)) throw domain_error("DiskSpec: R must be finite and positive");
    if (!std::isfinite(sigma)) throw domain_error("DiskSpec: sigma must be finite");
  }
  double charge() const { return std::numbers::pi * R * R * sigma; }
};

inline constexpr std::string_view undefined_psi_marker = "undefined-inside-charge";

// phi, psi (empty inside the charged region) and the psi branch index.
struct FieldSample {
  double phi = std::numeric_limits<double>::quiet_NaN();
  std::optional<double> psi;
  long branch = 0;

  bool psi_defined() const { return psi.has_value(); }
};

namespace detail {

// Relative distance below which a point is treated as lying on a surface.
inline constexpr double snap_rel = 1e-12;
inline constexpr double edge_rel = 1e-9;

// H with H(0) = 1/2; |x| <= tol counts as 0.
inline double heaviside(double x, double tol = 0) { return x > tol ? 1.0 : (x < -tol ? 0.0 : 0.5); }

inline double sgn(double x) { return (x > 0) - (x < 0); }

inline void check_point(double r, double z, const char* who) {
  if (!std::isfinite(r) || !std::isfinite(z)) throw domain_error(std::string(who) + ": non-finite point");
  if (r < 0) throw domain_error(std::string(who) + ": r must be nonnegative");
}

// Complete K and E of the geometry's parameter.
struct CompleteKE {
  double K = 0;
  double E = 0;
};

inline CompleteKE complete_ke(const AuxGeometry& g) {
  CompleteKE out;
  out.E = elliptic::detail::comp_e_c(g.m, g.one_minus_m);
  out.K = g.one_minus_m > 0 ? elliptic::detail::comp_k_c(g.one_minus_m) : std::numeric_limits<double>::infinity();
  return out;
}

// (r - r0) / (r + r0) * Pi(4 r r0 / (r + r0)^2 | m); 0 at r = r0, the mean of
// the one-sided limits.
inline double n_pi_term(const AuxGeometry& g) {
  if (g.r == g.r0) return 0.0;
  const double ratio = (g.r - g.r0) / (g.r + g.r0);
  return ratio * elliptic::detail::comp_pi_c(g.N, g.one_minus_N, g.one_minus_m);
}

// z^k sum_alpha pref_alpha Pi(n_alpha | m) for k = 0, 1, 2; the z^k factor is
// folded into pref_minus, which grows like 1/z^2.
inline double pref_pi_sum(const AuxGeometry& g, int k) {
  const double z = g.z;
  const double zk = k == 0 ? 1.0 : (k == 1 ? z : z * z);
  const double pi_p = elliptic::detail::comp_pi_c(g.n_plus, g.one_minus_n_plus, g.one_minus_m);
  const double pi_m = elliptic::detail::comp_pi_c(g.n_minus, g.one_minus_n_minus, g.one_minus_m);
  const double qp = g.q + g.r0, sum = g.r + g.r0;
  double zk_pref_minus;
  if (k == 0) zk_pref_minus = g.pref_minus;
  else if (k == 1) zk_pref_minus = z + sum * qp / z;
  else zk_pref_minus = z * z + sum * qp;
  return zk * g.pref_plus * pi_p + zk_pref_minus * pi_m;
}

inline bool z_negligible(const AuxGeometry& g) { return std::fabs(g.z) <= snap_rel * (g.r + g.r0); }

// I_hyg(m, A; pi) at the geometry, including the surface A^2 = 1 - m.
inline double ihyg_pi_at(const AuxGeometry& g, const SeriesControl& ctl) {
  if (g.A == 0 || g.one_minus_m == 0) return 0.0;
  const double gap = g.surface_gap();
  if (gap == 0 && g.m > 0) {
    const double v = hypergeom::i_hyg_surface(g.m, ctl);
    return g.A < 0 ? -v : v;
  }
  return hypergeom::detail::ihyg_pi_value(g.m, g.A, ctl, gap);
}

inline void check_theta(double theta, const char* who) {
  if (!std::isfinite(theta) || std::fabs(theta) > std::numbers::pi)
    throw domain_error(std::string(who) + ": theta must lie in [-pi, pi]");
}

inline bool is_pi(double theta) { return std::fabs(theta) == std::numbers::pi; }

// Incomplete F, E and the two Pi groups at amplitude theta/2.
struct Incomplete {
  double F = 0, E = 0, PiN = 0, PiSum = 0;
};

inline Incomplete incomplete(const AuxGeometry& g, double theta, int k) {
  const double phi = 0.5 * theta;
  Incomplete out;
  out.F = elliptic::ellip_f(phi, g.m);
  out.E = elliptic::ellip_e(phi, g.m);
  if (g.r != g.r0) out.PiN = (g.r - g.r0) / (g.r + g.r0) * elliptic::ellip_pi(g.N, phi, g.m);
  if (g.z != 0) {
    const double zk = k == 1 ? g.z : g.z * g.z;
    const double qp = g.q + g.r0, sum = g.r + g.r0;
    const double zk_pref_minus = k == 1 ? g.z + sum * qp / g.z : g.z * g.z + sum * qp;
    out.PiSum = zk * g.pref_plus * elliptic::ellip_pi(g.n_plus, phi, g.m) +
                zk_pref_minus * elliptic::ellip_pi(g.n_minus, phi, g.m);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Indefinite integrals.  theta = pi uses complete integrals with exact
// complements; other theta are for checks on branch-safe subdomains.

// Trigonometric part of int int int r dr dtheta dz / L; zero at theta = pi.
inline double i_cyl_trig(double r, double theta, double z, double r0) {
  detail::check_theta(theta, "i_cyl_trig");
  if (detail::is_pi(theta) || theta == 0) return 0.0;
  const double L = aux(r, z, r0).L(theta);
  const double st = std::sin(theta), ct = std::cos(theta);
  const double u = r + r0 * ct;
  double v = -r0 * r0 * std::sin(2 * theta) / 4 * std::atanh(z / L) - z * r0 * st * std::atanh(u / L);
  v += r0 * r0 * std::cos(2 * theta) / 4 * std::atan(L * r0 * st / (z * u));
  return v;
}

// Elliptic part of int int int r dr dtheta dz / L.
inline double i_cyl_ell(double r, double theta, double z, double r0) {
  detail::check_theta(theta, "i_cyl_ell");
  const AuxGeometry g = aux(r, z, r0);
  if (detail::z_negligible(g) || theta == 0) return 0.0;
  const double L0 = g.L0;
  if (detail::is_pi(theta)) {
    const auto ke = detail::complete_ke(g);
    double v = -3 * z * g.q * g.q / (4 * L0) * ke.K + 3 * z * L0 / 4 * ke.E;
    v += z * r * r / (4 * L0) * detail::n_pi_term(g);
    v += (2 * z * z - r0 * r0) / (4 * L0) * detail::pref_pi_sum(g, 1);
    return theta < 0 ? -v : v;
  }
  const auto in = detail::incomplete(g, theta, 1);
  return -3 * z * g.q * g.q / (4 * L0) * in.F + 3 * z * L0 / 4 * in.E + z * r * r / (4 * L0) * in.PiN +
         (2 * z * z - r0 * r0) / (4 * L0) * in.PiSum;
}

// Hypergeometric part (r^2 / 2) I_hyg(m, A; theta).
inline double i_cyl_hyg(double r, double theta, double z, double r0, const SeriesControl& ctl = {}) {
  detail::check_theta(theta, "i_cyl_hyg");
  const AuxGeometry g = aux(r, z, r0);
  if (detail::is_pi(theta)) {
    const double v = r * r / 2 * detail::ihyg_pi_at(g, ctl);
    return theta < 0 ? -v : v;
  }
  return r * r / 2 * hypergeom::i_hyg(g.m, g.A, theta, ctl);
}

// Trigonometric part of int int int -r0 z (r0 + r cos) r dr dtheta dz / (L (L^2 - z^2)).
inline double j_cyl_trig(double r, double theta, double z, double r0) {
  detail::check_theta(theta, "j_cyl_trig");
  if (detail::is_pi(theta) || theta == 0) return 0.0;
  const double L = aux(r, z, r0).L(theta);
  const double st = std::sin(theta), ct = std::cos(theta);
  const double u = r + r0 * ct;
  const double r03 = r0 * r0 * r0;
  double v = ((3 * r03 - 4 * r0 * z * z) * st - r03 * std::sin(3 * theta)) / 8 * std::atanh(u / L);
  v -= r0 * r0 * z * std::sin(2 * theta) / 2 * std::atanh(z / L);
  v += r0 * r0 * z * std::cos(2 * theta) / 2 * std::atan(L * r0 * st / (z * u));
  v += L * r0 * st * (-r + 3 * r0 * ct) / 6;
  return v;
}

// Elliptic part of the same integral.
inline double j_cyl_ell(double r, double theta, double z, double r0) {
  detail::check_theta(theta, "j_cyl_ell");
  if (theta == 0) return 0.0;
  const AuxGeometry g = aux(r, z, r0);
  const double L0 = g.L0, z2 = z * z;
  const double ce = L0 * (z2 - 2 * (r * r + r0 * r0)) / 6;
  const double dr2 = r * r - r0 * r0;
  const double ck = (2 * dr2 * dr2 + z2 * (r0 * r0 - 2 * r * r - z2)) / (6 * L0);
  if (detail::is_pi(theta)) {
    const auto ke = detail::complete_ke(g);
    double v = ce * ke.E + (ck == 0 ? 0.0 : ck * ke.K);
    if (!detail::z_negligible(g)) {
      v += z2 * r * r / (2 * L0) * detail::n_pi_term(g);
      v -= r0 * r0 / (2 * L0) * detail::pref_pi_sum(g, 2);
    }
    return theta < 0 ? -v : v;
  }
  const auto in = detail::incomplete(g, theta, 2);
  return ce * in.E + ck * in.F + z2 * r * r / (2 * L0) * in.PiN - r0 * r0 / (2 * L0) * in.PiSum;
}

// int int dtheta dz / L = I_hyg(m, A; theta).
inline double i_tube(double r, double theta, double z, double r0, const SeriesControl& ctl = {}) {
  detail::check_theta(theta, "i_tube");
  const AuxGeometry g = aux(r, z, r0);
  if (detail::is_pi(theta)) {
    const double v = detail::ihyg_pi_at(g, ctl);
    return theta < 0 ? -v : v;
  }
  return hypergeom::i_hyg(g.m, g.A, theta, ctl);
}

// int int -r0 z (r0 + r cos) dtheta dz / (L (L^2 - z^2)).
inline double j_tube(double r, double theta, double z, double r0) {
  detail::check_theta(theta, "j_tube");
  if (theta == 0) return 0.0;
  const AuxGeometry g = aux(r, z, r0);
  const double L0 = g.L0;
  const double ck = (r * r - r0 * r0) / L0;
  if (detail::is_pi(theta)) {
    const auto ke = detail::complete_ke(g);
    double v = (ck == 0 ? 0.0 : ck * ke.K) - L0 * ke.E;
    if (!detail::z_negligible(g)) v += z * z / L0 * detail::n_pi_term(g);
    return theta < 0 ? -v : v;
  }
  const auto in = detail::incomplete(g, theta, 2);
  return ck * in.F - L0 * in.E + z * z / L0 * in.PiN;
}

// ---------------------------------------------------------------------------
// Cylinder.

struct CylinderPhiParts {
  double hyg = 0;
  double ell = 0;
  double corr = 0;

  double total() const { return hyg + ell + corr; }
};

namespace detail {

// Snap points within snap_rel of a surface onto it so that prefactor limits
// and H(0) = 1/2 are applied consistently.
struct Snapped {
  double r = 0, z = 0;
};

inline Snapped snap(double r, double z, double R, double Z) {
  const double tol = snap_rel * (R + r);
  Snapped p{r, z};
  if (r < snap_rel * R) p.r = 0;
  if (std::fabs(r - R) <= tol) p.r = R;
  if (std::fabs(std::fabs(z) - Z) <= tol) p.z = z < 0 ? -Z : Z;
  if (std::fabs(z) <= snap_rel * (R + Z)) p.z = 0;
  return p;
}

inline void check_edge(double r, double z, double R, double Z, const char* who) {
  if (std::fabs(r - R) < edge_rel * R && std::fabs(std::fabs(z) - Z) < edge_rel * R)
    throw geometry_error(std::string(who) + ": point lies on the edge circle (r, |z|) = (R, Z)");
}

}  // namespace detail

// phi = phi_hyg + phi_ell + phi_corr, each part returned separately.
inline CylinderPhiParts phi_cyl_parts(double r, double z, const CylinderSpec& spec, const SeriesControl& ctl = {}) {
  spec.validate();
  ctl.validate();
  detail::check_point(r, z, "phi_cyl");
  detail::check_edge(r, z, spec.R, spec.Z, "phi_cyl");
  const auto p = detail::snap(r, z, spec.R, spec.Z);
  const double R = spec.R, Z = spec.Z, rho = spec.rho0, pi = std::numbers::pi;
  CylinderPhiParts out;
  for (int beta : {1, -1}) {
    const double zb = beta * Z - p.z;
    out.hyg += 2 * beta * rho * i_cyl_hyg(R, pi, zb, p.r, ctl);
    out.ell += 2 * beta * rho * i_cyl_ell(R, pi, zb, p.r);
  }
  const double az = std::fabs(p.z);
  out.corr = pi * rho * (p.r * p.r * detail::heaviside(p.r - R) - 2 * (p.z * p.z + Z * Z)) * detail::heaviside(Z - az) -
             4 * pi * rho * Z * az * detail::heaviside(az - Z);
  return out;
}

inline double phi_cyl(double r, double z, const CylinderSpec& spec, const SeriesControl& ctl = {}) {
  return phi_cyl_parts(r, z, spec, ctl).total();
}

// True when (r, z) lies in the closed cylinder r <= R, |z| <= Z (within snap_rel).
inline bool inside_closed_cylinder(double r, double z, double R, double Z) {
  const double tol = detail::snap_rel * (R + r);
  return r <= R + tol && std::fabs(z) <= Z + tol;
}

// psi = psi_ell + psi_corr outside the cylinder.
inline double psi_cyl_value(double r, double z, const CylinderSpec& spec) {
  spec.validate();
  detail::check_point(r, z, "psi_cyl");
  if (inside_closed_cylinder(r, z, spec.R, spec.Z))
    throw geometry_error("psi_cyl: psi is undefined inside the charged region");
  const auto p = detail::snap(r, z, spec.R, spec.Z);
  const double R = spec.R, Z = spec.Z, rho = spec.rho0, pi = std::numbers::pi;
  double v = 0;
  for (int beta : {1, -1}) v += 2 * beta * rho * j_cyl_ell(R, pi, beta * Z - p.z, p.r);
  const double az = std::fabs(p.z), r2 = p.r * p.r;
  v += -2 * pi * rho * r2 * p.z * detail::heaviside(Z - az) +
       2 * pi * rho * Z * detail::sgn(p.z) * (-r2 + R * R * detail::heaviside(R - p.r)) * detail::heaviside(az - Z);
  return v;
}

// phi everywhere; psi outside the closed cylinder, empty (undefined) inside.
inline FieldSample psi_cyl(double r, double z, const CylinderSpec& spec, const SeriesControl& ctl = {}) {
  FieldSample s;
  s.phi = phi_cyl(r, z, spec, ctl);
  if (!inside_closed_cylinder(r, z, spec.R, spec.Z)) s.psi = psi_cyl_value(r, z, spec);
  return s;
}

// ---------------------------------------------------------------------------
// Tube.

inline double phi_tube(double r, double z, const TubeSpec& spec, const SeriesControl& ctl = {}) {
  spec.validate();
  ctl.validate();
  detail::check_point(r, z, "phi_tube");
  const auto p = detail::snap(r, z, spec.R, spec.Z);
  double v = 0;
  for (int beta : {1, -1}) v += 2 * beta * i_tube(spec.R, std::numbers::pi, beta * spec.Z - p.z, p.r, ctl);
  return spec.sigma0 * spec.R * v;
}

// True on the open charge sheet r = R, |z| < Z (within snap_rel).
inline bool on_tube_sheet(double r, double z, double R, double Z) {
  const double tol = detail::snap_rel * (R + r);
  return std::fabs(r - R) <= tol && std::fabs(z) < Z - tol;
}

// Branch-0 psi off the charge sheet; the cut is the disk z = 0, r < R.
inline double psi_tube_value(double r, double z, const TubeSpec& spec, long branch = 0) {
  spec.validate();
  detail::check_point(r, z, "psi_tube");
  if (on_tube_sheet(r, z, spec.R, spec.Z)) throw geometry_error("psi_tube: point lies on the charged tube surface");
  const auto p = detail::snap(r, z, spec.R, spec.Z);
  const double R = spec.R, Z = spec.Z, sig = spec.sigma0, pi = std::numbers::pi;
  double v = 0;
  for (int beta : {1, -1}) v += 2 * beta * j_tube(R, pi, beta * Z - p.z, p.r);
  v = sig * R * v + 4 * pi * sig * R * Z * detail::sgn(p.z) * detail::heaviside(R - p.r);
  return v + static_cast<double>(branch) * spec.psi_jump();
}

inline FieldSample psi_tube(double r, double z, const TubeSpec& spec, long branch = 0, const SeriesControl& ctl = {}) {
  FieldSample s;
  s.phi = phi_tube(r, z, spec, ctl);
  s.psi = psi_tube_value(r, z, spec, branch);
  s.branch = branch;
  return s;
}

// ---------------------------------------------------------------------------
// Disk of radius R in the plane z = 0.

inline double phi_disk(double r, double z, double R, double sigma, DiskForm form) {
  DiskSpec{R, sigma, form}.validate();
  detail::check_point(r, z, "phi_disk");
  const double tol = detail::snap_rel * (R + r);
  if (std::fabs(r - R) <= tol && std::fabs(z) <= tol) throw geometry_error("phi_disk: point lies on the disk edge");
  if (std::fabs(r - R) <= tol) r = R;
  if (std::fabs(z) <= tol) z = 0;
  const double pi = std::numbers::pi;
  const double az = std::fabs(z);
  if (r < detail::snap_rel * R) return sigma * 2 * pi * (std::hypot(R, z) - az);
  const AuxGeometry g = aux(R, z, r);
  const auto ke = detail::complete_ke(g);
  const double L0 = g.L0, z2 = z * z;
  double v = L0 * L0 * ke.E;
  if (form == DiskForm::lass_blitzer) {
    v += (R * R - r * r) * ke.K;
    if (z != 0) v += z2 * detail::n_pi_term(g);  // n_pi_term carries (R - r)/(R + r)
    return sigma * (2 / L0 * v - 2 * pi * az * detail::heaviside(R - r));
  }
  v += (R * R - r * r - z2) * ke.K;
  if (z != 0) v += detail::pref_pi_sum(g, 2);
  return sigma * (2 / L0 * v - 2 * pi * az);
}

inline double phi_disk(double r, double z, const DiskSpec& spec) { return phi_disk(r, z, spec.R, spec.sigma, spec.form); }

// ---------------------------------------------------------------------------
// Point charges.

struct PointCharge {
  double q = 1;
  double z_offset = 0;
};

// q z' / sqrt(r^2 + z'^2) with z' = z - z_offset.
inline double psi_point(double r, double z, double q, double z_offset = 0) {
  detail::check_point(r, z, "psi_point");
  const double zp = z - z_offset;
  if (r == 0 && zp == 0) throw geometry_error("psi_point: point coincides with the charge");
  return q * zp / std::hypot(r, zp);
}

inline double psi_point(double r, double z, std::span<const PointCharge> charges) {
  double v = 0;
  for (const auto& c : charges) v += psi_point(r, z, c.q, c.z_offset);
  return v;
}

inline double phi_point(double r, double z, std::span<const PointCharge> charges) {
  detail::check_point(r, z, "phi_point");
  double v = 0;
  for (const auto& c : charges) {
    const double d = std::hypot(r, z - c.z_offset);
    if (d == 0) throw geometry_error("phi_point: point coincides with a charge");
    v += c.q / d;
  }
  return v;
}

// Both sides of
//   sum_alpha pref_alpha Pi(n_alpha | m) = K(m) + (r-r0)/(r+r0) Pi(4 r r0/(r+r0)^2 | m) + (pi L0 / |z|) H(r0 - r).
struct IdentitySides {
  double lhs = 0;
  double rhs = 0;
};

inline IdentitySides pi_identity_sides(double r, double r0, double z) {
  if (!std::isfinite(r) || !std::isfinite(r0) || !std::isfinite(z)) throw domain_error("pi_identity: non-finite argument");
  if (z == 0) throw domain_error("pi_identity: z must be nonzero");
  if (r == r0) throw domain_error("pi_identity: r must differ from r0");
  if (r <= 0 || r0 <= 0) throw domain_error("pi_identity: radii must be positive");
  const AuxGeometry g = aux(r, z, r0);
  IdentitySides out;
  out.lhs = detail::pref_pi_sum(g, 0);
  out.rhs = elliptic::detail::comp_k_c(g.one_minus_m) + detail::n_pi_term(g) +
            std::numbers::pi * g.L0 / std::fabs(z) * detail::heaviside(r0 - r);
  return out;
}

// |LHS - RHS| of the identity above.
inline double pi_identity_residual(double r, double r0, double z) {
  const auto s = pi_identity_sides(r, r0, z);
  return std::fabs(s.lhs - s.rhs);
}

}  // namespace appellfield::fields
