// SPDX-License-Identifier: Apache-2.0
// Reference potentials: mpmath quadrature of the Coulomb integrals (z' integral
// done analytically, remaining r', theta' integrals by mp.quad at 20 digits).
// In the disk plane the reference is the classical 4 sigma R E(r^2 / R^2).

#include <appellfield/fields.hpp>
#include <appellfield/oracle.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <numbers>

using namespace appellfield;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const fields::CylinderSpec cyl{1, 0.7, 1};
const fields::TubeSpec tube{1, 0.7, 1};

// Mixed third derivative d^3 f / (dr dtheta dz) by central differences.
double d3(const std::function<double(double, double, double)>& f, double r, double t, double z, double h) {
  double s = 0;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) s += a * b * c * f(r + a * h, t + b * h, z + c * h);
  return s / (8 * h * h * h);
}

// Mixed second derivative d^2 f / (dtheta dz), Richardson-extrapolated in h.
double d2(const std::function<double(double, double)>& f, double t, double z, double h) {
  auto raw = [&](double k) {
    double s = 0;
    for (int b : {-1, 1})
      for (int c : {-1, 1}) s += b * c * f(t + b * k, z + c * k);
    return s / (4 * k * k);
  };
  return (4 * raw(h / 2) - raw(h)) / 3;
}

}  // namespace

TEST_CASE("Auxiliary geometry invariants", "[fields]") {
  for (double r : {0.3, 1.0, 2.2})
    for (double r0 : {0.0, 0.5, 1.0, 3.0})
      for (double z : {-1.2, 0.0, 0.4}) {
        if (r == r0 && z == 0) continue;
        const auto g = fields::aux(r, z, r0);
        CHECK_THAT(g.m + g.one_minus_m, WithinAbs(1.0, 1e-15));
        CHECK(g.A * g.A <= g.one_minus_m * (1 + 1e-15));
        CHECK_THAT(g.surface_gap(), WithinAbs(std::sqrt(g.one_minus_m) - std::fabs(g.A), 1e-14));
        CHECK_THAT(g.N + g.one_minus_N, WithinAbs(1.0, 1e-15));
        CHECK_THAT(g.L(std::numbers::pi), WithinAbs(std::sqrt((r - r0) * (r - r0) + z * z), 1e-14));
        if (z != 0) {
          CHECK_THAT(g.n_plus + g.one_minus_n_plus, WithinAbs(1.0, 1e-14));
          CHECK_THAT(g.n_minus + g.one_minus_n_minus, WithinRel(1.0, 1e-13));
        }
      }
  CHECK_THROWS_AS(fields::aux(0, 0, 0), geometry_error);
  CHECK_THROWS_AS(fields::aux(-1, 0, 1), domain_error);
}

TEST_CASE("Indefinite cylinder integrals differentiate back to their integrands", "[fields]") {
  const double r0 = 1.1;
  auto I = [&](double r, double t, double z) {
    return fields::i_cyl_trig(r, t, z, r0) + fields::i_cyl_ell(r, t, z, r0) + fields::i_cyl_hyg(r, t, z, r0);
  };
  auto J = [&](double r, double t, double z) { return fields::j_cyl_trig(r, t, z, r0) + fields::j_cyl_ell(r, t, z, r0); };
  for (auto [r, t, z] : {std::tuple{0.8, 1.2, 0.5}, std::tuple{1.5, 2.0, -0.7}, std::tuple{0.4, 0.7, 1.3}}) {
    const double L = fields::aux(r, z, r0).L(t);
    CHECK_THAT(d3(I, r, t, z, 2e-3), WithinRel(r / L, 1e-5));
    const double j = -r0 * z * (r0 + r * std::cos(t)) * r / (L * (L * L - z * z));
    CHECK_THAT(d3(J, r, t, z, 2e-3), WithinRel(j, 1e-5));
  }
}

TEST_CASE("Indefinite tube integrals differentiate back to their integrands", "[fields]") {
  const double r = 1.0, r0 = 0.6;
  for (auto [t, z] : {std::pair{1.2, 0.5}, std::pair{2.1, -0.9}}) {
    const double L = fields::aux(r, z, r0).L(t);
    auto I = [&](double tt, double zz) { return fields::i_tube(r, tt, zz, r0); };
    auto J = [&](double tt, double zz) { return fields::j_tube(r, tt, zz, r0); };
    CHECK_THAT(d2(I, t, z, 4e-3), WithinRel(1 / L, 1e-8));
    CHECK_THAT(d2(J, t, z, 4e-3), WithinRel(-r0 * z * (r0 + r * std::cos(t)) / (L * (L * L - z * z)), 1e-8));
  }
}

TEST_CASE("Cylinder phi against Coulomb references", "[fields]") {
  CHECK_THAT(fields::phi_cyl(1.5, 0.3, cyl), WithinRel(2.91176150833312841, 1e-12));
  CHECK_THAT(fields::phi_cyl(0.4, -0.2, cyl), WithinRel(5.9986579405644092, 1e-12));
  CHECK_THAT(fields::phi_cyl(0.6, 1.4, cyl), WithinRel(2.79091252387526298, 1e-12));
  CHECK_THAT(fields::phi_cyl(0.0, 0.0, cyl), WithinRel(6.39078774070140795, 1e-12));
  const auto p = fields::phi_cyl_parts(1.5, 0.3, cyl);
  CHECK(p.total() == fields::phi_cyl(1.5, 0.3, cyl));
}

TEST_CASE("Cylinder phi is continuous across the surfaces", "[fields]") {
  for (double z : {0.2, 0.69, 1.5}) {
    const double on = fields::phi_cyl(1.0, z, cyl);
    CHECK_THAT(fields::phi_cyl(1.0 - 1e-8, z, cyl), WithinAbs(on, 1e-6));
    CHECK_THAT(fields::phi_cyl(1.0 + 1e-8, z, cyl), WithinAbs(on, 1e-6));
  }
  for (double r : {0.0, 0.5, 1.6}) {
    const double on = fields::phi_cyl(r, 0.7, cyl);
    CHECK_THAT(fields::phi_cyl(r, 0.7 - 1e-8, cyl), WithinAbs(on, 1e-6));
    CHECK_THAT(fields::phi_cyl(r, 0.7 + 1e-8, cyl), WithinAbs(on, 1e-6));
  }
}

TEST_CASE("Tube and disk phi against Coulomb references", "[fields]") {
  CHECK_THAT(fields::phi_tube(0.5, 0.2, tube), WithinRel(8.40502328492599825, 1e-12));
  CHECK_THAT(fields::phi_tube(2.0, -1.0, tube), WithinRel(3.99187851436665002, 1e-12));
  for (auto form : {fields::DiskForm::lass_blitzer, fields::DiskForm::takahashi}) {
    CHECK_THAT(fields::phi_disk(0.5, 0.4, 1, 1, form), WithinRel(3.93642963730864829, 1e-12));
    CHECK_THAT(fields::phi_disk(1.7, -0.6, 1, 1, form), WithinRel(1.78662257674199264, 1e-12));
    CHECK_THAT(fields::phi_disk(0.3, 0.0, 1, 1, form), WithinRel(6.139333859692996172, 1e-12));
  }
}

TEST_CASE("Tube phi on the sheet matches 2-D quadrature", "[fields][oracle]") {
  const double v = oracle::coulomb_tube(1.0, 0.3, tube).value;
  CHECK_THAT(fields::phi_tube(1.0, 0.3, tube), WithinRel(v, 1e-9));
}

TEST_CASE("Symmetry in z", "[fields]") {
  CHECK_THAT(fields::phi_cyl(0.8, -1.1, cyl), WithinRel(fields::phi_cyl(0.8, 1.1, cyl), 1e-14));
  CHECK_THAT(fields::psi_cyl_value(1.8, -0.4, cyl), WithinRel(-fields::psi_cyl_value(1.8, 0.4, cyl), 1e-13));
  CHECK_THAT(fields::psi_tube_value(0.5, -0.9, tube), WithinRel(-fields::psi_tube_value(0.5, 0.9, tube), 1e-13));
}

TEST_CASE("psi on the axis beyond the body equals Q sgn(z)", "[fields]") {
  for (double z : {1.0, 5.0, 30.0}) {
    CHECK_THAT(fields::psi_cyl_value(0.0, z, cyl), WithinRel(cyl.charge(), 1e-12));
    CHECK_THAT(fields::psi_cyl_value(0.0, -z, cyl), WithinRel(-cyl.charge(), 1e-12));
    CHECK_THAT(fields::psi_tube_value(0.0, z, tube), WithinRel(tube.charge(), 1e-12));
  }
  // Far out the closed form cancels like (|z| / R)^3; 100 max(R, Z) keeps 1e-9.
  CHECK_THAT(fields::psi_cyl_value(0.0, 100.0, cyl), WithinRel(cyl.charge(), 1e-9));
}

TEST_CASE("psi inside the cylinder is undefined", "[fields]") {
  const auto s = fields::psi_cyl(0.5, 0.0, cyl);
  CHECK_FALSE(s.psi_defined());
  CHECK(std::isfinite(s.phi));
  CHECK_THROWS_AS(fields::psi_cyl_value(0.5, 0.0, cyl), geometry_error);
  CHECK(fields::psi_cyl(1.5, 0.0, cyl).psi_defined());
  CHECK(fields::undefined_psi_marker == "undefined-inside-charge");
}

TEST_CASE("Tube psi sheets differ by the topological charge", "[fields]") {
  const double v0 = fields::psi_tube_value(0.5, 0.3, tube, 0);
  CHECK_THAT(fields::psi_tube_value(0.5, 0.3, tube, 1) - v0, WithinRel(tube.psi_jump(), 1e-14));
  CHECK_THAT(v0 - fields::psi_tube_value(0.5, 0.3, tube, -1), WithinRel(tube.psi_jump(), 1e-14));
  CHECK_THAT(tube.psi_jump(), WithinRel(17.592918860102842, 1e-15));
  const auto s = fields::psi_tube(0.5, 0.3, tube, 1);
  CHECK(s.branch == 1);
  CHECK(s.psi_defined());
}

TEST_CASE("psi matches the brute-force field-line integral", "[fields][oracle]") {
  CHECK_THAT(fields::psi_cyl_value(1.6, 0.5, cyl), WithinRel(oracle::brute_psi(1.6, 0.5, cyl), 1e-5));
  CHECK_THAT(fields::psi_tube_value(0.4, -1.0, tube), WithinRel(oracle::brute_psi(0.4, -1.0, tube), 1e-5));
}

TEST_CASE("Point charges", "[fields]") {
  CHECK_THAT(fields::psi_point(3.0, 4.0, 2.0), WithinRel(1.6, 1e-15));
  const fields::PointCharge cs[] = {{1.0, 0.5}, {-1.0, -0.5}};
  CHECK_THAT(fields::phi_point(0.0, 2.0, cs), WithinRel(1 / 1.5 - 1 / 2.5, 1e-15));
  CHECK_THAT(fields::psi_point(0.0, 2.0, cs), WithinAbs(0.0, 1e-15));
  CHECK_THROWS_AS(fields::psi_point(0.0, 0.5, cs), geometry_error);
}

TEST_CASE("Pi identity holds on both sides of r = r0", "[fields]") {
  CHECK(fields::pi_identity_residual(0.5, 1.3, 0.4) < 1e-12);
  CHECK(fields::pi_identity_residual(1.3, 0.5, 0.4) < 1e-12);
  CHECK_THROWS_AS(fields::pi_identity_sides(1.0, 1.0, 0.4), domain_error);
  CHECK_THROWS_AS(fields::pi_identity_sides(1.0, 2.0, 0.0), domain_error);
}

TEST_CASE("Field geometry errors", "[fields][errors]") {
  CHECK_THROWS_AS(fields::phi_cyl(1.0, 0.7, cyl), geometry_error);
  CHECK_THROWS_AS(fields::phi_disk(1.0, 0.0, 1, 1, fields::DiskForm::takahashi), geometry_error);
  CHECK_THROWS_AS(fields::psi_tube_value(1.0, 0.3, tube), geometry_error);
  CHECK_THROWS_AS(fields::phi_cyl(-0.1, 0.0, cyl), domain_error);
  CHECK_THROWS_AS(fields::phi_cyl(0.5, 0.0, fields::CylinderSpec{-1, 1, 1}), domain_error);
  CHECK_THROWS_AS(fields::i_cyl_hyg(1.0, 4.0, 0.3, 0.5), domain_error);
}
