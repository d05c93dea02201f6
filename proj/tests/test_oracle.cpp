// SPDX-License-Identifier: Apache-2.0
#include <appellfield/fields.hpp>
#include <appellfield/oracle.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace appellfield;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("1-D quadrature on smooth and endpoint-singular integrands", "[oracle]") {
  const auto s = oracle::quad_1d([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK_THAT(s.value, WithinRel(2.0, 1e-13));
  CHECK(s.error < 1e-10);
  oracle::QuadratureSpec q;
  q.singular_endpoints = {true, false};
  CHECK_THAT(oracle::quad_1d([](double x) { return 1 / std::sqrt(x); }, 0.0, 1.0, q).value, WithinRel(2.0, 1e-10));
  q.singular_endpoints = {false, true};
  CHECK_THAT(oracle::quad_1d([](double x) { return std::log(1 - x); }, 0.0, 1.0, q).value, WithinRel(-1.0, 1e-10));
}

TEST_CASE("Breakpoints and reversed limits", "[oracle]") {
  const std::vector<double> pts{-1.0, 0.0, 2.0};
  CHECK_THAT(oracle::quad_1d([](double x) { return std::fabs(x); }, std::span<const double>(pts)).value,
             WithinRel(2.5, 1e-13));
}

TEST_CASE("Error estimate is honest and shrinks with the tolerance", "[oracle]") {
  auto f = [](double x) { return 1 / (1 + 25 * x * x); };
  const double exact = 2 * std::atan(5.0) / 5;
  double prev = 1;
  for (double tol : {1e-6, 2.5e-7, 6.25e-8}) {
    oracle::QuadratureSpec q;
    q.rel_tol = tol;
    q.abs_tol = 1e-300;
    const auto r = oracle::quad_1d(f, -1.0, 1.0, q);
    CHECK(std::fabs(r.value - exact) <= std::max(r.error, 1e-15));
    CHECK(std::fabs(r.value - exact) <= tol * exact);
    CHECK(r.error <= prev);
    prev = r.error;
  }
}

TEST_CASE("2-D and 3-D quadrature", "[oracle]") {
  oracle::Domain3 cube;
  CHECK_THAT(oracle::quad_3d([](double, double, double) { return 1.0; }, cube).value, WithinRel(1.0, 1e-14));
  oracle::Domain2 tri;
  tri.y1 = [](double x) { return x; };
  CHECK_THAT(oracle::quad_2d([](double x, double y) { return x * y; }, tri).value, WithinRel(0.125, 1e-13));
}

TEST_CASE("Disk Coulomb integral on axis matches the elementary form", "[oracle]") {
  for (double z : {0.3, -1.5}) {
    const double exact = 2 * std::numbers::pi * (std::hypot(1.0, z) - std::fabs(z));
    CHECK_THAT(oracle::coulomb_disk(0.0, z, 1.0, 1.0).value, WithinRel(exact, 1e-9));
  }
}

TEST_CASE("Cylinder and tube Coulomb integrals match the closed forms", "[oracle]") {
  const fields::CylinderSpec c{1, 0.7, 1};
  const fields::TubeSpec t{1, 0.7, 1};
  CHECK_THAT(oracle::coulomb_cylinder(1.5, 0.3, c).value, WithinRel(2.91176150833312841, 1e-8));
  CHECK_THAT(oracle::coulomb_tube(2.0, -1.0, t).value, WithinRel(3.99187851436665002, 1e-8));
}

TEST_CASE("Brute-force psi of a point charge and mirror antisymmetry", "[oracle]") {
  const fields::PointCharge p{2.0, 0.0};
  CHECK_THAT(oracle::brute_psi(1.0, 1.5, p), WithinRel(2.0 * 1.5 / std::hypot(1.0, 1.5), 1e-10));
  const fields::TubeSpec t{1, 0.7, 1};
  CHECK_THAT(oracle::brute_psi(1.7, -0.6, t), WithinRel(-oracle::brute_psi(1.7, 0.6, t), 1e-9));
}

TEST_CASE("Finite-difference operators", "[oracle]") {
  const oracle::Field2 r2 = [](double r, double) { return r * r; };
  const oracle::Field2 z = [](double, double zz) { return zz; };
  CHECK_THAT(oracle::fd_laplacian_cyl(r2, 1.0, 0.0, 0.01), WithinAbs(4.0, 1e-9));
  CHECK_THAT(oracle::fd_laplacian_cyl(z, 1.0, 0.0, 0.01), WithinAbs(0.0, 1e-9));
  // r^2 solves the psi operator's equation psi_rr - psi_r / r = 0.
  CHECK_THAT(oracle::fd_psi_operator(r2, 1.3, 0.2, 0.01), WithinAbs(0.0, 1e-9));
  CHECK_THROWS_AS(oracle::fd_laplacian_cyl(r2, 0.01, 0.0, 0.02), geometry_error);
}

TEST_CASE("Finite-difference Laplacian converges at second order", "[oracle]") {
  const oracle::Field2 f = [](double r, double z) { return std::sin(r) * std::exp(z); };
  const double r = 0.9, z = 0.3, exact = std::cos(r) / r * std::exp(z);
  const double e1 = std::fabs(oracle::fd_laplacian_cyl(f, r, z, 0.02) - exact);
  const double e2 = std::fabs(oracle::fd_laplacian_cyl(f, r, z, 0.01) - exact);
  const double order = std::log2(e1 / e2);
  CHECK(order >= 1.8);
  CHECK(order <= 2.2);
}

TEST_CASE("Loop integrals", "[oracle]") {
  const oracle::Field2 f = [](double r, double z) { return r * r * z + std::sin(z); };
  const std::vector<oracle::Point2> loop = {{0.5, -1}, {1.5, -1}, {1.5, 1}, {0.5, 1}};
  CHECK_THAT(oracle::loop_integral_grad(f, loop, 1e-3), WithinAbs(0.0, 1e-9));
  const fields::TubeSpec t{1, 0.7, 1};
  const oracle::Field2 psi = [&](double r, double z) { return fields::psi_tube_value(r, z, t); };
  CHECK_THROWS_AS(oracle::loop_integral_grad(psi, std::vector<oracle::Point2>{{0.5, 0.3}, {1.0, 0.3}, {0.5, 0.5}}, 1e-3),
                  geometry_error);
  CHECK_THROWS_AS(oracle::loop_integral_grad(psi, std::vector<oracle::Point2>{{0.5, 0.3}, {1.5, 0.3}}, 1e-3),
                  domain_error);
}

TEST_CASE("Quadrature errors", "[oracle][errors]") {
  oracle::QuadratureSpec q;
  q.max_subdivisions = 10;
  CHECK_THROWS_AS(q.validate(), domain_error);
  oracle::QuadratureSpec tight;
  tight.max_subdivisions = 32;
  tight.rel_tol = 1e-15;
  tight.abs_tol = 1e-300;
  CHECK_THROWS_AS(oracle::quad_1d([](double x) { return std::sin(1 / x); }, 1e-4, 1.0, tight), convergence_error);
  CHECK_THROWS_AS(oracle::quad_1d([](double x) { return 1 / x; }, -1.0, 1.0), convergence_error);
}
