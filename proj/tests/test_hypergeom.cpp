// SPDX-License-Identifier: Apache-2.0
// Reference values: mpmath (hyp2f1, hyper, appellf1, appellf2, quad of the defining integrals).

#include <appellfield/hypergeom.hpp>
#include <appellfield/oracle.hpp>
#include <appellfield/series_control.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <numbers>

using namespace appellfield;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Brute-force F2 double sum in long double, rectangular truncation.
long double f2_brute(long double a, long double b, long double b2, long double c, long double c2, long double x,
                     long double y) {
  long double total = 0;
  long double row = 1;  // term (j, 0)
  for (int j = 0; j < 400; ++j) {
    long double t = row;
    for (int l = 0; l < 400; ++l) {
      total += t;
      t *= (a + j + l) * (b2 + l) * y / ((l + 1) * (c2 + l));
    }
    row *= (a + j) * (b + j) * x / ((j + 1) * (c + j));
  }
  return total;
}

double ihyg_quad(double m, double A, double theta) {
  oracle::QuadratureSpec q;
  q.abs_tol = 1e-15;
  q.rel_tol = 1e-13;
  auto f = [&](double t) {
    const double s = std::sin(t / 2);
    return std::atanh(A / std::sqrt(1 - m * s * s));
  };
  return oracle::quad_1d(f, 0.0, theta, q).value;
}

}  // namespace

TEST_CASE("Gauss and generalized hypergeometric series", "[hypergeom]") {
  CHECK_THAT(hypergeom::gauss_2f1(0.5, 0.3, 1.2, 0.7), WithinRel(1.13814213384713266, 1e-14));
  CHECK_THAT(hypergeom::gauss_2f1(1, 1, 2, -0.9), WithinRel(0.713170984635994191, 1e-14));
  CHECK_THAT(hypergeom::gauss_2f1(1, 1, 2, -0.9), WithinRel(std::log(1.9) / 0.9, 1e-14));
  CHECK_THAT(hypergeom::pfq_4f3(0.5, 0.5, 1, 1, 1.5, 2, 2, 0.4), WithinRel(1.01821798360692673, 1e-14));
  const double a[] = {0.5, 0.3};
  const double b[] = {1.2};
  CHECK_THAT(hypergeom::pfq(a, b, 0.7), WithinRel(hypergeom::gauss_2f1(0.5, 0.3, 1.2, 0.7), 1e-14));
}

TEST_CASE("Appell F1 and F2 against reference values", "[hypergeom]") {
  CHECK_THAT(hypergeom::appell_f2(0.5, 0.3, 0.7, 1.2, 1.6, 0.3, 0.2), WithinRel(1.10014120315670574, 1e-14));
  CHECK_THAT(hypergeom::appell_f2(0.5, 0.5, 1, 1, 1.5, 0.6, -0.3), WithinRel(1.08301395051009108, 1e-13));
  CHECK_THAT(hypergeom::appell_f1(0.5, 0.3, 0.7, 1.2, 0.3, -0.4), WithinRel(0.941414263729598459, 1e-14));
  CHECK(hypergeom::appell_f2(0.5, 0.5, 1, 1, 1.5, 0, 0) == 1.0);
}

TEST_CASE("Appell F2 against a brute-force long double double sum", "[hypergeom]") {
  for (auto [x, y] : {std::pair{0.2, 0.3}, std::pair{-0.25, 0.4}, std::pair{0.1, -0.5}, std::pair{0.45, 0.45}}) {
    const double v = hypergeom::appell_f2(0.5, 0.5, 1, 1, 1.5, x, y);
    const double ref = static_cast<double>(f2_brute(0.5L, 0.5L, 1, 1, 1.5L, x, y));
    CHECK_THAT(v, WithinRel(ref, 1e-13));
  }
}

TEST_CASE("I_hyg against reference values", "[hypergeom]") {
  CHECK_THAT(hypergeom::i_hyg(0.5, 0.3, 2.0), WithinRel(0.674784536677021828, 1e-13));
  CHECK_THAT(hypergeom::i_hyg(0.9, -0.3, std::numbers::pi), WithinRel(-1.92822324966305092, 1e-13));
  CHECK_THAT(hypergeom::i_hyg(0.2, 0.85, 1.0), WithinRel(1.28195295773223761, 1e-13));
  CHECK_THAT(hypergeom::i_hyg_pi(0.3, 0.6), WithinRel(2.47214432873938734, 1e-13));
  CHECK_THAT(hypergeom::i_hyg_pi(0.64, 0.59), WithinRel(3.4982728146810463, 1e-12));
  hypergeom::IhygArgs args;
  args.m = 0.5;
  args.A = 0.3;
  args.theta = 2.0;
  CHECK(hypergeom::i_hyg(args) == hypergeom::i_hyg(0.5, 0.3, 2.0));
}

TEST_CASE("I_hyg is odd in A and in theta", "[hypergeom]") {
  const double v = hypergeom::i_hyg(0.4, 0.5, 1.7);
  CHECK_THAT(hypergeom::i_hyg(0.4, -0.5, 1.7), WithinRel(-v, 1e-15));
  CHECK_THAT(hypergeom::i_hyg(0.4, 0.5, -1.7), WithinRel(-v, 1e-15));
  CHECK(hypergeom::i_hyg(0.4, 0.0, 1.7) == 0.0);
}

TEST_CASE("I_hyg near the boundary m + A^2 = 1 matches quadrature", "[hypergeom]") {
  for (double gap : {1e-2, 1e-4, 1e-6}) {
    const double m = 0.6, A = std::sqrt(1 - m - gap);
    CHECK_THAT(hypergeom::i_hyg_pi(m, A), WithinRel(ihyg_quad(m, A, std::numbers::pi), 1e-9));
    CHECK_THAT(hypergeom::i_hyg(m, A, 2.5), WithinRel(ihyg_quad(m, A, 2.5), 1e-9));
  }
}

TEST_CASE("Surface value: both forms and reference values", "[hypergeom]") {
  CHECK_THAT(hypergeom::i_hyg_surface(0.2), WithinRel(6.62473021543337014, 1e-13));
  CHECK_THAT(hypergeom::i_hyg_surface(0.5), WithinRel(4.6705005336488635, 1e-13));
  CHECK_THAT(hypergeom::i_hyg_surface(0.9), WithinRel(2.31238209652836671, 1e-13));
  for (double m : {0.05, 0.33, 0.34, 0.7, 0.99})
    CHECK_THAT(hypergeom::detail::surface_series(m, SeriesControl{}),
               WithinRel(hypergeom::detail::surface_quadrature(m), 1e-10));
  // Approach from inside: the gap closes like sqrt(A* - A), so at a relative
  // gap of 1e-8 the value still sits 1e-4 below the surface value.
  const double m = 0.5;
  const double near = hypergeom::i_hyg_pi(m, std::sqrt(1 - m) * (1 - 1e-8));
  CHECK_THAT(near, WithinRel(4.670056231118466540, 1e-11));
  CHECK(near < hypergeom::i_hyg_surface(m));
  CHECK_THAT(near, WithinRel(hypergeom::i_hyg_surface(m), 2e-4));
}

TEST_CASE("Parameter derivatives against reference values", "[hypergeom]") {
  CHECK_THAT(hypergeom::di_hyg_dA(0.4, 0.2, 1.5), WithinRel(1.62527177862050808, 1e-12));
  CHECK_THAT(hypergeom::di_hyg_dm(0.4, 0.2, 1.5), WithinRel(0.0318191883656575944, 1e-11));
}

TEST_CASE("Triple sum and alternatives agree with I_hyg", "[hypergeom]") {
  const double m = 0.3, A = 0.25, s = 0.4;
  const double v = hypergeom::i_hyg(m, A, 2 * std::asin(s));
  CHECK_THAT(hypergeom::lauricella_f11_triple(m, A, s), WithinRel(v, 1e-12));
  for (int k = 1; k <= 3; ++k) CHECK_THAT(hypergeom::i_hyg_alt(k, m, A, s), WithinRel(v, 1e-12));
}

TEST_CASE("Hypergeometric domain, boundary and convergence errors", "[hypergeom][errors]") {
  CHECK_THROWS_AS(hypergeom::gauss_2f1(0.5, 0.5, -1.0, 0.3), domain_error);
  CHECK_THROWS_AS(hypergeom::appell_f2(0.5, 0.5, 1, 1, 1.5, 0.7, 0.6), convergence_error);
  CHECK_THROWS_AS(hypergeom::appell_f1(0.5, 0.5, 1, 1, 1.2, 0.1), convergence_error);
  CHECK_THROWS_AS(hypergeom::i_hyg(0.5, 0.8, 1.0), domain_error);
  CHECK_THROWS_AS(hypergeom::i_hyg(0.5, std::sqrt(0.5 - 1e-11), 1.0), boundary_error);
  CHECK_THROWS_AS(hypergeom::i_hyg(0.5, 0.3, 4.0), domain_error);
  CHECK_THROWS_AS(hypergeom::i_hyg_surface(1.0), domain_error);
  CHECK_THROWS_AS(hypergeom::i_hyg_alt(4, 0.1, 0.1, 0.1), domain_error);
  SeriesControl tiny;
  tiny.max_terms = 64;
  CHECK_THROWS_AS(hypergeom::gauss_2f1(0.5, 0.3, 1.2, 0.999, tiny), convergence_error);
  tiny.max_terms = 3;
  CHECK_THROWS_AS(tiny.validate(), domain_error);
  SeriesControl bad;
  bad.rel_tol = -1;
  CHECK_THROWS_AS(bad.validate(), domain_error);
}

TEST_CASE("Term cap can be set from the environment", "[hypergeom]") {
  ::setenv("APPELLFIELD_MAX_TERMS", "123", 1);
  CHECK(SeriesControl::from_environment().max_terms == 123);
  ::setenv("APPELLFIELD_MAX_TERMS", "abc", 1);
  CHECK_THROWS_AS(SeriesControl::from_environment(), domain_error);
  ::unsetenv("APPELLFIELD_MAX_TERMS");
  CHECK(SeriesControl::from_environment().max_terms == SeriesControl{}.max_terms);
}
