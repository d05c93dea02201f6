// SPDX-License-Identifier: Apache-2.0
#pragma once

// Small adaptive Gauss-Legendre integrator used inside the library where a
// closed form has no convergent series.  The verification oracles use a
// separate Gauss-Kronrod implementation (oracle.hpp) so the two never share
// a rule.

#include <array>
#include <cmath>
#include <numbers>
#include <algorithm>
#include <vector>

#include "../error.hpp"

namespace appellfield::detail {

template <int N>
struct legendre_rule {
  std::array<double, N> x{};
  std::array<double, N> w{};
};

template <int N>
legendre_rule<N> build_legendre_rule() {
  legendre_rule<N> r;
  for (int i = 0; i < N; ++i) {
    long double z = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (N + 0.5L));
    long double dp = 0;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1, p1 = z;
      for (int k = 2; k <= N; ++k) {
        long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = N * (z * p1 - p0) / (z * z - 1);
      long double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-19L) break;
    }
    long double p0 = 1, p1 = z;
    for (int k = 2; k <= N; ++k) {
      long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = N * (z * p1 - p0) / (z * z - 1);
    r.x[i] = static_cast<double>(z);
    r.w[i] = static_cast<double>(2 / ((1 - z * z) * dp * dp));
  }
  return r;
}

template <int N>
const legendre_rule<N>& legendre() {
  static const legendre_rule<N> rule = build_legendre_rule<N>();
  return rule;
}

template <class F>
double gl_fixed(F&& f, double a, double b) {
  const auto& r = legendre<20>();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0;
  for (int i = 0; i < 20; ++i) s += r.w[i] * f(c + h * r.x[i]);
  return s * h;
}

struct gl_piece {
  double a, b, value, error;
  bool operator<(const gl_piece& o) const { return error < o.error; }
};

template <class F>
gl_piece gl_piece_for(F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double whole = gl_fixed(f, a, b);
  const double halves = gl_fixed(f, a, mid) + gl_fixed(f, mid, b);
  return {a, b, halves, std::fabs(halves - whole)};
}

// Globally adaptive bisection: the piece with the largest error estimate is
// split until the summed estimate meets max(abs_tol, rel_tol * |value|).
template <class F>
double gl_adaptive(F f, double a, double b, double rel_tol = 1e-14, double abs_tol = 1e-300,
                   int max_pieces = 4000) {
  if (a == b) return 0.0;
  std::vector<gl_piece> heap{gl_piece_for(f, a, b)};
  double value = heap.front().value, error = heap.front().error;
  while (error > std::fmax(abs_tol, rel_tol * std::fabs(value))) {
    if (static_cast<int>(heap.size()) >= max_pieces)
      throw convergence_error("adaptive Gauss-Legendre: subdivision limit reached");
    std::pop_heap(heap.begin(), heap.end());
    const gl_piece top = heap.back();
    const double mid = 0.5 * (top.a + top.b);
    if (!(mid > top.a && mid < top.b)) {
      std::push_heap(heap.begin(), heap.end());
      break;
    }
    heap.back() = gl_piece_for(f, top.a, mid);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(gl_piece_for(f, mid, top.b));
    std::push_heap(heap.begin(), heap.end());
    value = 0;
    error = 0;
    for (const auto& p : heap) {
      value += p.value;
      error += p.error;
    }
  }
  return value;
}

}  // namespace appellfield::detail
