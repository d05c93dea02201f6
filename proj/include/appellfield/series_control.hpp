// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "error.hpp"

namespace appellfield {

// Truncation policy shared by every infinite series in the library.
struct SeriesControl {
  double rel_tol = 1e-15;
  long max_terms = 1L << 20;
  // |sin(theta/2)| below this switches i_hyg to direct quadrature.
  double small_s_threshold = 0.05;
  // Convergence ratio m/(1-A^2) above which theta = pi evaluations are
  // anchored at the surface value instead of summed directly.
  double near_boundary_ratio = 0.99;

  void validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-4))
      throw domain_error("SeriesControl: rel_tol must lie in (0, 1e-4]");
    if (max_terms < 64)
      throw domain_error("SeriesControl: max_terms must be >= 64");
    if (!(small_s_threshold >= 0.0 && small_s_threshold < 1.0))
      throw domain_error("SeriesControl: small_s_threshold must lie in [0, 1)");
    if (!(near_boundary_ratio > 0.0 && near_boundary_ratio <= 1.0))
      throw domain_error("SeriesControl: near_boundary_ratio must lie in (0, 1]");
  }

  // Defaults, with APPELLFIELD_MAX_TERMS overriding max_terms when set.
  static SeriesControl from_environment() {
    SeriesControl ctl;
    if (const char* env = std::getenv("APPELLFIELD_MAX_TERMS"); env && *env) {
      long v = 0;
      const char* end = env + std::strlen(env);
      auto [p, ec] = std::from_chars(env, end, v);
      if (ec != std::errc{} || p != end)
        throw domain_error(std::string("APPELLFIELD_MAX_TERMS is not an integer: ") + env);
      ctl.max_terms = v;
    }
    ctl.validate();
    return ctl;
  }
};

}  // namespace appellfield
