// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace appellfield {

// Argument outside the mathematical domain of an operation.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Elliptic characteristic with n*sin^2(phi) >= 1.
struct singular_characteristic_error : domain_error {
  using domain_error::domain_error;
};

// sc(u|m) and related quantities at u = (2k+1)K.
struct pole_error : domain_error {
  using domain_error::domain_error;
};

// m + A^2 too close to 1 for the interior series.
struct boundary_error : domain_error {
  using domain_error::domain_error;
};

// Degenerate or excluded observation geometry (edge circle, charge sheet, ...).
struct geometry_error : domain_error {
  using domain_error::domain_error;
};

// Series hit its term cap or an adaptive rule ran out of subdivisions.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace appellfield
