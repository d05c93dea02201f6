// SPDX-License-Identifier: Apache-2.0
#pragma once

// Umbrella header for the numerical library.  The grid and cli headers also
// need the vendored json and CLI11 headers on the include path.

#include "elliptic.hpp"
#include "error.hpp"
#include "fields.hpp"
#include "hypergeom.hpp"
#include "jacobi.hpp"
#include "oracle.hpp"
#include "series_control.hpp"
