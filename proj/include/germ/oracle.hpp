// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "germ/bipoly.hpp"

namespace germ {

struct OracleTrial {
  Rat s;           // Pythagorean rotation parameter
  int j = 0;       // scale at which the count stabilized
  int count = 0;   // stabilized fiber intersection count
  int parity = 0;  // count mod 2
};

struct OracleResult {
  int parity = 0;
  std::vector<OracleTrial> trials;
};

// Counts intersections of the curve with rotated vertical lines x = 2^-j
// inside windows |y| <= 2^-floor(j/2), via Sturm counts. Declares a trial
// when three consecutive scales agree; all trials must agree.
OracleResult parity_by_projection(const BiPoly& f, int trials);

struct SampledDirection {
  double x = 0, y = 0;  // approximate unit vector
};

// Report-only: approximate tangent directions from sign-change bisection on
// shrinking rational circles. radii_exponents lists j for radius 2^-j.
std::vector<SampledDirection> sample_tangent_directions(
    const BiPoly& f, const std::vector<int>& radii_exponents);

}  // namespace germ
