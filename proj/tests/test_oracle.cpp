// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "germ/invariants.hpp"
#include "germ/oracle.hpp"
#include "germ/parse.hpp"

using namespace germ;

TEST_CASE("projection-count parity matches the exact computation") {
  for (const char* s :
       {"y", "y^2 - x^3", "y^3 - x^2", "y*(y^2 - x^3)", "x*y", "y^3 - x^4",
        "(y - x)^2 - (y + x)^3", "y^2 - x^5", "(y - x)*(y + x)*(y - 2*x)",
        "y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7"}) {
    CAPTURE(s);
    BiPoly f = parse_poly(s);
    GermAnalysis a = analyze_poly(f);
    OracleResult o = parity_by_projection(f, 3);
    CHECK(o.parity == a.parity);
    REQUIRE(o.trials.size() == 3);
    for (const auto& t : o.trials) {
      CHECK(t.parity == o.parity);
      CHECK(t.count >= 0);
      CHECK(t.j >= 1);
    }
  }
}

TEST_CASE("trials use distinct rotation parameters") {
  OracleResult o = parity_by_projection(parse_poly("y^2 - x^3"), 3);
  REQUIRE(o.trials.size() == 3);
  CHECK(o.trials[0].s != o.trials[1].s);
  CHECK(o.trials[1].s != o.trials[2].s);
  CHECK(o.trials[0].s != o.trials[2].s);
}

TEST_CASE("sampled tangent directions approach the exact half-lines") {
  // cusp: both half-branches tend to (1, 0)
  auto dirs = sample_tangent_directions(parse_poly("y^2 - x^3"), {18, 20, 22});
  REQUIRE(!dirs.empty());
  for (const auto& d : dirs) {
    CHECK(std::abs(std::hypot(d.x, d.y) - 1.0) < 1e-9);
    CHECK(std::abs(d.x - 1.0) < 1e-3);
    CHECK(std::abs(d.y) < 2e-2);
  }

  // line + cusp: directions cluster near (1,0) and (-1,0)
  auto dirs2 =
      sample_tangent_directions(parse_poly("y*(y^2 - x^3)"), {18, 20, 22});
  bool east = false, west = false;
  for (const auto& d : dirs2) {
    if (d.x > 0.999) east = true;
    if (d.x < -0.999) west = true;
  }
  CHECK(east);
  CHECK(west);
}

TEST_CASE("oracle edge cases") {
  // an isolated origin has empty fibers: count 0, even parity
  OracleResult o = parity_by_projection(parse_poly("x^2 + y^2"), 2);
  CHECK(o.parity == 0);
  for (const auto& t : o.trials) CHECK(t.count == 0);
  CHECK_THROWS_AS(parity_by_projection(BiPoly(), 3), Error);
}
