// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germ/parse.hpp"

using namespace germ;

TEST_CASE("polynomial expressions parse to exact terms") {
  BiPoly f = parse_poly("y^2 - x^3");
  CHECK(f.coeff(0, 2) == 1);
  CHECK(f.coeff(3, 0) == -1);
  CHECK(f.terms().size() == 2);

  BiPoly g = parse_poly("y*(y^2 - x^3)");
  CHECK(g.coeff(0, 3) == 1);
  CHECK(g.coeff(3, 1) == -1);
  CHECK(g.terms().size() == 2);

  BiPoly h = parse_poly("(x^2+y^2-1)");
  CHECK(h.coeff(0, 0) == -1);  // accepted here; germ analysis rejects later

  CHECK(parse_poly("1/2 * x - 2/3 * y").coeff(1, 0) == Rat(1, 2));
  CHECK(parse_poly("-x").coeff(1, 0) == -1);
  CHECK(parse_poly("(x + y)^3").coeff(2, 1) == 3);
}

TEST_CASE("print and reparse is the identity") {
  for (const char* s :
       {"y^2 - x^3", "y*(y^2-x^3)", "x^2 + y^2", "(y-x)^2 - (y+x)^3",
        "1/2*x^4 - 7*x*y + y^5", "x", "y", "3"}) {
    BiPoly f = parse_poly(s);
    CHECK(parse_poly(f.str()) == f);
    CHECK(parse_poly(f.str()).str() == f.str());
  }
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_poly("y^2 + "), doctest::Contains("column"),
                       Error);
  CHECK_THROWS_AS(parse_poly("z + 1"), Error);
  CHECK_THROWS_AS(parse_poly("x^(2)"), Error);
  CHECK_THROWS_AS(parse_poly(""), Error);
  CHECK_THROWS_AS(parse_poly("x ** y"), Error);
  try {
    parse_poly("x + q");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
  }
}

TEST_CASE("parametric documents validate branches") {
  auto b = parse_param(R"({"branches": [["t^2", "t^3"]]})");
  REQUIRE(b.size() == 1);
  REQUIRE(b[0].components.size() == 2);
  CHECK(b[0].components[0].degree() == 2);
  CHECK(b[0].components[1].degree() == 3);

  auto b3 = parse_param(R"({"branches": [["t", "t^2", "t^3"]]})");
  CHECK(b3[0].components.size() == 3);

  CHECK_THROWS_WITH_AS(parse_param(R"({"branches": [["t + 1", "t^2"]]})"),
                       doctest::Contains("origin"), Error);
  CHECK_THROWS_WITH_AS(parse_param(R"({"branches": [["0", "0"]]})"),
                       doctest::Contains("degenerate"), Error);
  CHECK_THROWS_AS(parse_param(R"({"branches": [["t^2"]]})"), Error);
  CHECK_THROWS_AS(parse_param("not json"), Error);
  CHECK_THROWS_AS(parse_param(R"({"branches": [["x", "t"]]})"), Error);
}
