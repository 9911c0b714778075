// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "germ/parse.hpp"
#include "germ/puiseux.hpp"

using namespace germ;

static std::vector<int> k_list(const std::vector<RealBranch>& bs) {
  std::vector<int> ks;
  for (const auto& b : bs) ks.push_back(b.k);
  std::sort(ks.begin(), ks.end());
  return ks;
}

static Direction rat_dir(std::initializer_list<long> v) {
  std::vector<RealAlgebraic> c;
  for (long x : v) c.emplace_back(Rat(x));
  return Direction(std::move(c));
}

TEST_CASE("cusp y^2 = x^3: one branch, both half-branches east") {
  auto d = real_branches(parse_poly("y^2 - x^3"));
  REQUIRE(!d.isolated_origin);
  REQUIRE(d.branches.size() == 1);
  const auto& b = d.branches[0];
  CHECK(b.k == 2);
  CHECK(b.e == 2);
  CHECK(b.chart == Chart::X_PARAM);
  CHECK(b.u == rat_dir({1, 0}));
  CHECK(b.v == rat_dir({1, 0}));
}

TEST_CASE("y(y^2-x^3): a line and a cusp") {
  auto d = real_branches(parse_poly("y*(y^2 - x^3)"));
  REQUIRE(d.branches.size() == 2);
  CHECK(k_list(d.branches) == std::vector<int>{1, 2});
  for (const auto& b : d.branches) {
    if (b.k == 1) {
      CHECK(b.u == rat_dir({1, 0}));
      CHECK(b.v == rat_dir({-1, 0}));
    } else {
      CHECK(b.u == rat_dir({1, 0}));
      CHECK(b.v == rat_dir({1, 0}));
    }
  }
}

TEST_CASE("x^2 = y^3 lives in the y chart") {
  auto d = real_branches(parse_poly("x^2 - y^3"));
  REQUIRE(d.branches.size() == 1);
  CHECK(d.branches[0].chart == Chart::Y_PARAM);
  CHECK(d.branches[0].k == 2);
  CHECK(d.branches[0].u == rat_dir({0, 1}));
  CHECK(d.branches[0].v == rat_dir({0, 1}));
}

TEST_CASE("y^2 + x^3 opens to the left") {
  auto d = real_branches(parse_poly("y^2 + x^3"));
  REQUIRE(d.branches.size() == 1);
  CHECK(d.branches[0].sigma == -1);
  CHECK(d.branches[0].u == rat_dir({-1, 0}));
  CHECK(d.branches[0].v == rat_dir({-1, 0}));
}

TEST_CASE("y^3 = x^4 is C^1 regular with antipodal half-lines") {
  auto d = real_branches(parse_poly("y^3 - x^4"));
  REQUIRE(d.branches.size() == 1);
  const auto& b = d.branches[0];
  CHECK(b.k == 3);
  CHECK(is_c1_regular(b));
  auto [u, v] = tangent_halflines(b);
  CHECK(u == v.negated());
}

TEST_CASE("isolated origin and input validation") {
  CHECK(real_branches(parse_poly("x^2 + y^2")).isolated_origin);
  CHECK_THROWS_AS(real_branches(parse_poly("x^2 + y^2 - 1")), Error);
  CHECK_THROWS_AS(real_branches(BiPoly()), Error);
}

TEST_CASE("lines along the axes") {
  auto d = real_branches(parse_poly("x * y"));
  REQUIRE(d.branches.size() == 2);
  CHECK(k_list(d.branches) == std::vector<int>{1, 1});
  auto d2 = real_branches(parse_poly("y^2 - x^2"));
  REQUIRE(d2.branches.size() == 2);
  for (const auto& b : d2.branches) CHECK(is_c1_regular(b));
}

TEST_CASE("newton polygon of the standard cusps") {
  auto edges = newton_polygon(parse_poly("y^2 - x^3"));
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].slope == Rat(3, 2));
  CHECK(edges[0].face.degree() == 2);

  auto e2 = newton_polygon(parse_poly("y*(y^2 - x^3)"));
  REQUIRE(e2.size() == 1);  // support {(0,3),(3,1)}: one finite edge
  CHECK(e2[0].slope == Rat(3, 2));

  auto e3 = newton_polygon(parse_poly("(y^2 - x^3)*(y^2 - x^5)"));
  REQUIRE(e3.size() == 2);
  CHECK(e3[0].slope != e3[1].slope);
}

TEST_CASE("certified truncation bounds the substitution order") {
  for (const char* s : {"y^2 - x^3", "y*(y^2 - x^3)", "(y - x)^2 - (y + x)^3",
                        "y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7"}) {
    auto d = real_branches(parse_poly(s));
    for (const auto& b : d.branches) {
      if (b.truncation >= 0) {
        int last = b.terms.empty() ? 0 : b.terms.back().exponent;
        CHECK(b.truncation > last);
      }
    }
  }
}

TEST_CASE("parametric normalization") {
  auto p = parse_param(R"({"branches": [["t^2", "t^3"]]})");
  RealBranch b = normalize_param(p[0]);
  CHECK(b.k == 2);
  CHECK(b.u == rat_dir({1, 0}));
  CHECK(b.v == rat_dir({1, 0}));

  auto p3 = parse_param(R"({"branches": [["t^3", "t^4"]]})");
  RealBranch b3 = normalize_param(p3[0]);
  CHECK(b3.k == 3);
  CHECK(is_c1_regular(b3));

  // (t^3, t^6) reparametrizes to (t, t^2)
  auto pr = parse_param(R"({"branches": [["t^3", "t^6"]]})");
  CHECK(normalize_param(pr[0]).k == 1);

  // (t^2, t^4) is 2-to-1, not an injective arc
  auto p2 = parse_param(R"({"branches": [["t^2", "t^4"]]})");
  CHECK_THROWS_WITH_AS(normalize_param(p2[0]), doctest::Contains("2-to-1"),
                       Error);

  auto pn = parse_param(R"({"branches": [["t", "t^2", "-t^3"]]})");
  RealBranch bn = normalize_param(pn[0]);
  CHECK(bn.k == 1);
  CHECK(bn.u == rat_dir({1, 0, 0}));
  CHECK(bn.v == rat_dir({-1, 0, 0}));
}

TEST_CASE("branch decomposition is scale and swap invariant") {
  for (const char* s : {"y^2 - x^3", "y*(y^2 - x^3)", "y^3 - x^4",
                        "(y - x)^2 - (y + x)^3"}) {
    BiPoly f = parse_poly(s);
    auto base = k_list(real_branches(f).branches);
    CHECK(k_list(real_branches(f.scale(Rat(2), Rat(2))).branches) == base);
    CHECK(k_list(real_branches(f.swap_xy()).branches) == base);
    CHECK(k_list(real_branches(f * Rat(-5, 3)).branches) == base);
  }
}

TEST_CASE("deterministic branch order") {
  auto d1 = real_branches(parse_poly("y*(y^2 - x^3)"));
  auto d2 = real_branches(parse_poly("y*(y^2 - x^3)"));
  REQUIRE(d1.branches.size() == d2.branches.size());
  for (size_t i = 0; i < d1.branches.size(); ++i)
    CHECK(branch_str(d1.branches[i]) == branch_str(d2.branches[i]));
}
