// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>

#include "germ/invariants.hpp"
#include "germ/parse.hpp"

using namespace germ;

static CurveInvariant rows(std::initializer_list<std::array<int, 3>> rs) {
  CurveInvariant A;
  for (const auto& r : rs) A.rows.push_back({r[0], r[1], r[2]});
  return A;
}

TEST_CASE("k-map and odd part of the basic germs") {
  auto line = analyze_poly(parse_poly("y"));
  CHECK(line.km.entries.size() == 2);
  for (const auto& e : line.km.entries) CHECK(e.k == 1);
  CHECK(line.odd.directions.size() == 2);
  CHECK(line.parity == 1);
  CHECK(*line.m == 1);

  auto cusp = analyze_poly(parse_poly("y^2 - x^3"));
  REQUIRE(cusp.km.entries.size() == 1);
  CHECK(cusp.km.entries[0].k == 2);
  CHECK(cusp.odd.directions.empty());
  CHECK(cusp.parity == 0);
  CHECK(*cusp.m == 2);

  auto mixed = analyze_poly(parse_poly("y*(y^2 - x^3)"));
  REQUIRE(mixed.km.entries.size() == 2);
  std::vector<int> ks;
  for (const auto& e : mixed.km.entries) ks.push_back(e.k);
  std::sort(ks.begin(), ks.end());
  CHECK(ks == std::vector<int>{1, 3});
  CHECK(*mixed.m == 3);
  CHECK(mixed.parity == 1);
}

TEST_CASE("odd part directions come in antipodal pairs") {
  for (const char* s : {"y", "x*y", "y*(y^2 - x^3)", "y^3 - x^4",
                        "(y - x)*(y + x)*(y^2 - x^3)"}) {
    auto a = analyze_poly(parse_poly(s));
    const auto& od = a.odd.directions;
    REQUIRE(od.size() % 2 == 0);
    for (const auto& d : od) {
      Direction nd = d.negated();
      CHECK(std::count(od.begin(), od.end(), nd) == 1);
    }
    CHECK((int)((od.size() / 2) % 2) == a.parity);
  }
}

TEST_CASE("canonical invariant rows") {
  CHECK(canonical_invariant(real_branches(parse_poly("y")).branches) ==
        rows({{0, 1, 0}}));
  CHECK(canonical_invariant(real_branches(parse_poly("y^2 - x^3")).branches) ==
        rows({{0, 0, 1}}));
  // line + cusp along the same tangent line
  CHECK(canonical_invariant(
            real_branches(parse_poly("y*(y^2 - x^3)")).branches) ==
        rows({{0, 1, 1}}));
  // two transverse lines: two rows, each one odd branch
  CHECK(canonical_invariant(real_branches(parse_poly("x*y")).branches) ==
        rows({{0, 1, 0}, {0, 1, 0}}));
  // opposite-side cusps on one line: y^2 = x^3 and y^2 = -x^3
  CHECK(canonical_invariant(
            real_branches(parse_poly("(y^2 - x^3)*(y^2 + x^3)")).branches) ==
        rows({{1, 0, 1}}));
}

TEST_CASE("equivalence verdicts") {
  auto a = analyze_poly(parse_poly("y^2 - x^3"));
  auto b = analyze_poly(parse_poly("y^2 - x^5"));
  Verdict v = equivalent(a, b);  // same tangent half-line data, k = 2
  CHECK(v.bs_equivalent);
  CHECK(v.branch_by_branch);
  REQUIRE(v.matching.size() == 1);
  CHECK(v.matching[0] == std::pair<int, int>(0, 0));

  auto c = analyze_poly(parse_poly("y"));
  Verdict w = equivalent(c, b);
  CHECK(!w.bs_equivalent);
  CHECK(!w.branch_by_branch);

  auto d = analyze_poly(parse_poly("x^2 - y^3"));
  CHECK(equivalent(a, d).bs_equivalent);  // rotation of the cusp

  // same k multiset {1,1}, matching exists
  auto l1 = analyze_poly(parse_poly("y"));
  auto l2 = analyze_poly(parse_poly("y - x"));
  Verdict vl = equivalent(l1, l2);
  CHECK(vl.bs_equivalent);
  CHECK(vl.branch_by_branch);
  CHECK(vl.matching.size() == 2);
}

TEST_CASE("invariant validation rejects malformed input") {
  CHECK_THROWS_AS(validate_invariant(rows({})), Error);
  CHECK_THROWS_WITH_AS(validate_invariant(rows({{1, 0, 0}})),
                       doctest::Contains("r(-1) <= r(1)"), Error);
  CHECK_THROWS_AS(validate_invariant(rows({{-1, 0, 1}})), Error);
  CHECK_THROWS_AS(validate_invariant(rows({{0, 0, 0}})), Error);
  CHECK_THROWS_WITH_AS(validate_invariant(rows({{0, 1, 0}, {0, 0, 1}})),
                       doctest::Contains("sorted"), Error);
  validate_invariant(rows({{0, 0, 1}, {0, 1, 0}}));  // sorted: r0 then sum
  validate_invariant(rows({{1, 1, 1}}));
}

TEST_CASE("realize round trips") {
  for (auto A : {rows({{0, 0, 1}}), rows({{0, 1, 0}}), rows({{1, 1, 1}}),
                 rows({{0, 1, 0}, {0, 1, 1}}), rows({{1, 0, 1}}),
                 rows({{0, 2, 0}}), rows({{0, 0, 1}, {0, 0, 2}, {0, 1, 0}})}) {
    BiPoly f = realize(A);
    CHECK(canonical_invariant(real_branches(f).branches) == A);
  }
}

TEST_CASE("realize of one even branch matches the standard cusp") {
  BiPoly f = realize(rows({{0, 0, 1}}));
  auto a = analyze_poly(f);
  auto b = analyze_poly(parse_poly("(y - x)^2 - (y + x)^3"));
  CHECK(equivalent(a, b).bs_equivalent);
  CHECK(a.inv == b.inv);
}

TEST_CASE("multiplicity agrees with the order of the reduced equation") {
  for (const char* s : {"y", "x*y", "y^2 - x^3", "y*(y^2 - x^3)", "y^3 - x^4",
                        "(y - x)^2 - (y + x)^3"}) {
    BiPoly f = parse_poly(s);
    auto [m, parity] = multiplicity(f);
    CHECK(m == real_branches(f).f_rel.order());
    CHECK(parity == m % 2);
  }
  // multiple factors do not inflate m: (y^2-x^3)^2 has the cusp's m
  auto [m2, p2] = multiplicity(parse_poly("(y^2 - x^3)^2"));
  CHECK(m2 == 2);
  CHECK(p2 == 0);
}

TEST_CASE("tree rendering") {
  auto a = analyze_poly(parse_poly("y^2 - x^3"));
  CHECK(a.tree.halflines.size() == 1);
  CHECK(a.tree.text().find(": 2") != std::string::npos);
  std::string dot = a.tree.dot();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("h0_b1") != std::string::npos);  // two leaves under h0
  CHECK(dot.find("h0_b2") == std::string::npos);

  auto line = analyze_poly(parse_poly("y"));
  CHECK(line.tree.halflines.size() == 2);
}

TEST_CASE("parametric analysis parity from the odd part") {
  auto p = parse_param(R"({"branches": [["t^2", "t^3"]]})");
  auto a = analyze_param(p);
  CHECK(a.parametric);
  CHECK(!a.m.has_value());
  CHECK(a.parity == 0);
  CHECK(a.inv == rows({{0, 0, 1}}));

  auto q = parse_param(R"({"branches": [["t", "t^2", "t^3"]]})");
  auto b = analyze_param(q);
  CHECK(b.parity == 1);
  CHECK(b.km.entries.size() == 2);

  auto r = parse_param(R"({"branches": [["t", "t^2"], ["t^2", "t"]]})");
  auto c = analyze_param(r);
  CHECK(c.parity == 0);
  CHECK(c.inv == rows({{0, 1, 0}, {0, 1, 0}}));
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(analyze_poly(parse_poly("x^2 + y^2")), Error);
  try {
    analyze_poly(parse_poly("x^2 + y^2"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
  CHECK_THROWS_AS(analyze_param({}), Error);
}
