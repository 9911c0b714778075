// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germ/bipoly.hpp"
#include "germ/factor.hpp"
#include "germ/parse.hpp"

using namespace germ;

static UniPoly P(std::initializer_list<long> coeffs) {
  return UniPoly::from_int_coeffs(std::vector<long>(coeffs));
}

TEST_CASE("univariate factorization over Q") {
  // (x^2-2)(x^2+1)(2x-3)
  UniPoly f = P({-2, 0, 1}) * P({1, 0, 1}) * P({-3, 2});
  auto fac = factor_univariate(f);
  CHECK(fac.factors.size() == 3);
  UniPoly prod = UniPoly::constant(fac.unit);
  for (const auto& [p, m] : fac.factors) {
    CHECK(m == 1);
    for (int i = 0; i < m; ++i) prod = prod * p;
  }
  CHECK(prod == f);
  // x^4+1 is irreducible over Q
  auto g = factor_univariate(P({1, 0, 0, 0, 1}));
  CHECK(g.factors.size() == 1);
  CHECK(g.factors[0].second == 1);
}

TEST_CASE("bivariate squarefree and gcd") {
  BiPoly f = parse_poly("y^2 - x^3");
  BiPoly g = parse_poly("y - x");
  BiPoly h = f * f * g;
  CHECK(!h.is_squarefree());
  BiPoly sf = h.squarefree_part();
  CHECK(sf.is_squarefree());
  CHECK((f * g).divides(sf * BiPoly::constant(Rat(1))));
  CHECK(sf.divides(f * g));
  CHECK(h.gcd(f).primitive() == f.primitive());
}

TEST_CASE("bivariate rational factorization") {
  BiPoly f = parse_poly("(y^2 - x^3) * (y - x) * (y + x)");
  auto fac = factor_rational(f);
  CHECK(fac.factors.size() == 3);
  BiPoly prod = BiPoly::constant(fac.unit);
  for (const auto& [p, m] : fac.factors)
    for (int i = 0; i < m; ++i) prod = prod * p;
  CHECK(prod == f);

  BiPoly sq = parse_poly("(y - x)^2 * (y^2 - x^3)^3");
  auto fac2 = factor_rational(sq);
  int m2 = 0, m3 = 0;
  for (const auto& [p, m] : fac2.factors) {
    if (m == 2) ++m2;
    if (m == 3) ++m3;
  }
  CHECK(m2 == 1);
  CHECK(m3 == 1);

  // x^2 + y^2 is irreducible over Q
  auto fac3 = factor_rational(parse_poly("x^2 + y^2"));
  CHECK(fac3.factors.size() == 1);
}

TEST_CASE("factors of pure powers of the axes") {
  auto fac = factor_rational(parse_poly("x^2 * y"));
  int total = 0;
  for (const auto& [p, m] : fac.factors) {
    CHECK(p.total_degree() == 1);
    total += m;
  }
  CHECK(total == 3);
}
