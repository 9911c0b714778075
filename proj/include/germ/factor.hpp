// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "germ/unipoly.hpp"

namespace germ {

// Complete factorization over Q: f = unit * prod factors[i].first^factors[i].second.
// Factors are irreducible, primitive integer, positive leading coefficient,
// in a deterministic order.
struct UniFactorization {
  Rat unit;
  std::vector<std::pair<UniPoly, int>> factors;
};

UniFactorization factor_univariate(const UniPoly& f);

// Irreducible factors of a squarefree primitive integer polynomial.
std::vector<UniPoly> factor_squarefree_integer(const UniPoly& f);

}  // namespace germ
