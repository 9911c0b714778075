// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germ/bipoly.hpp"
#include "germ/numberfield.hpp"
#include "germ/parse.hpp"
#include "germ/realalg.hpp"

namespace germ {

enum class Chart { X_PARAM, Y_PARAM };

// Exact direction in R^n up to positive scaling. Canonical form: the first
// coordinate of maximal absolute value equals +1 or -1.
class Direction {
public:
  Direction() = default;
  // Canonicalizes; requires either all-rational coordinates or coordinates
  // already in canonical form.
  explicit Direction(std::vector<RealAlgebraic> coords);

  const std::vector<RealAlgebraic>& coords() const { return c_; }
  Direction negated() const;
  static int compare(const Direction& a, const Direction& b);
  bool operator==(const Direction& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Direction& o) const { return !(*this == o); }
  bool operator<(const Direction& o) const { return compare(*this, o) < 0; }
  std::string str() const;

private:
  std::vector<RealAlgebraic> c_;
};

struct BranchTerm {
  int exponent;        // exponent of t
  RealAlgebraic coeff;
};

// One real analytic arc through the origin; the two half-branches are the
// sides t > 0 and t < 0 of the parametrization.
struct RealBranch {
  Chart chart = Chart::X_PARAM;
  int sigma = 1;  // parameter coordinate = sigma * t^e
  int e = 1;      // ramification
  std::vector<BranchTerm> terms;  // the dependent coordinate
  int k = 1;                      // ord_0 of the parametrization
  int truncation = 0;  // certified T: f(gamma(t)) = O(t^T); -1 when exact
  int source_factor = -1;
  bool parametric = false;
  std::vector<UniPoly> components;  // parametric input only
  Direction u;                      // t -> 0+ tangent half-line
  Direction v;                      // t -> 0- tangent half-line
};

struct NewtonEdge {
  Rat slope;     // exponent gamma = q/p of the attached expansions
  UniPoly face;  // face polynomial in the leading coefficient c
};

// Finite positive-slope edges of the lower Newton polygon.
std::vector<NewtonEdge> newton_polygon(const BiPoly& f);

struct BranchDecomposition {
  std::vector<RealBranch> branches;
  bool isolated_origin = false;
  BiPoly f_rel;  // product of the real-relevant irreducible factors
};

// Complete real branch decomposition of (V(f), 0).
BranchDecomposition real_branches(const BiPoly& f);

int branch_order(const RealBranch& b);
std::pair<Direction, Direction> tangent_halflines(const RealBranch& b);
bool is_c1_regular(const RealBranch& b);
RealBranch normalize_param(const ParamBranchInput& p);

std::string branch_str(const RealBranch& b);

}  // namespace germ
