// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "germ/unipoly.hpp"

namespace germ {

// Real algebraic number: irreducible primitive integer minimal polynomial
// plus an open isolating interval with nonvanishing endpoints. Rational
// numbers are stored exactly with a degree-1 minimal polynomial.
class RealAlgebraic {
public:
  RealAlgebraic() : RealAlgebraic(Rat(0)) {}
  explicit RealAlgebraic(const Rat& q);
  explicit RealAlgebraic(long v) : RealAlgebraic(Rat(v)) {}

  // minpoly must be irreducible with exactly one root in (lo, hi) and
  // nonzero values at both endpoints.
  static RealAlgebraic from_root(const UniPoly& minpoly, const Rat& lo,
                                 const Rat& hi);

  const UniPoly& minpoly() const { return m_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  int degree() const { return m_.degree(); }
  bool is_rational() const { return m_.degree() == 1; }
  Rat rational_value() const;

  int sign() const;
  RealAlgebraic operator-() const;

  void refine();
  void refine_below(const Rat& width);
  double approx() const;

  // Total order; -1, 0, 1.
  static int compare(const RealAlgebraic& a, const RealAlgebraic& b);
  bool operator==(const RealAlgebraic& o) const { return compare(*this, o) == 0; }
  bool operator!=(const RealAlgebraic& o) const { return compare(*this, o) != 0; }
  bool operator<(const RealAlgebraic& o) const { return compare(*this, o) < 0; }

  std::string str() const;

private:
  UniPoly m_;
  Rat lo_, hi_;
};

// Distinct real roots of p, ascending. p must be nonzero.
std::vector<RealAlgebraic> isolate_real_roots(const UniPoly& p);

}  // namespace germ
