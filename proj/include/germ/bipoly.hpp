// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "germ/unipoly.hpp"

namespace germ {

// Sparse bivariate polynomial over Q in variables x, y.
class BiPoly {
public:
  using Key = std::pair<int, int>;  // (x exponent, y exponent)

  BiPoly() = default;
  static BiPoly constant(const Rat& a);
  static BiPoly term(const Rat& a, int i, int j);
  static BiPoly var_x() { return term(1, 1, 0); }
  static BiPoly var_y() { return term(1, 0, 1); }
  static BiPoly from_unipoly_x(const UniPoly& p);
  static BiPoly from_unipoly_y(const UniPoly& p);
  // Coefficients of y^j as polynomials in x, index = j.
  static BiPoly from_y_coeffs(const std::vector<UniPoly>& coeffs);

  bool is_zero() const { return t_.empty(); }
  const std::map<Key, Rat>& terms() const { return t_; }
  void add_term(int i, int j, const Rat& a);
  Rat coeff(int i, int j) const;

  int deg_x() const;
  int deg_y() const;
  int total_degree() const;
  int order() const;  // degree of the lowest-degree form; -1 for zero
  BiPoly lowest_form() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rat& a) const;
  bool operator==(const BiPoly& o) const { return t_ == o.t_; }

  Rat eval(const Rat& x, const Rat& y) const;
  UniPoly eval_x(const Rat& a) const;  // f(a, y) as polynomial in y
  UniPoly eval_y(const Rat& b) const;  // f(x, b) as polynomial in x
  BiPoly swap_xy() const;
  BiPoly neg_x() const;   // f(-x, y)
  BiPoly scale(const Rat& lx, const Rat& ly) const;  // f(lx*x, ly*y)
  BiPoly shift_x(const Rat& a) const;                // f(x+a, y)
  BiPoly subst_y_scaled(const UniPoly& l) const;     // f(x, l(x)*y)
  BiPoly derivative_x() const;
  BiPoly derivative_y() const;
  BiPoly pow(unsigned n) const;

  std::vector<UniPoly> y_coeffs() const;
  UniPoly content_y() const;  // gcd over Q[x] of the y-coefficients (monic-ish primitive)
  BiPoly primitive_part_y() const;

  // Primitive integer form, leading term (grlex) positive.
  BiPoly primitive() const;

  BiPoly gcd(const BiPoly& o) const;
  bool is_squarefree() const;
  BiPoly squarefree_part() const;

  // Exact division; throws if remainder nonzero.
  BiPoly exact_div(const BiPoly& d) const;
  bool divides(const BiPoly& f) const;

  std::string str() const;  // canonical printer

private:
  std::map<Key, Rat> t_;
};

BiPoly operator*(const Rat& a, const BiPoly& p);

// Complete factorization over Q: unit * prod factors[i]^mult[i].
struct BiFactorization {
  Rat unit;
  std::vector<std::pair<BiPoly, int>> factors;  // primitive integer, deterministic order
};
BiFactorization factor_rational(const BiPoly& f);

}  // namespace germ
