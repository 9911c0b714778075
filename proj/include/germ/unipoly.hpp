// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germ/rational.hpp"

namespace germ {

// Dense univariate polynomial over Q, lowest degree first.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rat& a);
  static UniPoly monomial(const Rat& a, int deg);
  static UniPoly from_int_coeffs(const std::vector<long>& coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& lc() const { return c_.back(); }
  const Rat& operator[](int i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : Rat(0); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& a) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  // Euclidean division over Q; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly monic() const;
  UniPoly derivative() const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const { return sgn(eval(x)); }
  UniPoly shift_down(int k) const;  // divide by x^k
  int valuation() const;            // order of vanishing at 0
  UniPoly reversed() const;         // x^deg * p(1/x)
  UniPoly compose_neg() const;      // p(-x)
  UniPoly scale_arg(const Rat& s) const;  // p(s*x)
  UniPoly compose(const UniPoly& q) const;

  // Primitive integer form: p = unit * pp where pp has coprime integer
  // coefficients and positive leading coefficient.
  UniPoly primitive() const;
  bool is_integer() const;

  UniPoly gcd(const UniPoly& o) const;  // monic gcd over Q
  UniPoly squarefree_part() const;
  // (factor, multiplicity) with factors squarefree and pairwise coprime.
  std::vector<std::pair<UniPoly, int>> squarefree_decomposition() const;

  Rat resultant(const UniPoly& o) const;

  // Strict upper bound on the absolute value of every real root.
  Rat root_bound() const;

  // Number of distinct real roots in (a, b]; requires nonzero polynomial.
  int sturm_count(const Rat& a, const Rat& b) const;
  int count_real_roots() const;

  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rat> c_;
};

UniPoly operator*(const Rat& a, const UniPoly& p);

// Signed-remainder Sturm chain of the squarefree part.
std::vector<UniPoly> sturm_chain(const UniPoly& p);
int sign_changes_at(const std::vector<UniPoly>& chain, const Rat& x);

}  // namespace germ
