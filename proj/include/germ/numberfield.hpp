// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "germ/realalg.hpp"
#include "germ/unipoly.hpp"

namespace germ {

// Element of a number field, reduced modulo the field's modulus; the entry at
// index i is the coefficient of alpha^i.
using NFElem = std::vector<Rat>;

// Real number field Q(alpha). Immutable apart from interval refinement of the
// generator, which is conservative.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
  static std::shared_ptr<const NumberField> rationals();
  // modulus irreducible (primitive integer), alpha one of its real roots.
  static std::shared_ptr<const NumberField> make(const UniPoly& modulus,
                                                const RealAlgebraic& alpha);

  int degree() const { return m_.degree(); }
  bool is_rational_field() const { return m_.degree() == 1; }
  const UniPoly& modulus() const { return m_; }
  const RealAlgebraic& generator_value() const { return alpha_; }

  NFElem zero() const;
  NFElem one() const;
  NFElem from_rat(const Rat& q) const;
  NFElem generator() const;
  NFElem from_poly(const UniPoly& p) const;
  UniPoly to_poly(const NFElem& e) const;

  NFElem add(const NFElem& a, const NFElem& b) const;
  NFElem sub(const NFElem& a, const NFElem& b) const;
  NFElem neg(const NFElem& a) const;
  NFElem mul(const NFElem& a, const NFElem& b) const;
  NFElem mul_rat(const NFElem& a, const Rat& q) const;
  NFElem inv(const NFElem& a) const;
  NFElem div(const NFElem& a, const NFElem& b) const;
  NFElem pow(const NFElem& a, unsigned n) const;

  bool is_zero(const NFElem& a) const;
  std::optional<Rat> as_rational(const NFElem& a) const;
  int sign(const NFElem& a) const;
  NFElem abs(const NFElem& a) const;

  // Minimal polynomial over Q (irreducible, primitive integer).
  UniPoly elem_minpoly(const NFElem& a) const;
  RealAlgebraic to_real(const NFElem& a) const;

  std::string str(const NFElem& a) const;

private:
  NumberField(UniPoly m, RealAlgebraic alpha)
      : m_(std::move(m)), alpha_(std::move(alpha)) {}
  UniPoly m_;
  mutable RealAlgebraic alpha_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Dense univariate polynomial over a number field, lowest degree first.
class NFPoly {
public:
  explicit NFPoly(FieldPtr K) : K_(std::move(K)) {}
  NFPoly(FieldPtr K, std::vector<NFElem> coeffs);
  static NFPoly from_unipoly(const FieldPtr& K, const UniPoly& p);

  const FieldPtr& field() const { return K_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const NFElem& lc() const { return c_.back(); }
  NFElem coeff(int i) const;
  const std::vector<NFElem>& coeffs() const { return c_; }
  void set_coeff(int i, const NFElem& v);

  NFPoly operator+(const NFPoly& o) const;
  NFPoly operator-(const NFPoly& o) const;
  NFPoly operator*(const NFPoly& o) const;
  NFPoly scale(const NFElem& v) const;
  std::pair<NFPoly, NFPoly> divmod(const NFPoly& d) const;
  NFPoly monic() const;
  NFPoly derivative() const;
  NFPoly gcd(const NFPoly& o) const;
  NFElem eval(const NFElem& x) const;
  // (factor, multiplicity), factors squarefree monic pairwise coprime.
  std::vector<std::pair<NFPoly, int>> squarefree_decomposition() const;

  std::string str(const std::string& var = "t") const;

private:
  void trim();
  FieldPtr K_;
  std::vector<NFElem> c_;
};

// A real root of a polynomial over K, living in an extension L of K.
struct ExtensionRoot {
  FieldPtr L;
  NFElem alpha_in_L;  // image in L of K's generator
  NFElem root;        // the root, as an element of L
  int multiplicity;
  RealAlgebraic value;
};

// Distinct real roots with multiplicities, ordered by value.
std::vector<ExtensionRoot> real_roots(const NFPoly& p);

// Image in L of an element of K, given the image of K's generator.
NFElem map_to_extension(const NumberField& K, const NFElem& a,
                        const NumberField& L, const NFElem& alpha_in_L);

}  // namespace germ
