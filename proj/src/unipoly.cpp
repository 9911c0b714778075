// SPDX-License-Identifier: Apache-2.0
#include "germ/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace germ {

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& a) {
  UniPoly p;
  if (a != 0) p.c_ = {a};
  return p;
}

UniPoly UniPoly::monomial(const Rat& a, int deg) {
  UniPoly p;
  if (a != 0) {
    p.c_.assign(deg + 1, Rat(0));
    p.c_[deg] = a;
  }
  return p;
}

UniPoly UniPoly::from_int_coeffs(const std::vector<long>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& x : r) x = -x;
  UniPoly p;
  p.c_ = std::move(r);
  return p;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& a) const {
  if (a == 0) return UniPoly();
  std::vector<Rat> r(c_);
  for (auto& x : r) x *= a;
  UniPoly p;
  p.c_ = std::move(r);
  return p;
}

UniPoly operator*(const Rat& a, const UniPoly& p) { return p * a; }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::Internal, "division by zero polynomial");
  std::vector<Rat> rem(c_);
  int dd = d.degree();
  int dr = static_cast<int>(rem.size()) - 1;
  if (dr < dd) return {UniPoly(), *this};
  std::vector<Rat> q(dr - dd + 1, Rat(0));
  for (int i = dr; i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rat f = rem[i] / d.lc();
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
    rem[i] = 0;
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / lc());
}

UniPoly UniPoly::derivative() const {
  if (degree() < 1) return UniPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat((long)i);
  return UniPoly(std::move(r));
}

Rat UniPoly::eval(const Rat& x) const {
  Rat r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly UniPoly::shift_down(int k) const {
  if (is_zero()) return *this;
  if ((int)c_.size() <= k) throw Error(ErrorKind::Internal, "shift_down underflow");
  UniPoly p;
  p.c_.assign(c_.begin() + k, c_.end());
  return p;
}

int UniPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

UniPoly UniPoly::reversed() const {
  std::vector<Rat> r(c_.rbegin(), c_.rend());
  return UniPoly(std::move(r));
}

UniPoly UniPoly::compose_neg() const {
  std::vector<Rat> r(c_);
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::scale_arg(const Rat& s) const {
  std::vector<Rat> r(c_);
  Rat f(1);
  for (size_t i = 1; i < r.size(); ++i) {
    f *= s;
    r[i] *= f;
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * q + UniPoly::constant(*it);
  return r;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  Int num_g(0), den_l(1);
  for (const auto& a : c_) {
    mpz_gcd(num_g.get_mpz_t(), num_g.get_mpz_t(), a.get_num().get_mpz_t());
    mpz_lcm(den_l.get_mpz_t(), den_l.get_mpz_t(), a.get_den().get_mpz_t());
  }
  Rat f(den_l, num_g);
  f.canonicalize();
  UniPoly p = *this * f;
  if (sgn(p.lc()) < 0) p = -p;
  return p;
}

bool UniPoly::is_integer() const {
  for (const auto& a : c_)
    if (a.get_den() != 1) return false;
  return true;
}

namespace {

// Primitive pseudo-remainder sequence; inputs and output primitive integer.
UniPoly primitive_prs_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    // Pseudo-divide: lc(b)^(da-db+1) * a mod b stays integral.
    int da = a.degree(), db = b.degree();
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    UniPoly r = (a * rat_pow(b.lc(), da - db + 1)).divmod(b).second;
    a = b;
    b = r.primitive();
  }
  return a;
}

}  // namespace

UniPoly UniPoly::gcd(const UniPoly& o) const {
  if (is_zero()) return o.monic();
  if (o.is_zero()) return monic();
  return primitive_prs_gcd(primitive(), o.primitive()).monic();
}

UniPoly UniPoly::squarefree_part() const {
  if (is_zero()) return *this;
  if (degree() == 0) return UniPoly::constant(Rat(1));
  UniPoly g = gcd(derivative());
  return divmod(g).first.primitive();
}

std::vector<std::pair<UniPoly, int>> UniPoly::squarefree_decomposition() const {
  // Yun's algorithm.
  std::vector<std::pair<UniPoly, int>> out;
  if (degree() < 1) return out;
  UniPoly f = monic();
  UniPoly fp = f.derivative();
  UniPoly a = f.gcd(fp);
  UniPoly b = f.divmod(a).first;
  UniPoly c = fp.divmod(a).first - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly d = b.gcd(c);
    if (d.degree() > 0) out.emplace_back(d.primitive(), i);
    b = b.divmod(d).first;
    c = c.divmod(d).first - b.derivative();
    ++i;
  }
  return out;
}

Rat UniPoly::resultant(const UniPoly& o) const {
  UniPoly f = *this, g = o;
  if (f.is_zero() || g.is_zero()) return Rat(0);
  Rat res(1);
  while (g.degree() > 0) {
    if (f.degree() < g.degree()) {
      if ((f.degree() & 1) && (g.degree() & 1)) res = -res;
      std::swap(f, g);
      continue;
    }
    UniPoly r = f.divmod(g).second;
    int dr = r.is_zero() ? 0 : r.degree();
    if (r.is_zero()) return Rat(0);
    if ((f.degree() & 1) && (g.degree() & 1)) res = -res;
    res *= rat_pow(g.lc(), f.degree() - dr);
    f = g;
    g = r;
  }
  // g constant.
  return res * rat_pow(g.lc(), f.degree());
}

Rat UniPoly::root_bound() const {
  if (is_zero()) throw Error(ErrorKind::Internal, "root bound of zero polynomial");
  Rat m(0);
  for (int i = 0; i < degree(); ++i) m = std::max(m, rat_abs(c_[i] / lc()));
  return m + 1;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  UniPoly f = p.squarefree_part();
  chain.push_back(f);
  if (f.degree() < 1) return chain;
  chain.push_back(f.derivative());
  while (chain.back().degree() >= 0 && !chain.back().is_zero()) {
    UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    // Scale by a positive constant only; sign structure must be kept.
    UniPoly pr = r.primitive();
    if (sgn(r.lc()) < 0) pr = -pr;
    chain.push_back(-pr);
    if (chain.back().degree() == 0) break;
  }
  return chain;
}

int sign_changes_at(const std::vector<UniPoly>& chain, const Rat& x) {
  int changes = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int UniPoly::sturm_count(const Rat& a, const Rat& b) const {
  if (is_zero()) throw Error(ErrorKind::Precondition, "indeterminate root count");
  if (!(a < b)) throw Error(ErrorKind::Precondition, "sturm_count requires a < b");
  if (degree() == 0) return 0;
  auto chain = sturm_chain(*this);
  return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

int UniPoly::count_real_roots() const {
  if (degree() < 1) return 0;
  Rat b = root_bound();
  return sturm_count(-b, b);
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = c_[i];
    if (a == 0) continue;
    Rat mag = rat_abs(a);
    if (first) {
      if (sgn(a) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace germ
