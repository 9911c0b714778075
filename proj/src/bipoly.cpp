// SPDX-License-Identifier: Apache-2.0
#include "germ/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace germ {

BiPoly BiPoly::constant(const Rat& a) { return term(a, 0, 0); }

BiPoly BiPoly::term(const Rat& a, int i, int j) {
  BiPoly p;
  if (a != 0) p.t_[{i, j}] = a;
  return p;
}

BiPoly BiPoly::from_unipoly_x(const UniPoly& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term(i, 0, p[i]);
  return r;
}

BiPoly BiPoly::from_unipoly_y(const UniPoly& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term(0, i, p[i]);
  return r;
}

BiPoly BiPoly::from_y_coeffs(const std::vector<UniPoly>& coeffs) {
  BiPoly r;
  for (size_t j = 0; j < coeffs.size(); ++j)
    for (int i = 0; i <= coeffs[j].degree(); ++i)
      r.add_term(i, static_cast<int>(j), coeffs[j][i]);
  return r;
}

void BiPoly::add_term(int i, int j, const Rat& a) {
  if (a == 0) return;
  auto it = t_.find({i, j});
  if (it == t_.end()) {
    t_[{i, j}] = a;
  } else {
    it->second += a;
    if (it->second == 0) t_.erase(it);
  }
}

Rat BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Rat(0) : it->second;
}

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& [k, a] : t_) d = std::max(d, k.first);
  return d;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& [k, a] : t_) d = std::max(d, k.second);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, a] : t_) d = std::max(d, k.first + k.second);
  return d;
}

int BiPoly::order() const {
  if (t_.empty()) return -1;
  int d = t_.begin()->first.first + t_.begin()->first.second;
  for (const auto& [k, a] : t_) d = std::min(d, k.first + k.second);
  return d;
}

BiPoly BiPoly::lowest_form() const {
  int d = order();
  BiPoly r;
  for (const auto& [k, a] : t_)
    if (k.first + k.second == d) r.t_[k] = a;
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, a] : o.t_) r.add_term(k.first, k.second, a);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, a] : r.t_) a = -a;
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [k1, a1] : t_)
    for (const auto& [k2, a2] : o.t_)
      r.add_term(k1.first + k2.first, k1.second + k2.second, a1 * a2);
  return r;
}

BiPoly BiPoly::operator*(const Rat& a) const {
  if (a == 0) return BiPoly();
  BiPoly r = *this;
  for (auto& [k, c] : r.t_) c *= a;
  return r;
}

BiPoly operator*(const Rat& a, const BiPoly& p) { return p * a; }

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  Rat r(0);
  for (const auto& [k, a] : t_)
    r += a * rat_pow(x, k.first) * rat_pow(y, k.second);
  return r;
}

UniPoly BiPoly::eval_x(const Rat& a) const {
  std::vector<Rat> c(deg_y() + 1, Rat(0));
  for (const auto& [k, v] : t_) c[k.second] += v * rat_pow(a, k.first);
  return UniPoly(std::move(c));
}

UniPoly BiPoly::eval_y(const Rat& b) const {
  std::vector<Rat> c(deg_x() + 1, Rat(0));
  for (const auto& [k, v] : t_) c[k.first] += v * rat_pow(b, k.second);
  return UniPoly(std::move(c));
}

BiPoly BiPoly::swap_xy() const {
  BiPoly r;
  for (const auto& [k, a] : t_) r.t_[{k.second, k.first}] = a;
  return r;
}

BiPoly BiPoly::neg_x() const {
  BiPoly r;
  for (const auto& [k, a] : t_) r.t_[k] = (k.first & 1) ? Rat(-a) : a;
  return r;
}

BiPoly BiPoly::scale(const Rat& lx, const Rat& ly) const {
  BiPoly r;
  for (const auto& [k, a] : t_) {
    Rat c = a * rat_pow(lx, k.first) * rat_pow(ly, k.second);
    if (c != 0) r.t_[k] = c;
  }
  return r;
}

BiPoly BiPoly::shift_x(const Rat& a) const {
  if (a == 0) return *this;
  auto cs = y_coeffs();
  UniPoly xa(std::vector<Rat>{a, Rat(1)});
  for (auto& c : cs) c = c.compose(xa);
  return from_y_coeffs(cs);
}

BiPoly BiPoly::subst_y_scaled(const UniPoly& l) const {
  auto cs = y_coeffs();
  UniPoly lp = UniPoly::constant(Rat(1));
  for (size_t j = 0; j < cs.size(); ++j) {
    cs[j] = cs[j] * lp;
    lp = lp * l;
  }
  return from_y_coeffs(cs);
}

BiPoly BiPoly::derivative_x() const {
  BiPoly r;
  for (const auto& [k, a] : t_)
    if (k.first > 0) r.t_[{k.first - 1, k.second}] = a * Rat(k.first);
  return r;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly r;
  for (const auto& [k, a] : t_)
    if (k.second > 0) r.t_[{k.first, k.second - 1}] = a * Rat(k.second);
  return r;
}

BiPoly BiPoly::pow(unsigned n) const {
  BiPoly r = constant(1), b = *this;
  for (; n; n >>= 1) {
    if (n & 1) r = r * b;
    if (n > 1) b = b * b;
  }
  return r;
}

std::vector<UniPoly> BiPoly::y_coeffs() const {
  std::vector<std::vector<Rat>> c(deg_y() + 1);
  int dx = deg_x();
  for (auto& v : c) v.assign(dx + 1, Rat(0));
  for (const auto& [k, a] : t_) c[k.second][k.first] = a;
  std::vector<UniPoly> out;
  out.reserve(c.size());
  for (auto& v : c) out.emplace_back(std::move(v));
  return out;
}

UniPoly BiPoly::content_y() const {
  UniPoly g;
  for (const auto& c : y_coeffs()) g = g.gcd(c);
  return g.primitive();
}

BiPoly BiPoly::primitive_part_y() const {
  if (is_zero()) return *this;
  UniPoly c = content_y();
  auto cs = y_coeffs();
  for (auto& p : cs) p = p.divmod(c).first;
  return from_y_coeffs(cs);
}

BiPoly BiPoly::primitive() const {
  if (is_zero()) return *this;
  Int num_g(0), den_l(1);
  for (const auto& [k, a] : t_) {
    mpz_gcd(num_g.get_mpz_t(), num_g.get_mpz_t(), a.get_num().get_mpz_t());
    mpz_lcm(den_l.get_mpz_t(), den_l.get_mpz_t(), a.get_den().get_mpz_t());
  }
  Rat f(den_l, num_g);
  f.canonicalize();
  BiPoly p = *this * f;
  // Leading term in graded lex: highest total degree, then highest x power.
  const Rat* lead = nullptr;
  int best_d = -1, best_x = -1;
  for (const auto& [k, a] : p.t_) {
    int d = k.first + k.second;
    if (d > best_d || (d == best_d && k.first > best_x)) {
      best_d = d;
      best_x = k.first;
      lead = &a;
    }
  }
  if (lead && sgn(*lead) < 0) p = -p;
  return p;
}

namespace {

// Polynomials in y with UniPoly (in x) coefficients, lowest degree first.
using YPoly = std::vector<UniPoly>;

void ytrim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YPoly to_ypoly(const BiPoly& f) {
  YPoly p = f.y_coeffs();
  ytrim(p);
  return p;
}

YPoly ymul_coeff(const YPoly& p, const UniPoly& c) {
  YPoly r;
  r.reserve(p.size());
  for (const auto& q : p) r.push_back(q * c);
  ytrim(r);
  return r;
}

// Pseudo-remainder of a by b: prem = lc(b)^(da-db+1)*a mod b.
YPoly yprem(YPoly a, const YPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  const UniPoly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    UniPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j)
      a[da - db + j] = a[da - db + j] - la * b[j];
    ytrim(a);
  }
  return a;
}

UniPoly ycontent(const YPoly& p) {
  UniPoly g;
  for (const auto& c : p) g = g.gcd(c);
  return g.primitive();
}

YPoly yprimitive(const YPoly& p) {
  UniPoly c = ycontent(p);
  YPoly r;
  r.reserve(p.size());
  for (const auto& q : p) r.push_back(q.divmod(c).first);
  return r;
}

// Primitive PRS gcd of primitive inputs with positive y-degree.
YPoly ygcd(YPoly a, YPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    YPoly r = yprem(a, b);
    a = std::move(b);
    b = r.empty() ? r : yprimitive(r);
  }
  return a;
}

}  // namespace

BiPoly BiPoly::gcd(const BiPoly& o) const {
  if (is_zero()) return o.primitive();
  if (o.is_zero()) return primitive();
  if (deg_y() == 0 && o.deg_y() == 0)
    return from_unipoly_x(eval_y(0).gcd(o.eval_y(0)).primitive());
  UniPoly c1 = content_y(), c2 = o.content_y();
  UniPoly cg = c1.gcd(c2).primitive();
  BiPoly p1 = primitive_part_y(), p2 = o.primitive_part_y();
  BiPoly g;
  if (deg_y() == 0 || o.deg_y() == 0) {
    // One side is a pure x polynomial: gcd of primitive parts is a constant.
    g = constant(1);
  } else {
    YPoly yg = ygcd(to_ypoly(p1), to_ypoly(p2));
    if (yg.size() <= 1) {
      g = constant(1);
    } else {
      g = from_y_coeffs(yprimitive(yg));
    }
  }
  return (g * from_unipoly_x(cg)).primitive();
}

bool BiPoly::divides(const BiPoly& f) const {
  if (is_zero()) return f.is_zero();
  if (f.is_zero()) return true;
  // Exact division in y-major order with UniPoly coefficient division.
  YPoly num = to_ypoly(f), den = to_ypoly(*this);
  if (den.size() == 1) {
    for (const auto& c : num)
      if (!c.divmod(den[0]).second.is_zero()) return false;
    return true;
  }
  while (num.size() >= den.size()) {
    auto [q, r] = num.back().divmod(den.back());
    if (!r.is_zero()) return false;
    int sh = static_cast<int>(num.size() - den.size());
    for (size_t j = 0; j < den.size(); ++j)
      num[sh + j] = num[sh + j] - q * den[j];
    ytrim(num);
    if (num.empty()) return true;
  }
  return num.empty();
}

BiPoly BiPoly::exact_div(const BiPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::Internal, "division by zero polynomial");
  if (is_zero()) return BiPoly();
  YPoly num = to_ypoly(*this), den = to_ypoly(d);
  std::vector<UniPoly> quot;
  if (den.size() == 1) {
    quot.reserve(num.size());
    for (const auto& c : num) {
      auto [q, r] = c.divmod(den[0]);
      if (!r.is_zero()) throw Error(ErrorKind::Internal, "inexact division");
      quot.push_back(q);
    }
    return from_y_coeffs(quot);
  }
  if (num.size() < den.size())
    throw Error(ErrorKind::Internal, "inexact division");
  quot.assign(num.size() - den.size() + 1, UniPoly());
  while (num.size() >= den.size()) {
    auto [q, r] = num.back().divmod(den.back());
    if (!r.is_zero()) throw Error(ErrorKind::Internal, "inexact division");
    int sh = static_cast<int>(num.size() - den.size());
    quot[sh] = q;
    for (size_t j = 0; j < den.size(); ++j)
      num[sh + j] = num[sh + j] - q * den[j];
    ytrim(num);
    if (num.empty()) break;
  }
  if (!num.empty()) throw Error(ErrorKind::Internal, "inexact division");
  return from_y_coeffs(quot);
}

bool BiPoly::is_squarefree() const {
  if (is_zero()) return false;
  if (total_degree() == 0) return true;
  UniPoly c = content_y();
  BiPoly pp = primitive_part_y();
  if (c.degree() > 0 && c.gcd(c.derivative()).degree() > 0) return false;
  if (pp.deg_y() == 0) return true;
  // Certificate at a sample point: nonvanishing discriminant there.
  BiPoly py = pp.derivative_y();
  auto lcs = pp.y_coeffs().back();
  for (long a : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 5L, -5L, 7L, -7L}) {
    if (lcs.sign_at(Rat(a)) == 0) continue;
    UniPoly u = pp.eval_x(Rat(a));
    if (u.gcd(pp.derivative_y().eval_x(Rat(a))).degree() == 0) return true;
  }
  return pp.gcd(py).total_degree() == 0;
}

BiPoly BiPoly::squarefree_part() const {
  if (is_zero()) return *this;
  if (total_degree() == 0) return constant(1);
  if (is_squarefree()) return primitive();
  UniPoly c = content_y();
  BiPoly pp = primitive_part_y();
  BiPoly sc = from_unipoly_x(c.squarefree_part());
  if (pp.deg_y() == 0) return sc.primitive();
  BiPoly g = pp.gcd(pp.derivative_y());
  BiPoly sp = pp.exact_div(g);
  return (sc * sp).primitive();
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  // Terms in graded lex order, highest first.
  std::vector<std::pair<Key, Rat>> ts(t_.begin(), t_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, a] : ts) {
    Rat mag = rat_abs(a);
    if (first) {
      if (sgn(a) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    bool has_var = k.first > 0 || k.second > 0;
    if (!has_var || mag != 1) os << mag.get_str();
    if (k.first > 0) {
      if (mag != 1) os << "*";
      os << "x";
      if (k.first > 1) os << "^" << k.first;
    }
    if (k.second > 0) {
      if (mag != 1 || k.first > 0) os << "*";
      os << "y";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

}  // namespace germ
