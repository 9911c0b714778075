// SPDX-License-Identifier: Apache-2.0
#include "germ/numberfield.hpp"

#include <algorithm>
#include <sstream>

#include "germ/factor.hpp"

namespace germ {

namespace {

// u with u*a == gcd(a, m) (mod m), gcd monic.
std::pair<UniPoly, UniPoly> ext_gcd_mod(const UniPoly& a, const UniPoly& m) {
  UniPoly r0 = m, r1 = a.divmod(m).second;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    UniPoly t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  Rat l = r0.lc();
  return {r0 * (Rat(1) / l), t0 * (Rat(1) / l)};
}

struct Interval {
  Rat lo, hi;
};

Interval imul(const Interval& a, const Interval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

Interval interval_eval(const UniPoly& p, const Interval& x) {
  if (p.is_zero()) return {Rat(0), Rat(0)};
  Interval r{p.lc(), p.lc()};
  for (int i = p.degree() - 1; i >= 0; --i) {
    r = imul(r, x);
    r.lo += p[i];
    r.hi += p[i];
  }
  return r;
}

// Exact solution of A x = b (columns of A given), or nullopt.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> cols,
                                             std::vector<Rat> b) {
  size_t rows = b.size(), ncols = cols.size();
  // Augmented row-major matrix.
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(ncols + 1, Rat(0)));
  for (size_t j = 0; j < ncols; ++j)
    for (size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  for (size_t i = 0; i < rows; ++i) m[i][ncols] = b[i];
  std::vector<size_t> pivot_col;
  size_t prow = 0;
  for (size_t j = 0; j < ncols && prow < rows; ++j) {
    size_t sel = prow;
    while (sel < rows && m[sel][j] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[prow]);
    Rat inv = Rat(1) / m[prow][j];
    for (size_t k = j; k <= ncols; ++k) m[prow][k] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == prow || m[i][j] == 0) continue;
      Rat f = m[i][j];
      for (size_t k = j; k <= ncols; ++k) m[i][k] -= f * m[prow][k];
    }
    pivot_col.push_back(j);
    ++prow;
  }
  for (size_t i = prow; i < rows; ++i)
    if (m[i][ncols] != 0) return std::nullopt;
  std::vector<Rat> x(ncols, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][ncols];
  return x;
}

Rat det_gauss(std::vector<std::vector<Rat>> m) {
  size_t n = m.size();
  Rat det(1);
  for (size_t j = 0; j < n; ++j) {
    size_t sel = j;
    while (sel < n && m[sel][j] == 0) ++sel;
    if (sel == n) return Rat(0);
    if (sel != j) {
      std::swap(m[sel], m[j]);
      det = -det;
    }
    det *= m[j][j];
    Rat inv = Rat(1) / m[j][j];
    for (size_t i = j + 1; i < n; ++i) {
      if (m[i][j] == 0) continue;
      Rat f = m[i][j] * inv;
      for (size_t k = j; k < n; ++k) m[i][k] -= f * m[j][k];
    }
  }
  return det;
}

UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  // Newton form.
  size_t n = xs.size();
  std::vector<Rat> coef = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  UniPoly p;
  for (size_t i = n; i-- > 0;) {
    p = p * UniPoly(std::vector<Rat>{-xs[i], Rat(1)}) + UniPoly::constant(coef[i]);
  }
  return p;
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::rationals() {
  static std::shared_ptr<const NumberField> q(
      new NumberField(UniPoly::monomial(1, 1), RealAlgebraic(Rat(0))));
  return q;
}

std::shared_ptr<const NumberField> NumberField::make(const UniPoly& modulus,
                                                     const RealAlgebraic& alpha) {
  return std::shared_ptr<const NumberField>(
      new NumberField(modulus.primitive(), alpha));
}

NFElem NumberField::zero() const { return NFElem(degree(), Rat(0)); }

NFElem NumberField::one() const { return from_rat(Rat(1)); }

NFElem NumberField::from_rat(const Rat& q) const {
  NFElem e = zero();
  e[0] = q;
  if (degree() == 1) {
    // Reduce the constant against a linear modulus a*x + b only when x itself
    // is the value; constants are untouched.
  }
  return e;
}

NFElem NumberField::generator() const {
  if (degree() == 1) return from_rat(-m_[0] / m_[1]);
  NFElem e = zero();
  e[1] = 1;
  return e;
}

NFElem NumberField::from_poly(const UniPoly& p) const {
  UniPoly r = p.divmod(m_).second;
  NFElem e = zero();
  for (int i = 0; i <= r.degree(); ++i) e[i] = r[i];
  return e;
}

UniPoly NumberField::to_poly(const NFElem& e) const {
  return UniPoly(std::vector<Rat>(e.begin(), e.end()));
}

NFElem NumberField::add(const NFElem& a, const NFElem& b) const {
  NFElem r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

NFElem NumberField::sub(const NFElem& a, const NFElem& b) const {
  NFElem r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

NFElem NumberField::neg(const NFElem& a) const {
  NFElem r = a;
  for (auto& x : r) x = -x;
  return r;
}

NFElem NumberField::mul(const NFElem& a, const NFElem& b) const {
  return from_poly(to_poly(a) * to_poly(b));
}

NFElem NumberField::mul_rat(const NFElem& a, const Rat& q) const {
  NFElem r = a;
  for (auto& x : r) x *= q;
  return r;
}

NFElem NumberField::inv(const NFElem& a) const {
  if (is_zero(a)) throw Error(ErrorKind::Internal, "division by zero");
  auto [g, u] = ext_gcd_mod(to_poly(a), m_);
  if (g.degree() != 0)
    throw Error(ErrorKind::Internal, "reducible modulus in inversion");
  return from_poly(u);
}

NFElem NumberField::div(const NFElem& a, const NFElem& b) const {
  return mul(a, inv(b));
}

NFElem NumberField::pow(const NFElem& a, unsigned n) const {
  NFElem r = one(), b = a;
  for (; n; n >>= 1) {
    if (n & 1) r = mul(r, b);
    if (n > 1) b = mul(b, b);
  }
  return r;
}

bool NumberField::is_zero(const NFElem& a) const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

std::optional<Rat> NumberField::as_rational(const NFElem& a) const {
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return std::nullopt;
  return a[0];
}

int NumberField::sign(const NFElem& a) const {
  if (is_zero(a)) return 0;
  if (auto q = as_rational(a)) return sgn(*q);
  UniPoly p = to_poly(a);
  for (;;) {
    Interval v = interval_eval(p, {alpha_.lo(), alpha_.hi()});
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    alpha_.refine();
  }
}

NFElem NumberField::abs(const NFElem& a) const {
  return sign(a) < 0 ? neg(a) : a;
}

UniPoly NumberField::elem_minpoly(const NFElem& a) const {
  if (auto q = as_rational(a))
    return UniPoly(std::vector<Rat>{-*q, Rat(1)}).primitive();
  int d = degree();
  std::vector<std::vector<Rat>> powers;
  NFElem p = one();
  powers.push_back(std::vector<Rat>(p.begin(), p.end()));
  for (int k = 1; k <= d; ++k) {
    p = mul(p, a);
    std::vector<Rat> pk(p.begin(), p.end());
    std::vector<Rat> rhs = pk;
    for (auto& x : rhs) x = -x;
    if (auto sol = solve_linear(powers, rhs)) {
      std::vector<Rat> mc = *sol;
      mc.push_back(Rat(1));
      return UniPoly(std::move(mc)).primitive();
    }
    powers.push_back(std::move(pk));
  }
  throw Error(ErrorKind::Internal, "minimal polynomial not found");
}

RealAlgebraic NumberField::to_real(const NFElem& a) const {
  if (auto q = as_rational(a)) return RealAlgebraic(*q);
  UniPoly mp = elem_minpoly(a);
  if (mp.degree() == 1) return RealAlgebraic(Rat(-mp[0] / mp[1]));
  std::vector<RealAlgebraic> cands = isolate_real_roots(mp);
  UniPoly p = to_poly(a);
  for (;;) {
    Interval v = interval_eval(p, {alpha_.lo(), alpha_.hi()});
    std::vector<size_t> hits;
    for (size_t i = 0; i < cands.size(); ++i)
      if (!(cands[i].hi() <= v.lo || v.hi <= cands[i].lo())) hits.push_back(i);
    if (hits.size() == 1) return cands[hits[0]];
    alpha_.refine();
    for (auto& c : cands) c.refine();
  }
}

std::string NumberField::str(const NFElem& a) const {
  return to_poly(a).str("a");
}

// ---------------------------------------------------------------------------

NFPoly::NFPoly(FieldPtr K, std::vector<NFElem> coeffs)
    : K_(std::move(K)), c_(std::move(coeffs)) {
  trim();
}

void NFPoly::trim() {
  while (!c_.empty() && K_->is_zero(c_.back())) c_.pop_back();
}

NFPoly NFPoly::from_unipoly(const FieldPtr& K, const UniPoly& p) {
  std::vector<NFElem> c;
  for (int i = 0; i <= p.degree(); ++i) c.push_back(K->from_rat(p[i]));
  return NFPoly(K, std::move(c));
}

NFElem NFPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return K_->zero();
  return c_[i];
}

void NFPoly::set_coeff(int i, const NFElem& v) {
  if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, K_->zero());
  c_[i] = v;
  trim();
}

NFPoly NFPoly::operator+(const NFPoly& o) const {
  std::vector<NFElem> r(std::max(c_.size(), o.c_.size()), K_->zero());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = K_->add(r[i], o.c_[i]);
  return NFPoly(K_, std::move(r));
}

NFPoly NFPoly::operator-(const NFPoly& o) const {
  std::vector<NFElem> r(std::max(c_.size(), o.c_.size()), K_->zero());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = K_->sub(r[i], o.c_[i]);
  return NFPoly(K_, std::move(r));
}

NFPoly NFPoly::operator*(const NFPoly& o) const {
  if (is_zero() || o.is_zero()) return NFPoly(K_);
  std::vector<NFElem> r(c_.size() + o.c_.size() - 1, K_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (K_->is_zero(c_[i])) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = K_->add(r[i + j], K_->mul(c_[i], o.c_[j]));
  }
  return NFPoly(K_, std::move(r));
}

NFPoly NFPoly::scale(const NFElem& v) const {
  std::vector<NFElem> r = c_;
  for (auto& x : r) x = K_->mul(x, v);
  return NFPoly(K_, std::move(r));
}

std::pair<NFPoly, NFPoly> NFPoly::divmod(const NFPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::Internal, "division by zero polynomial");
  std::vector<NFElem> rem = c_;
  int dd = d.degree();
  int dr = static_cast<int>(rem.size()) - 1;
  if (dr < dd) return {NFPoly(K_), *this};
  NFElem li = K_->inv(d.lc());
  std::vector<NFElem> q(dr - dd + 1, K_->zero());
  for (int i = dr; i >= dd; --i) {
    if (K_->is_zero(rem[i])) continue;
    NFElem f = K_->mul(rem[i], li);
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j)
      rem[i - dd + j] = K_->sub(rem[i - dd + j], K_->mul(f, d.c_[j]));
  }
  return {NFPoly(K_, std::move(q)), NFPoly(K_, std::move(rem))};
}

NFPoly NFPoly::monic() const {
  if (is_zero()) return *this;
  return scale(K_->inv(lc()));
}

NFPoly NFPoly::derivative() const {
  if (degree() < 1) return NFPoly(K_);
  std::vector<NFElem> r(c_.size() - 1, K_->zero());
  for (size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = K_->mul_rat(c_[i], Rat(static_cast<long>(i)));
  return NFPoly(K_, std::move(r));
}

NFPoly NFPoly::gcd(const NFPoly& o) const {
  NFPoly a = *this, b = o;
  while (!b.is_zero()) {
    NFPoly r = a.divmod(b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

NFElem NFPoly::eval(const NFElem& x) const {
  NFElem r = K_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = K_->add(K_->mul(r, x), *it);
  return r;
}

std::vector<std::pair<NFPoly, int>> NFPoly::squarefree_decomposition() const {
  std::vector<std::pair<NFPoly, int>> out;
  if (degree() < 1) return out;
  NFPoly f = monic();
  NFPoly fp = f.derivative();
  NFPoly a = f.gcd(fp);
  NFPoly b = f.divmod(a).first;
  NFPoly c = fp.divmod(a).first - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    NFPoly d = b.gcd(c);
    if (d.degree() > 0) out.emplace_back(d, i);
    b = b.divmod(d).first;
    c = c.divmod(d).first - b.derivative();
    ++i;
  }
  return out;
}

std::string NFPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (K_->is_zero(c_[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << K_->str(c_[i]) << ")";
    if (i > 0) {
      os << "*" << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

NFElem map_to_extension(const NumberField& K, const NFElem& a,
                        const NumberField& L, const NFElem& alpha_in_L) {
  UniPoly p = K.to_poly(a);
  NFElem r = L.zero();
  for (int i = p.degree(); i >= 0; --i)
    r = L.add(L.mul(r, alpha_in_L), L.from_rat(p.coeff(i)));
  return r;
}

namespace {

void roots_over_q(const FieldPtr& K, const NFPoly& S, int mult,
                  std::vector<ExtensionRoot>& out) {
  std::vector<Rat> rc;
  for (int i = 0; i <= S.degree(); ++i) {
    auto q = K->as_rational(S.coeff(i));
    if (!q) throw Error(ErrorKind::Internal, "expected rational coefficient");
    rc.push_back(*q);
  }
  UniPoly u(std::move(rc));
  for (const auto& [q, m] : factor_univariate(u).factors) {
    (void)m;  // u is squarefree
    if (q.degree() == 1) {
      Rat v = -q[0] / q[1];
      out.push_back({K, K->generator(), K->from_rat(v), mult, RealAlgebraic(v)});
    } else {
      for (const auto& root : isolate_real_roots(q)) {
        FieldPtr L = NumberField::make(q, root);
        out.push_back({L, L->from_rat(Rat(0)), L->generator(), mult, root});
      }
    }
  }
}

// Flatten Q(alpha)(c) into a single extension of Q via theta = c + s*alpha.
void roots_with_extension(const FieldPtr& K, const NFPoly& S, int mult,
                          std::vector<ExtensionRoot>& out) {
  int n = S.degree();
  const UniPoly& m = K->modulus();
  int dm = m.degree();
  for (long s = 1; s <= 24; ++s) {
    // T(a, x) = S(x - s*a) with coefficients lifted to polynomials in a.
    // Ta[i] = coefficient of a^i as a polynomial in x.
    std::vector<UniPoly> Ta;
    auto add_ta = [&](int i, const UniPoly& p) {
      if (static_cast<int>(Ta.size()) <= i) Ta.resize(i + 1);
      Ta[i] = Ta[i] + p;
    };
    for (int j = 0; j <= n; ++j) {
      UniPoly lift = K->to_poly(S.coeff(j));
      // (x - s*a)^j expanded by binomials.
      Rat binom(1);
      for (int i = 0; i <= j; ++i) {
        Rat c = binom * rat_pow(Rat(-s), i);
        for (int e = 0; e <= lift.degree(); ++e)
          if (lift[e] != 0)
            add_ta(e + i, UniPoly::monomial(lift[e] * c, j - i));
        binom = binom * Rat(j - i) / Rat(i + 1);
      }
    }
    while (!Ta.empty() && Ta.back().is_zero()) Ta.pop_back();
    int dt = static_cast<int>(Ta.size()) - 1;
    if (dt < 1) throw Error(ErrorKind::Internal, "degenerate flattening");

    // R(x) = Res_a(m(a), T(a, x)) by Sylvester determinants and interpolation.
    int D = dm * n + 1;
    std::vector<Rat> xs, ys;
    for (int t = 0; static_cast<int>(xs.size()) < D + 1; ++t) {
      Rat tv = (t % 2 == 0) ? Rat(t / 2) : Rat(-(t / 2 + 1));
      int size = dm + dt;
      std::vector<std::vector<Rat>> M(size, std::vector<Rat>(size, Rat(0)));
      for (int r = 0; r < dt; ++r)
        for (int i = 0; i <= dm; ++i) M[r][r + i] = m[dm - i];
      for (int r = 0; r < dm; ++r)
        for (int i = 0; i <= dt; ++i)
          M[dt + r][r + i] = Ta[dt - i].eval(tv);
      xs.push_back(tv);
      ys.push_back(det_gauss(std::move(M)));
    }
    UniPoly R = interpolate(xs, ys);
    if (R.is_zero()) throw Error(ErrorKind::Internal, "vanishing resultant");
    if (R.gcd(R.derivative()).degree() != 0) continue;  // unlucky s

    for (const auto& theta : isolate_real_roots(R)) {
      if (theta.is_rational()) continue;  // cannot contain alpha
      FieldPtr L = NumberField::make(theta.minpoly(), theta);
      // gcd of m(a) and T(a, theta) over L recovers a = alpha.
      NFPoly A = NFPoly::from_unipoly(L, m);
      std::vector<NFElem> bc;
      for (int i = 0; i <= dt; ++i) bc.push_back(L->from_poly(Ta[i]));
      NFPoly B(L, std::move(bc));
      NFPoly g = A.gcd(B);
      if (g.degree() != 1) continue;  // theta belongs to another embedding
      NFElem alpha_L = L->neg(g.coeff(0));  // monic: a + g0
      if (L->to_real(alpha_L) != K->generator_value()) continue;
      NFElem c = L->sub(L->generator(), L->mul_rat(alpha_L, Rat(s)));
      // The root must satisfy S with coefficients mapped into L.
      NFElem acc = L->zero();
      for (int j = n; j >= 0; --j)
        acc = L->add(L->mul(acc, c),
                     map_to_extension(*K, S.coeff(j), *L, alpha_L));
      if (!L->is_zero(acc))
        throw Error(ErrorKind::Internal, "recovered root fails verification");
      out.push_back({L, alpha_L, c, mult, L->to_real(c)});
    }
    return;
  }
  throw Error(ErrorKind::Internal, "no squarefree flattening found");
}

}  // namespace

std::vector<ExtensionRoot> real_roots(const NFPoly& p) {
  if (p.is_zero())
    throw Error(ErrorKind::Precondition, "indeterminate root count");
  const FieldPtr& K = p.field();
  std::vector<ExtensionRoot> out;
  for (const auto& [S, mult] : p.squarefree_decomposition()) {
    if (K->is_rational_field()) {
      roots_over_q(K, S, mult, out);
    } else if (S.degree() == 1) {
      NFElem root = K->neg(S.coeff(0));  // S monic
      out.push_back({K, K->generator(), root, mult, K->to_real(root)});
    } else {
      roots_with_extension(K, S, mult, out);
    }
  }
  std::sort(out.begin(), out.end(), [](const ExtensionRoot& a, const ExtensionRoot& b) {
    return RealAlgebraic::compare(a.value, b.value) < 0;
  });
  return out;
}

}  // namespace germ
