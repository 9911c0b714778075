// SPDX-License-Identifier: Apache-2.0
#include "germ/puiseux.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

namespace germ {

namespace {

RealAlgebraic ra_abs(const RealAlgebraic& a) { return a.sign() < 0 ? -a : a; }

}  // namespace

Direction::Direction(std::vector<RealAlgebraic> coords) : c_(std::move(coords)) {
  if (c_.empty()) throw Error(ErrorKind::Internal, "empty direction");
  size_t best = 0;
  bool all_rational = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_rational()) all_rational = false;
    if (RealAlgebraic::compare(ra_abs(c_[i]), ra_abs(c_[best])) > 0) best = i;
  }
  RealAlgebraic m = ra_abs(c_[best]);
  if (m.sign() == 0) throw Error(ErrorKind::Internal, "zero direction");
  if (m == RealAlgebraic(Rat(1))) return;  // already canonical
  if (!all_rational)
    throw Error(ErrorKind::Internal, "non-canonical algebraic direction");
  Rat d = m.rational_value();
  for (auto& x : c_) x = RealAlgebraic(x.rational_value() / d);
}

Direction Direction::negated() const {
  Direction d;
  for (const auto& x : c_) d.c_.push_back(-x);
  return d;
}

int Direction::compare(const Direction& a, const Direction& b) {
  if (a.c_.size() != b.c_.size())
    return a.c_.size() < b.c_.size() ? -1 : 1;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int c = RealAlgebraic::compare(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Direction::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].str();
  }
  os << ")";
  return os.str();
}

namespace {

using Key = std::pair<int, int>;  // (u exponent, w exponent)

// Bivariate polynomial over a number field, used only inside the expansion.
struct KBi {
  FieldPtr K;
  std::map<Key, NFElem> t;

  void add(int i, int j, const NFElem& v) {
    if (K->is_zero(v)) return;
    auto it = t.find({i, j});
    if (it == t.end()) {
      t.emplace(Key{i, j}, v);
    } else {
      it->second = K->add(it->second, v);
      if (K->is_zero(it->second)) t.erase(it);
    }
  }
  bool has_w_free() const {
    for (const auto& [k, v] : t)
      if (k.second == 0) return true;
    return false;
  }
  int deg_w() const {
    int d = -1;
    for (const auto& [k, v] : t) d = std::max(d, k.second);
    return d;
  }
};

// F(u, w) = g(sigma*u, w) in the x chart, g(w, sigma*u) in the y chart.
KBi chart_poly(const FieldPtr& K, const BiPoly& g, Chart chart, int sigma) {
  KBi F;
  F.K = K;
  for (const auto& [ij, a] : g.terms()) {
    int ui = chart == Chart::Y_PARAM ? ij.second : ij.first;
    int wj = chart == Chart::Y_PARAM ? ij.first : ij.second;
    Rat c = a;
    if (sigma < 0 && (ui & 1)) c = -c;
    F.add(ui, wj, K->from_rat(c));
  }
  return F;
}

KBi map_field(const KBi& F, const FieldPtr& L, const NFElem& alpha_in_L) {
  KBi G;
  G.K = L;
  for (const auto& [k, v] : F.t)
    G.t.emplace(k, map_to_extension(*F.K, v, *L, alpha_in_L));
  return G;
}

// F(u^p, u^q (c + w)) / u^N with N the minimal u-order.
KBi subst_step(const KBi& F, int p, int q, const NFElem& c) {
  const FieldPtr& K = F.K;
  int dw = F.deg_w();
  std::vector<NFElem> cpow(dw + 1, K->one());
  for (int s = 1; s <= dw; ++s) cpow[s] = K->mul(cpow[s - 1], c);
  KBi G;
  G.K = K;
  for (const auto& [k, a] : F.t) {
    long base = (long)p * k.first + (long)q * k.second;
    if (base > INT_MAX / 2) throw Error(ErrorKind::Internal, "exponent overflow");
    for (int s = 0; s <= k.second; ++s) {
      Int bc;
      mpz_bin_uiui(bc.get_mpz_t(), k.second, s);
      G.add((int)base, s, K->mul_rat(K->mul(a, cpow[k.second - s]), Rat(bc)));
    }
  }
  int N = INT_MAX;
  for (const auto& [k, v] : G.t) N = std::min(N, k.first);
  if (!G.t.empty() && N > 0) {
    std::map<Key, NFElem> shifted;
    for (auto& [k, v] : G.t) shifted.emplace(Key{k.first - N, k.second}, v);
    G.t = std::move(shifted);
  }
  return G;
}

struct EdgeK {
  int p, q;     // slope q/p in lowest terms
  NFPoly face;  // face polynomial in c, exponents j - j_min
};

// Positive-slope edges of the lower Newton polygon, slope filtered against
// min_gamma (>= when !strict, > when strict).
std::vector<EdgeK> edges_of(const KBi& F, const Rat& min_gamma, bool strict) {
  std::vector<EdgeK> out;
  if (F.t.empty()) return out;
  std::vector<Key> pts;
  for (const auto& [k, v] : F.t) pts.push_back(k);
  Key cur = pts[0];
  int jmin_all = pts[0].second;
  for (const auto& p : pts) {
    if (p < cur) cur = p;  // min i, then min j
    jmin_all = std::min(jmin_all, p.second);
  }
  while (cur.second > jmin_all) {
    bool found = false;
    Rat bestg;
    Key best{0, 0};
    for (const auto& pt : pts) {
      if (pt.second >= cur.second) continue;
      Rat g(Int(pt.first - cur.first), Int(cur.second - pt.second));
      g.canonicalize();
      if (!found || g < bestg || (g == bestg && pt.second < best.second)) {
        found = true;
        bestg = g;
        best = pt;
      }
    }
    if (!found) break;
    if (!(bestg > 0)) throw Error(ErrorKind::Internal, "nonpositive polygon slope");
    int q = (int)bestg.get_num().get_si();
    int p = (int)bestg.get_den().get_si();
    long N = (long)p * cur.first + (long)q * cur.second;
    int jlo = best.second, jhi = cur.second;
    std::vector<NFElem> coeffs(jhi - jlo + 1, F.K->zero());
    for (const auto& [k, v] : F.t) {
      if ((long)p * k.first + (long)q * k.second == N && k.second >= jlo &&
          k.second <= jhi)
        coeffs[k.second - jlo] = v;
    }
    bool pass = strict ? bestg > min_gamma : bestg >= min_gamma;
    if (pass) out.push_back({p, q, NFPoly(F.K, coeffs)});
    cur = best;
  }
  return out;
}

struct Leaf {
  FieldPtr L;
  std::vector<std::pair<Rat, NFElem>> terms;  // (exponent in x, coeff)
  bool exact = false;
};

// After a simple face root the expansion is analytic in the current
// variable: one more linear Newton step certifies the data, then stop.
void continuation(KBi F, std::vector<std::pair<Rat, NFElem>> prefix, Rat offset,
                  const Rat& scale, std::vector<Leaf>& out) {
  for (int step = 0; step < 1; ++step) {
    if (!F.has_w_free()) {
      out.push_back({F.K, std::move(prefix), true});
      return;
    }
    auto es = edges_of(F, Rat(0), true);
    if (es.size() != 1 || es[0].face.degree() != 1 || es[0].p != 1)
      throw Error(ErrorKind::Internal, "continuation step not linear");
    NFElem c = F.K->neg(F.K->div(es[0].face.coeff(0), es[0].face.coeff(1)));
    Rat r = offset + scale * Rat(es[0].q);
    prefix.emplace_back(r, c);
    F = subst_step(F, 1, es[0].q, c);
    offset = r;
  }
  if (!F.has_w_free()) {
    out.push_back({F.K, std::move(prefix), true});
    return;
  }
  out.push_back({F.K, std::move(prefix), false});
}

void expand(const KBi& F0, const std::vector<std::pair<Rat, NFElem>>& prefix,
            const Rat& offset, const Rat& scale, const Rat& gmin, bool strict,
            int depth, std::vector<Leaf>& out) {
  if (depth > 64) throw Error(ErrorKind::Internal, "expansion depth exceeded");
  KBi F = F0;
  if (!F.has_w_free()) {
    out.push_back({F.K, prefix, true});
    std::map<Key, NFElem> shifted;
    for (auto& [k, v] : F.t) shifted.emplace(Key{k.first, k.second - 1}, v);
    F.t = std::move(shifted);
  }
  if (F.deg_w() <= 0) return;
  for (const auto& e : edges_of(F, gmin, strict)) {
    for (const auto& rt : real_roots(e.face)) {
      Rat gamma(Int(e.q), Int(e.p));
      gamma.canonicalize();
      Rat r = offset + scale * gamma;
      std::vector<std::pair<Rat, NFElem>> pre2;
      pre2.reserve(prefix.size() + 1);
      for (const auto& [re, ce] : prefix)
        pre2.emplace_back(re, map_to_extension(*F.K, ce, *rt.L, rt.alpha_in_L));
      pre2.emplace_back(r, rt.root);
      KBi F1 = subst_step(map_field(F, rt.L, rt.alpha_in_L), e.p, e.q, rt.root);
      Rat scale2 = scale / e.p;
      if (rt.multiplicity == 1) {
        continuation(std::move(F1), std::move(pre2), r, scale2, out);
      } else {
        expand(F1, pre2, r, scale2, Rat(0), true, depth + 1, out);
      }
    }
  }
}

struct Cand {
  FieldPtr L;
  int e = 1;
  std::vector<std::pair<int, NFElem>> terms;  // (t exponent, coeff)
  bool exact = false;
};

Cand to_cand(const Leaf& lf) {
  Cand c;
  c.L = lf.L;
  c.exact = lf.exact;
  Int el(1);
  for (const auto& [r, v] : lf.terms)
    mpz_lcm(el.get_mpz_t(), el.get_mpz_t(), r.get_den().get_mpz_t());
  if (el > 1000000) throw Error(ErrorKind::Internal, "ramification overflow");
  c.e = (int)el.get_si();
  for (const auto& [r, v] : lf.terms) {
    Rat m = r * c.e;
    c.terms.emplace_back((int)m.get_num().get_si(), v);
  }
  return c;
}

// Keep one representative per arc: sigma=-1 only for even e; for even e keep
// the conjugate whose first odd-exponent coefficient is positive.
bool keep_candidate(const Cand& c, int sigma) {
  if (sigma < 0 && (c.e & 1)) return false;
  if (c.e & 1) return true;
  for (const auto& [m, v] : c.terms) {
    if (m & 1) return c.L->sign(v) > 0;
  }
  throw Error(ErrorKind::Internal, "imprimitive even-ramification series");
}

// Exact t-order of g(gamma(t)) for the truncated parametrization; -1 when
// the composition vanishes identically.
int certify(const BiPoly& g, Chart chart, int sigma, const Cand& cd) {
  const FieldPtr& L = cd.L;
  int maxm = cd.terms.empty() ? 0 : cd.terms.back().first;
  std::vector<NFElem> sc(maxm + 1, L->zero());
  for (const auto& [m, v] : cd.terms) sc[m] = v;
  NFPoly S(L, sc);  // the dependent coordinate
  const BiPoly h = chart == Chart::X_PARAM ? g : g.swap_xy();
  auto yc = h.y_coeffs();
  NFPoly acc(L);
  for (int j = (int)yc.size() - 1; j >= 0; --j) {
    acc = acc * S;
    // yc[j] evaluated at the parameter coordinate sigma * t^e
    std::vector<NFElem> pc2(yc[j].is_zero() ? 0 : yc[j].degree() * cd.e + 1,
                            L->zero());
    for (int i = 0; i <= yc[j].degree(); ++i) {
      Rat a = yc[j][i];
      if (sigma < 0 && (i & 1)) a = -a;
      if (a != 0) pc2[i * cd.e] = L->from_rat(a);
    }
    acc = acc + NFPoly(L, pc2);
  }
  if (acc.is_zero()) return -1;
  for (int i = 0; i <= acc.degree(); ++i)
    if (!L->is_zero(acc.coeff(i))) return i;
  throw Error(ErrorKind::Internal, "zero polynomial with nonzero degree");
}

Direction in_field_direction(const FieldPtr& L, std::vector<NFElem> w) {
  size_t best = 0;
  for (size_t i = 1; i < w.size(); ++i) {
    if (L->sign(L->sub(L->abs(w[i]), L->abs(w[best]))) > 0) best = i;
  }
  NFElem d = L->abs(w[best]);
  if (L->is_zero(d)) throw Error(ErrorKind::Internal, "zero tangent vector");
  std::vector<RealAlgebraic> coords;
  coords.reserve(w.size());
  for (const auto& c : w) coords.push_back(L->to_real(L->div(c, d)));
  return Direction(std::move(coords));
}

RealBranch assemble_branch(Chart chart, int sigma, const Cand& cd,
                           const BiPoly& g, int factor_index) {
  RealBranch b;
  b.chart = chart;
  b.sigma = sigma;
  b.e = cd.e;
  b.k = cd.e;
  b.source_factor = factor_index;
  b.truncation = cd.exact ? -1 : certify(g, chart, sigma, cd);
  if (!cd.exact && cd.terms.size() > 0 &&
      b.truncation <= cd.terms.back().first)
    throw Error(ErrorKind::Internal, "truncation not certified");
  const FieldPtr& L = cd.L;
  for (const auto& [m, v] : cd.terms) b.terms.push_back({m, L->to_real(v)});
  // Leading vector at order k = e.
  NFElem lead = L->zero();
  if (!cd.terms.empty() && cd.terms.front().first == cd.e)
    lead = cd.terms.front().second;
  std::vector<NFElem> w(2);
  if (chart == Chart::X_PARAM) {
    w[0] = L->from_rat(Rat(sigma));
    w[1] = lead;
  } else {
    w[0] = lead;
    w[1] = L->from_rat(Rat(sigma));
  }
  b.u = in_field_direction(L, std::move(w));
  b.v = (b.k & 1) ? b.u.negated() : b.u;
  return b;
}

bool branch_less(const RealBranch& a, const RealBranch& b) {
  if (a.k != b.k) return a.k < b.k;
  if (a.chart != b.chart) return a.chart < b.chart;
  if (a.e != b.e) return a.e < b.e;
  if (a.sigma != b.sigma) return a.sigma > b.sigma;  // + side first
  size_t n = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.terms[i].exponent != b.terms[i].exponent)
      return a.terms[i].exponent < b.terms[i].exponent;
    int c = RealAlgebraic::compare(a.terms[i].coeff, b.terms[i].coeff);
    if (c != 0) return c < 0;
  }
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
  return a.source_factor < b.source_factor;
}

}  // namespace

std::vector<NewtonEdge> newton_polygon(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::Precondition, "zero polynomial");
  FieldPtr Q = NumberField::rationals();
  KBi F = chart_poly(Q, f, Chart::X_PARAM, 1);
  std::vector<NewtonEdge> out;
  for (const auto& e : edges_of(F, Rat(0), true)) {
    Rat slope(Int(e.q), Int(e.p));
    slope.canonicalize();
    std::vector<Rat> cs;
    for (int i = 0; i <= e.face.degree(); ++i) {
      auto r = Q->as_rational(e.face.coeff(i));
      cs.push_back(*r);
    }
    out.push_back({slope, UniPoly(std::move(cs))});
  }
  return out;
}

BranchDecomposition real_branches(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::Input, "zero polynomial");
  if (f.coeff(0, 0) != 0)
    throw Error(ErrorKind::Input, "f(0,0) != 0: not a germ through the origin");
  BranchDecomposition out;
  BiPoly fr = f.squarefree_part();
  auto fac = factor_rational(fr);
  FieldPtr Q = NumberField::rationals();
  out.f_rel = BiPoly::constant(Rat(1));
  for (size_t fi = 0; fi < fac.factors.size(); ++fi) {
    const BiPoly& g = fac.factors[fi].first;
    if (g.coeff(0, 0) != 0) continue;  // unit germ at the origin
    std::vector<RealBranch> mine;
    for (Chart chart : {Chart::X_PARAM, Chart::Y_PARAM}) {
      bool strict = chart == Chart::Y_PARAM;
      for (int sigma : {1, -1}) {
        KBi F = chart_poly(Q, g, chart, sigma);
        std::vector<Leaf> leaves;
        expand(F, {}, Rat(0), Rat(1), Rat(1), strict, 0, leaves);
        for (const auto& lf : leaves) {
          Cand cd = to_cand(lf);
          if (!keep_candidate(cd, sigma)) continue;
          mine.push_back(assemble_branch(chart, sigma, cd, g, (int)fi));
        }
      }
    }
    if (!mine.empty()) {
      out.f_rel = out.f_rel * g;
      for (auto& b : mine) out.branches.push_back(std::move(b));
    }
  }
  std::sort(out.branches.begin(), out.branches.end(), branch_less);
  out.isolated_origin = out.branches.empty();
  if (out.isolated_origin) out.f_rel = BiPoly();
  return out;
}

int branch_order(const RealBranch& b) { return b.k; }

std::pair<Direction, Direction> tangent_halflines(const RealBranch& b) {
  return {b.u, b.v};
}

bool is_c1_regular(const RealBranch& b) { return (b.k & 1) == 1; }

RealBranch normalize_param(const ParamBranchInput& p) {
  if (p.components.size() < 2)
    throw Error(ErrorKind::Input, "parametric branch needs at least 2 components");
  // gcd of all exponents with nonzero coefficient
  int g = 0;
  for (const auto& c : p.components) {
    for (int i = 0; i <= c.degree(); ++i)
      if (!c.is_zero() && c[i] != 0) g = std::gcd(g, i);
  }
  if (g == 0) throw Error(ErrorKind::Input, "degenerate branch");
  if ((g & 1) == 0)
    throw Error(ErrorKind::Input,
                "parametrization is 2-to-1; supply the reduced form");
  RealBranch b;
  b.parametric = true;
  b.chart = Chart::X_PARAM;
  b.sigma = 1;
  b.e = 1;
  b.truncation = -1;
  for (const auto& c : p.components) {
    if (g == 1) {
      b.components.push_back(c);
    } else {
      std::vector<Rat> cc(c.is_zero() ? 0 : c.degree() / g + 1, Rat(0));
      for (int i = 0; i <= c.degree(); ++i)
        if (c[i] != 0) cc[i / g] = c[i];
      b.components.push_back(UniPoly(std::move(cc)));
    }
  }
  int k = INT_MAX;
  for (const auto& c : b.components) {
    int v = c.valuation();
    if (v >= 0) k = std::min(k, v);
  }
  b.k = k;
  std::vector<RealAlgebraic> w;
  for (const auto& c : b.components)
    w.push_back(RealAlgebraic(c.degree() >= k && !c.is_zero() ? c[k] : Rat(0)));
  b.u = Direction(std::move(w));
  b.v = (k & 1) ? b.u.negated() : b.u;
  return b;
}

std::string branch_str(const RealBranch& b) {
  std::ostringstream os;
  if (b.parametric) {
    os << "param(";
    for (size_t i = 0; i < b.components.size(); ++i) {
      if (i) os << ", ";
      os << b.components[i].str("t");
    }
    os << ")";
  } else {
    const char* pn = b.chart == Chart::X_PARAM ? "x" : "y";
    const char* dn = b.chart == Chart::X_PARAM ? "y" : "x";
    os << pn << " = " << (b.sigma < 0 ? "-" : "") << "t^" << b.e << ", " << dn
       << " =";
    if (b.terms.empty()) {
      os << " 0";
    } else {
      for (size_t i = 0; i < b.terms.size(); ++i) {
        os << (i ? " + " : " ") << "[" << b.terms[i].coeff.str() << "]*t^"
           << b.terms[i].exponent;
      }
      if (b.truncation != -1) os << " + O(t^" << b.truncation << ")";
    }
  }
  os << " (k=" << b.k << ")";
  return os.str();
}

}  // namespace germ
