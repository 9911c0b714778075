// SPDX-License-Identifier: Apache-2.0
#include "germ/factor.hpp"

#include <algorithm>
#include <cstdint>

#include "germ/bipoly.hpp"

namespace germ {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[y] for word-size primes (p < 2^31).

using FP = std::vector<uint64_t>;  // lowest degree first, trimmed

void fp_trim(FP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FP& f) { return static_cast<int>(f.size()) - 1; }

uint64_t fp_pow_scalar(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  for (; e; e >>= 1) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
  }
  return r;
}

uint64_t fp_inv_scalar(uint64_t a, uint64_t p) { return fp_pow_scalar(a, p - 2, p); }

FP fp_sub(const FP& a, const FP& b, uint64_t p) {
  FP r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  fp_trim(r);
  return r;
}

FP fp_mul(const FP& a, const FP& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(r);
  return r;
}

FP fp_scale(const FP& a, uint64_t c, uint64_t p) {
  FP r = a;
  for (auto& x : r) x = x * c % p;
  fp_trim(r);
  return r;
}

FP fp_monic(const FP& a, uint64_t p) {
  if (a.empty()) return a;
  return fp_scale(a, fp_inv_scalar(a.back(), p), p);
}

FP fp_rem(FP a, const FP& b, uint64_t p) {
  uint64_t li = fp_inv_scalar(b.back(), p);
  while (fp_deg(a) >= fp_deg(b)) {
    uint64_t c = a.back() * li % p;
    int sh = fp_deg(a) - fp_deg(b);
    for (size_t j = 0; j < b.size(); ++j)
      a[sh + j] = (a[sh + j] + p - c * b[j] % p) % p;
    fp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

FP fp_div_exact(FP a, const FP& b, uint64_t p) {
  uint64_t li = fp_inv_scalar(b.back(), p);
  FP q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (fp_deg(a) >= fp_deg(b)) {
    uint64_t c = a.back() * li % p;
    int sh = fp_deg(a) - fp_deg(b);
    q[sh] = c;
    for (size_t j = 0; j < b.size(); ++j)
      a[sh + j] = (a[sh + j] + p - c * b[j] % p) % p;
    fp_trim(a);
    if (a.empty()) break;
  }
  fp_trim(q);
  return q;
}

FP fp_gcd(FP a, FP b, uint64_t p) {
  while (!b.empty()) {
    FP r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

FP fp_derivative(const FP& a, uint64_t p) {
  if (a.size() < 2) return {};
  FP r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  fp_trim(r);
  return r;
}

FP fp_powmod(FP base, const Int& e, const FP& mod, uint64_t p) {
  FP r = {1};
  base = fp_rem(std::move(base), mod, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = fp_rem(fp_mul(r, r, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_rem(fp_mul(r, base, p), mod, p);
  }
  return r;
}

// Inverse of a mod m, gcd(a, m) = 1, via extended Euclid.
FP fp_invmod(const FP& a, const FP& m, uint64_t p) {
  FP r0 = m, r1 = fp_rem(a, m, p);
  FP t0 = {}, t1 = {1};
  while (!r1.empty()) {
    FP q = fp_div_exact(fp_sub(r0, fp_rem(r0, r1, p), p), r1, p);
    FP r2 = fp_rem(r0, r1, p);
    FP t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd, constant.
  return fp_scale(t0, fp_inv_scalar(r0[0], p), p);
}

struct Rng {
  uint64_t s = 0x9E3779B97F4A7C15ull;
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

// Cantor-Zassenhaus equal-degree splitting, p odd.
void fp_edf(const FP& f, int d, uint64_t p, Rng& rng, std::vector<FP>& out) {
  if (fp_deg(f) == d) {
    out.push_back(f);
    return;
  }
  Int e = Int(static_cast<unsigned long>(p));
  mpz_pow_ui(e.get_mpz_t(), e.get_mpz_t(), d);
  e = (e - 1) / 2;
  for (;;) {
    FP a(fp_deg(f), 0);
    for (auto& c : a) c = rng.next() % p;
    fp_trim(a);
    if (a.empty()) continue;
    FP t = fp_powmod(a, e, f, p);
    if (t.empty())
      t = {p - 1};
    else
      t[0] = (t[0] + p - 1) % p;
    fp_trim(t);
    if (t.empty()) continue;
    FP u = fp_gcd(t, f, p);
    if (fp_deg(u) > 0 && fp_deg(u) < fp_deg(f)) {
      fp_edf(u, d, p, rng, out);
      fp_edf(fp_div_exact(f, u, p), d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree f mod p, sorted.
std::vector<FP> fp_factor_squarefree(FP f, uint64_t p) {
  std::vector<FP> out;
  Rng rng;
  FP h = {0, 1};  // y
  FP y = h;
  Int pz(static_cast<unsigned long>(p));
  int d = 0;
  while (fp_deg(f) >= 2 * (d + 1)) {
    ++d;
    h = fp_powmod(h, pz, f, p);
    FP g = fp_gcd(fp_sub(h, y, p), f, p);
    if (fp_deg(g) > 0) {
      fp_edf(g, d, p, rng, out);
      f = fp_div_exact(f, g, p);
      h = fp_rem(h, f, p);
    }
  }
  if (fp_deg(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const FP& a, const FP& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic in (Z/p^l)[y], divisors monic.

using ZP = std::vector<Int>;  // lowest degree first, coefficients in [0, P)

void zp_trim(ZP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZP zp_mul(const ZP& a, const ZP& b, const Int& P) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c %= P;
  zp_trim(r);
  return r;
}

ZP zp_sub(const ZP& a, const ZP& b, const Int& P) {
  ZP r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) {
    r[i] -= b[i];
    if (r[i] < 0) r[i] += P;
  }
  zp_trim(r);
  return r;
}

ZP zp_rem(ZP a, const ZP& m, const Int& P) {
  // m monic
  while (static_cast<int>(a.size()) >= static_cast<int>(m.size()) && !a.empty()) {
    Int c = a.back();
    size_t sh = a.size() - m.size();
    for (size_t j = 0; j < m.size(); ++j) {
      a[sh + j] -= c * m[j];
      a[sh + j] %= P;
      if (a[sh + j] < 0) a[sh + j] += P;
    }
    zp_trim(a);
  }
  return a;
}

Int sym_lift(const Int& c, const Int& P) {
  return 2 * c > P ? Int(c - P) : c;
}

// ---------------------------------------------------------------------------
// Univariate Zassenhaus.

std::vector<Int> int_coeffs(const UniPoly& f) {
  std::vector<Int> c;
  c.reserve(f.degree() + 1);
  for (const auto& a : f.coeffs()) c.push_back(Int(a.get_num()));
  return c;
}

const std::vector<unsigned long>& prime_pool() {
  static const std::vector<unsigned long> pool = [] {
    std::vector<unsigned long> v;
    Int q(1);
    mpz_mul_2exp(q.get_mpz_t(), q.get_mpz_t(), 29);
    for (int i = 0; i < 64; ++i) {
      mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
      v.push_back(q.get_ui());
    }
    return v;
  }();
  return pool;
}

FP reduce_mod_p(const std::vector<Int>& c, uint64_t p) {
  FP r(c.size());
  Int t;
  for (size_t i = 0; i < c.size(); ++i) {
    t = c[i] % static_cast<long>(p);
    if (t < 0) t += static_cast<long>(p);
    r[i] = t.get_ui();
  }
  fp_trim(r);
  return r;
}

// 2-norm upper bound, rounded up to an integer.
Int two_norm_bound(const std::vector<Int>& c) {
  Int s(0);
  for (const auto& a : c) s += a * a;
  Int r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

// Iterate over index combinations of size s from pool; cb returns true to stop.
template <typename CB>
bool for_combinations(const std::vector<int>& pool, int s, CB cb) {
  int n = static_cast<int>(pool.size());
  if (s > n) return false;
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  for (;;) {
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i) pick[i] = pool[idx[i]];
    if (cb(pick)) return true;
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool unipoly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::vector<UniPoly> factor_squarefree_integer(const UniPoly& g) {
  int n = g.degree();
  if (n <= 1) return {g};
  std::vector<Int> gc = int_coeffs(g);
  Int L(gc.back());

  // Prime with invertible leading coefficient and squarefree reduction.
  uint64_t p = 0;
  FP gp;
  for (unsigned long q : prime_pool()) {
    if (mpz_divisible_ui_p(L.get_mpz_t(), q)) continue;
    FP cand = reduce_mod_p(gc, q);
    if (fp_deg(cand) != n) continue;
    if (fp_deg(fp_gcd(cand, fp_derivative(cand, q), q)) == 0) {
      p = q;
      gp = fp_monic(cand, q);
      break;
    }
  }
  if (!p) throw Error(ErrorKind::Internal, "no usable prime found");

  std::vector<FP> mods = fp_factor_squarefree(gp, p);
  int r = static_cast<int>(mods.size());
  if (r == 1) return {g};

  // Modulus covering coefficients of any factor times the leading coefficient.
  Int B = two_norm_bound(gc) * abs(L);
  mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), n + 24);
  Int P(static_cast<unsigned long>(p));
  int lsteps = 1;
  while (P <= B) {
    P *= static_cast<unsigned long>(p);
    ++lsteps;
  }

  // Monic image F = g / lc mod P.
  Int w;
  if (!mpz_invert(w.get_mpz_t(), L.get_mpz_t(), P.get_mpz_t()))
    throw Error(ErrorKind::Internal, "leading coefficient not invertible");
  ZP F(n + 1);
  for (int i = 0; i <= n; ++i) {
    F[i] = gc[i] * w % P;
    if (F[i] < 0) F[i] += P;
  }

  // Bezout data mod p: b_i * prod_{j!=i} mods_j == 1 (mod mods_i).
  std::vector<FP> bez(r);
  for (int i = 0; i < r; ++i) {
    FP prod = {1};
    for (int j = 0; j < r; ++j)
      if (j != i) prod = fp_rem(fp_mul(prod, mods[j], p), mods[i], p);
    bez[i] = fp_invmod(prod, mods[i], p);
  }

  // Lift the monic factorization from p^k to p^(k+1).
  std::vector<ZP> lifted(r);
  for (int i = 0; i < r; ++i) {
    lifted[i].assign(mods[i].size(), Int(0));
    for (size_t j = 0; j < mods[i].size(); ++j)
      lifted[i][j] = Int(static_cast<unsigned long>(mods[i][j]));
  }
  Int pk(static_cast<unsigned long>(p));
  for (int k = 1; k < lsteps; ++k) {
    Int pk1 = pk * static_cast<unsigned long>(p);
    ZP prod = {Int(1)};
    for (int i = 0; i < r; ++i) prod = zp_mul(prod, lifted[i], pk1);
    ZP e = zp_sub(F, prod, pk1);
    FP ep(e.size(), 0);
    Int t;
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
      t = e[i] / pk % static_cast<long>(p);
      ep[i] = t.get_ui();
      if (ep[i]) any = true;
    }
    fp_trim(ep);
    if (any) {
      for (int i = 0; i < r; ++i) {
        FP d = fp_rem(fp_mul(ep, bez[i], p), mods[i], p);
        for (size_t j = 0; j < d.size(); ++j)
          if (d[j]) lifted[i][j] += pk * static_cast<unsigned long>(d[j]);
      }
    }
    pk = pk1;
  }

  // Recombination.
  std::vector<UniPoly> out;
  std::vector<int> remaining(r);
  for (int i = 0; i < r; ++i) remaining[i] = i;
  UniPoly H = g;
  Int Hl(L), H0(gc[0] == 0 ? Int(0) : gc[0]);
  Int bnd = B;
  // Subsets are filtered by degree (at most half of the remainder), so a
  // true factor is found either directly or via its complement.
  for (int s = 1; s <= static_cast<int>(remaining.size());) {
    bool found = for_combinations(remaining, s, [&](const std::vector<int>& pick) {
      int dsum = 0;
      for (int i : pick) dsum += static_cast<int>(lifted[i].size()) - 1;
      if (2 * dsum > H.degree()) return false;
      // Constant-term divisibility filter.
      Int c = Hl;
      for (int i : pick) c = c * lifted[i][0] % P;
      c = sym_lift(c < 0 ? Int(c + P) : c, P);
      Int hc = Hl * H0;
      if (c == 0 || !mpz_divisible_p(hc.get_mpz_t(), c.get_mpz_t())) return false;
      ZP cand = {Hl % P};
      if (cand[0] < 0) cand[0] += P;
      for (int i : pick) cand = zp_mul(cand, lifted[i], P);
      std::vector<Rat> cq(cand.size());
      for (size_t i = 0; i < cand.size(); ++i) {
        Int v = sym_lift(cand[i], P);
        if (abs(v) > bnd) return false;
        cq[i] = Rat(v);
      }
      UniPoly C = UniPoly(std::move(cq)).primitive();
      auto [q, rem] = H.divmod(C);
      if (!rem.is_zero()) return false;
      out.push_back(C);
      H = q.primitive();
      Hl = Int(H.lc().get_num());
      H0 = Int(H.coeff(0).get_num());
      std::vector<int> nr;
      for (int i : remaining)
        if (std::find(pick.begin(), pick.end(), i) == pick.end()) nr.push_back(i);
      remaining = std::move(nr);
      return true;
    });
    if (!found) ++s;
  }
  if (H.degree() > 0) out.push_back(H.primitive());
  std::sort(out.begin(), out.end(), unipoly_less);
  return out;
}

UniFactorization factor_univariate(const UniPoly& f) {
  UniFactorization res;
  if (f.is_zero()) {
    res.unit = 0;
    return res;
  }
  UniPoly pp = f.primitive();
  res.unit = f.lc() / pp.lc();
  if (pp.degree() == 0) return res;
  int v = pp.valuation();
  if (v > 0) {
    res.factors.emplace_back(UniPoly::monomial(1, 1), v);
    pp = pp.shift_down(v);
  }
  for (const auto& [q, m] : pp.squarefree_decomposition()) {
    if (q.degree() == 1) {
      res.factors.emplace_back(q.primitive(), m);
    } else {
      for (const auto& irr : factor_squarefree_integer(q.primitive()))
        res.factors.emplace_back(irr, m);
    }
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& a, const auto& b) { return unipoly_less(a.first, b.first); });
  return res;
}

// ---------------------------------------------------------------------------
// Bivariate factorization.

namespace {

// Graded-lex comparison for deterministic factor ordering.
bool bipoly_less(const BiPoly& a, const BiPoly& b) {
  if (a.total_degree() != b.total_degree())
    return a.total_degree() < b.total_degree();
  if (a.deg_y() != b.deg_y()) return a.deg_y() < b.deg_y();
  auto ta = a.terms().begin(), tb = b.terms().begin();
  while (ta != a.terms().end() && tb != b.terms().end()) {
    if (ta->first != tb->first) return ta->first < tb->first;
    if (ta->second != tb->second) return ta->second < tb->second;
    ++ta;
    ++tb;
  }
  return a.terms().size() < b.terms().size();
}

// Squarefree decomposition w.r.t. y of a polynomial primitive in y.
std::vector<std::pair<BiPoly, int>> yun_bivariate(const BiPoly& f) {
  std::vector<std::pair<BiPoly, int>> out;
  if (f.is_squarefree()) {
    out.emplace_back(f.primitive(), 1);
    return out;
  }
  BiPoly fp = f.derivative_y();
  BiPoly a = f.gcd(fp);
  BiPoly b = f.exact_div(a);
  BiPoly c = fp.exact_div(a) - b.derivative_y();
  int i = 1;
  while (b.total_degree() > 0) {
    BiPoly d = b.gcd(c);
    if (d.total_degree() > 0) out.emplace_back(d.primitive(), i);
    b = b.exact_div(d);
    c = c.exact_div(d) - b.derivative_y();
    ++i;
  }
  return out;
}

// Factor products in (Z/P)[u][y], y-major with truncated u-coefficients.
using UV = std::vector<ZP>;  // UV[j] = u-expansion of the y^j coefficient

UV uv_mul_trunc(const UV& a, const UV& b, int K, const Int& P) {
  UV r(a.size() + b.size() - 1);
  for (auto& c : r) c.assign(K, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) {
      const ZP &x = a[i], &y = b[j];
      ZP& t = r[i + j];
      for (size_t u = 0; u < x.size() && static_cast<int>(u) < K; ++u) {
        if (x[u] == 0) continue;
        size_t lim = std::min(y.size(), static_cast<size_t>(K) - u);
        for (size_t v = 0; v < lim; ++v) t[u + v] += x[u] * y[v];
      }
    }
  for (auto& c : r) {
    for (auto& x : c) {
      x %= P;
      if (x < 0) x += P;
    }
    zp_trim(c);
  }
  while (!r.empty() && r.back().empty()) r.pop_back();
  return r;
}

Int bipoly_height(const BiPoly& f) {
  Int h(0);
  for (const auto& [k, a] : f.terms()) {
    Int v = abs(Int(a.get_num()));
    if (v > h) h = v;
  }
  return h;
}

// Factors of a squarefree polynomial, primitive integer with deg_y >= 1.
std::vector<BiPoly> factor_squarefree_bi(const BiPoly& G0, int extra_bits) {
  BiPoly G = G0.primitive();
  int n = G.deg_y();
  if (n == 1) return {G};
  if (G.deg_x() <= 0) {
    std::vector<BiPoly> out;
    for (const auto& [q, m] : factor_univariate(G.eval_x(0)).factors)
      out.push_back(BiPoly::from_unipoly_y(q));
    return out;
  }

  UniPoly l = G.y_coeffs().back();

  // Evaluation point: leading coefficient nonzero, squarefree specialization.
  long chosen = 0;
  std::vector<UniPoly> fac0;
  UniPoly h0;
  bool have = false;
  int tried_good = 0;
  std::vector<long> points = {0};
  for (long a = 1; a <= 200; ++a) {
    points.push_back(a);
    points.push_back(-a);
  }
  for (long a : points) {
    Rat la = l.eval(Rat(a));
    if (la == 0) continue;
    UniPoly u = G.eval_x(Rat(a));
    if (u.gcd(u.derivative()).degree() != 0) continue;
    // Monicized specialization: la^(n-1) * u(y / la).
    UniPoly um = u.scale_arg(Rat(1) / la) * rat_pow(la, n - 1);
    um = (um * (Rat(1) / um.lc()));
    std::vector<Rat> umc = um.coeffs();
    // Clear residual denominators exactly (coefficients are integers already
    // when l has integer values; be safe).
    UniPoly h = UniPoly(umc);
    if (!h.is_integer()) continue;
    auto fs = factor_squarefree_integer(h.primitive());
    if (!have || fs.size() < fac0.size()) {
      have = true;
      chosen = a;
      fac0 = fs;
      h0 = h;
    }
    if (fac0.size() == 1) break;
    if (++tried_good >= 4) break;
  }
  if (!have)
    throw Error(ErrorKind::Internal, "no usable evaluation point");
  if (fac0.size() == 1) return {G};

  // Shift so the evaluation point sits at x = 0, then monicize in y.
  BiPoly H = G.shift_x(Rat(chosen));
  UniPoly lt = H.y_coeffs().back();
  std::vector<UniPoly> hc = H.y_coeffs();
  UniPoly lp = UniPoly::constant(1);
  for (int j = n - 1; j >= 0; --j) {
    // Coefficient j picks up lt^(n-1-j); the result is monic in y.
    hc[j] = hc[j] * lp;
    lp = lp * lt;
  }
  hc[n] = UniPoly::constant(1);
  BiPoly Hs = BiPoly::from_y_coeffs(hc);
  h0 = Hs.eval_x(0);

  int r = static_cast<int>(fac0.size());
  int K_target = Hs.deg_x() + 1;

  // Modulus.
  std::vector<Int> h0c = int_coeffs(h0);
  uint64_t p = 0;
  for (unsigned long q : prime_pool()) {
    FP cand = reduce_mod_p(h0c, q);
    if (fp_deg(cand) != n) continue;
    if (fp_deg(fp_gcd(cand, fp_derivative(cand, q), q)) == 0) {
      p = q;
      break;
    }
  }
  if (!p) throw Error(ErrorKind::Internal, "no usable prime found");
  Int B = bipoly_height(Hs);
  mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), Hs.deg_x() + n + extra_bits);
  Int P(static_cast<unsigned long>(p));
  while (P <= B) P *= static_cast<unsigned long>(p);

  // Base factors and Bezout inverses mod P.
  std::vector<ZP> base(r);
  std::vector<FP> basep(r);
  for (int i = 0; i < r; ++i) {
    const UniPoly& fi = fac0[i];
    base[i].resize(fi.degree() + 1);
    for (int j = 0; j <= fi.degree(); ++j) {
      Int v(fi[j].get_num());
      v %= P;
      if (v < 0) v += P;
      base[i][j] = v;
    }
    basep[i] = reduce_mod_p(int_coeffs(fi), p);
    basep[i] = fp_monic(basep[i], p);
  }
  std::vector<ZP> bez(r);
  for (int i = 0; i < r; ++i) {
    ZP prod = {Int(1)};
    for (int j = 0; j < r; ++j)
      if (j != i) prod = zp_rem(zp_mul(prod, base[j], P), base[i], P);
    FP b0 = fp_invmod(reduce_mod_p(prod, p), basep[i], p);
    ZP b(b0.size());
    for (size_t j = 0; j < b0.size(); ++j)
      b[j] = Int(static_cast<unsigned long>(b0[j]));
    // Newton iteration: b <- b(2 - prod*b) mod (base_i, P).
    Int prec(static_cast<unsigned long>(p));
    while (prec < P) {
      prec = prec * prec;
      ZP t = zp_rem(zp_mul(prod, b, P), base[i], P);
      ZP two = {Int(2)};
      t = zp_sub(two, t, P);
      b = zp_rem(zp_mul(b, t, P), base[i], P);
    }
    bez[i] = b;
  }

  // x-adic lifting state.
  std::vector<UV> F(r);
  for (int i = 0; i < r; ++i) {
    F[i].resize(base[i].size());
    for (size_t j = 0; j < base[i].size(); ++j) F[i][j] = {base[i][j]};
  }
  // Target polynomial coefficients mod P as UV.
  UV Ht(n + 1);
  for (auto& c : Ht) c.assign(K_target, Int(0));
  for (const auto& [k, a] : Hs.terms()) {
    Int v(a.get_num());
    v %= P;
    if (v < 0) v += P;
    Ht[k.second][k.first] = v;
  }
  for (auto& c : Ht) zp_trim(c);

  std::vector<BiPoly> found;
  std::vector<int> remaining(r);
  for (int i = 0; i < r; ++i) remaining[i] = i;
  BiPoly Hrem = Hs;
  Int bnd = B;

  auto recombine = [&](int K) {
    // Degree filter plus complements give completeness; see the univariate
    // recombination loop.
    for (int s = 1; s <= static_cast<int>(remaining.size());) {
      bool ok = for_combinations(remaining, s, [&](const std::vector<int>& pick) {
        int dsum = 0;
        for (int i : pick) dsum += static_cast<int>(F[i].size()) - 1;
        if (2 * dsum > Hrem.deg_y()) return false;
        UV cand = F[pick[0]];
        for (size_t t = 1; t < pick.size(); ++t)
          cand = uv_mul_trunc(cand, F[pick[t]], K, P);
        BiPoly C;
        for (size_t j = 0; j < cand.size(); ++j)
          for (size_t u = 0; u < cand[j].size(); ++u) {
            Int v = sym_lift(cand[j][u], P);
            if (abs(v) > bnd) return false;
            if (v != 0)
              C.add_term(static_cast<int>(u), static_cast<int>(j), Rat(v));
          }
        if (!C.divides(Hrem)) return false;
        found.push_back(C);
        Hrem = Hrem.exact_div(C);
        std::vector<int> nr;
        for (int i : remaining)
          if (std::find(pick.begin(), pick.end(), i) == pick.end())
            nr.push_back(i);
        remaining = std::move(nr);
        return true;
      });
      if (!ok) ++s;
    }
  };

  int k = 1;
  for (int checkpoint : {8, 16, 32, K_target}) {
    if (checkpoint > K_target) checkpoint = K_target;
    for (; k < checkpoint; ++k) {
      // Error at order u^k.
      UV prod = F[0];
      for (int i = 1; i < r; ++i) prod = uv_mul_trunc(prod, F[i], k + 1, P);
      ZP e(n, Int(0));
      bool any = false;
      for (int j = 0; j < n; ++j) {
        Int hv = (j < static_cast<int>(Ht.size()) &&
                  k < static_cast<int>(Ht[j].size()))
                     ? Ht[j][k]
                     : Int(0);
        Int pv = (j < static_cast<int>(prod.size()) &&
                  k < static_cast<int>(prod[j].size()))
                     ? prod[j][k]
                     : Int(0);
        Int d = hv - pv;
        d %= P;
        if (d < 0) d += P;
        e[j] = d;
        if (d != 0) any = true;
      }
      zp_trim(e);
      if (!any) continue;
      for (int i = 0; i < r; ++i) {
        ZP d = zp_rem(zp_mul(e, bez[i], P), base[i], P);
        for (size_t j = 0; j < d.size(); ++j) {
          if (d[j] == 0) continue;
          if (F[i][j].size() <= static_cast<size_t>(k))
            F[i][j].resize(k + 1, Int(0));
          F[i][j][k] = d[j];
        }
      }
    }
    // Candidates are certified by exact trial division, so the early
    // checkpoints are purely opportunistic.
    recombine(checkpoint);
    if (remaining.empty() || Hrem.deg_y() == 0) break;
    if (checkpoint == K_target) break;
  }
  if (!remaining.empty() && Hrem.deg_y() > 0) found.push_back(Hrem);

  // Undo monicization and the shift.
  std::vector<BiPoly> out;
  for (const auto& C : found) {
    BiPoly c = C.subst_y_scaled(lt).primitive();
    c = c.shift_x(Rat(-chosen)).primitive();
    out.push_back(c);
  }
  return out;
}

}  // namespace

BiFactorization factor_rational(const BiPoly& f) {
  BiFactorization res;
  if (f.is_zero()) {
    res.unit = 0;
    return res;
  }
  if (f.total_degree() == 0) {
    res.unit = f.coeff(0, 0);
    return res;
  }
  BiPoly P0 = f.primitive();

  // Content in y carries every pure-x factor.
  UniPoly cx = P0.content_y();
  BiPoly Q = P0.primitive_part_y();
  std::vector<std::pair<BiPoly, int>> factors;
  if (cx.degree() > 0) {
    for (const auto& [q, m] : factor_univariate(cx).factors)
      factors.emplace_back(BiPoly::from_unipoly_x(q), m);
  }
  // Pure power of y.
  int vy = Q.deg_y() >= 0 && !Q.is_zero() ? [&] {
    int v = Q.deg_y();
    for (const auto& [k, a] : Q.terms()) v = std::min(v, k.second);
    return v;
  }() : 0;
  if (vy > 0) {
    factors.emplace_back(BiPoly::var_y(), vy);
    BiPoly Q2;
    for (const auto& [k, a] : Q.terms())
      Q2.add_term(k.first, k.second - vy, a);
    Q = Q2;
  }
  if (Q.deg_y() > 0) {
    for (const auto& [g, m] : yun_bivariate(Q)) {
      std::vector<BiPoly> irr;
      for (int attempt = 0;; ++attempt) {
        irr = factor_squarefree_bi(g, 24 + 64 * attempt);
        // Verify the split multiplies back, retrying with a larger modulus.
        BiPoly prod = BiPoly::constant(1);
        for (const auto& c : irr) prod = prod * c;
        if (prod.primitive() == g.primitive()) break;
        if (attempt >= 3)
          throw Error(ErrorKind::Internal, "factor recombination failed");
      }
      for (const auto& c : irr) factors.emplace_back(c, m);
    }
  }
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return bipoly_less(a.first, b.first); });

  // Unit via exact division.
  BiPoly g = f;
  for (const auto& [q, m] : factors)
    for (int i = 0; i < m; ++i) g = g.exact_div(q);
  if (g.total_degree() != 0)
    throw Error(ErrorKind::Internal, "factorization incomplete");
  res.unit = g.coeff(0, 0);
  res.factors = std::move(factors);
  return res;
}

}  // namespace germ
