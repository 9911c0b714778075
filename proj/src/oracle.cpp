// SPDX-License-Identifier: Apache-2.0
#include "germ/oracle.hpp"

#include <cmath>
#include <numeric>

namespace germ {

namespace {

// f((c x - s y), (s x + c y)) for the rational rotation given by t.
BiPoly rotate(const BiPoly& f, const Rat& t) {
  Rat den = 1 + t * t;
  Rat c = (1 - t * t) / den;
  Rat s = 2 * t / den;
  BiPoly X = BiPoly::var_x() * c - BiPoly::var_y() * s;
  BiPoly Y = BiPoly::var_x() * s + BiPoly::var_y() * c;
  BiPoly out;
  for (const auto& [ij, a] : f.terms())
    out = out + X.pow(ij.first) * Y.pow(ij.second) * a;
  return out;
}

std::vector<Rat> rotation_family(int n) {
  std::vector<Rat> out;
  for (int b = 3; (int)out.size() < n; b += 2) {
    for (int a = 1; 2 * a < b && (int)out.size() < n; ++a) {
      if (std::gcd(a, b) != 1) continue;
      Rat s(a, b);
      s.canonicalize();
      out.push_back(s);
    }
  }
  return out;
}

// Distinct-root count of g(x0, .) in the window |y| <= eps0, with the window
// nudged off any endpoint root; -1 when the fiber is degenerate.
int fiber_count(const BiPoly& g, int j) {
  Rat x0 = pow2(-j);
  Rat eps = pow2(-(j / 2));
  UniPoly p = g.eval_x(x0);
  if (p.is_zero()) return -1;
  for (int tries = 0; tries < 8; ++tries) {
    if (p.sign_at(eps) != 0 && p.sign_at(-eps) != 0)
      return p.sturm_count(-eps, eps);
    eps = eps * Rat(61, 64);
  }
  return -1;
}

}  // namespace

OracleResult parity_by_projection(const BiPoly& f, int trials) {
  if (f.is_zero() || trials < 1)
    throw Error(ErrorKind::Precondition, "oracle needs a nonzero curve");
  BiPoly g = f.squarefree_part();
  OracleResult res;
  for (const Rat& s : rotation_family(trials)) {
    BiPoly gr = rotate(g, s);
    OracleTrial tr;
    tr.s = s;
    int streak = 0, last = -1;
    bool declared = false;
    for (int j = 4; j <= 60; ++j) {
      int count = fiber_count(gr, j);
      if (count < 0) continue;
      if (count == last) {
        ++streak;
      } else {
        last = count;
        streak = 1;
      }
      // Confirm three agreeing scales at a much deeper scale to rule out a
      // transient plateau.
      if (streak >= 3 && fiber_count(gr, std::min(60, j + 9)) == count) {
        tr.j = j;
        tr.count = count;
        tr.parity = count & 1;
        declared = true;
        break;
      }
    }
    if (!declared)
      throw Error(ErrorKind::Precondition, "oracle inconclusive");
    res.trials.push_back(tr);
  }
  res.parity = res.trials[0].parity;
  for (const auto& tr : res.trials)
    if (tr.parity != res.parity)
      throw Error(ErrorKind::Mismatch, "oracle trials disagree");
  return res;
}

std::vector<SampledDirection> sample_tangent_directions(
    const BiPoly& f, const std::vector<int>& radii_exponents) {
  std::vector<SampledDirection> out;
  if (f.is_zero() || radii_exponents.empty()) return out;
  BiPoly g = f.squarefree_part();
  int j = radii_exponents.back();
  Rat r = pow2(-j);
  auto point = [&](const Rat& u, int side) {
    Rat den = 1 + u * u;
    Rat x = (1 - u * u) / den * side;
    Rat y = 2 * u / den;
    return std::pair<Rat, Rat>(x * r, y * r);
  };
  const int N = 256;
  for (int side : {1, -1}) {
    Rat step = Rat(2, N);
    Rat prev_u(-1);
    auto [px, py] = point(prev_u, side);
    int prev_sign = sgn(g.eval(px, py));
    for (int i = 1; i <= N; ++i) {
      Rat u = Rat(-1) + step * i;
      auto [qx, qy] = point(u, side);
      int cur = sgn(g.eval(qx, qy));
      if (cur == 0) {
        double n = std::hypot(qx.get_d(), qy.get_d());
        out.push_back({qx.get_d() / n, qy.get_d() / n});
      } else if (prev_sign != 0 && cur != prev_sign) {
        Rat lo = prev_u, hi = u;
        for (int b = 0; b < 40; ++b) {
          Rat mid = (lo + hi) / 2;
          auto [mx, my] = point(mid, side);
          int ms = sgn(g.eval(mx, my));
          if (ms == 0) {
            lo = hi = mid;
            break;
          }
          if (ms == prev_sign)
            lo = mid;
          else
            hi = mid;
        }
        auto [mx, my] = point((lo + hi) / 2, side);
        double n = std::hypot(mx.get_d(), my.get_d());
        out.push_back({mx.get_d() / n, my.get_d() / n});
      }
      prev_u = u;
      prev_sign = cur;
    }
  }
  return out;
}

}  // namespace germ
