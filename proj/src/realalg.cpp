// SPDX-License-Identifier: Apache-2.0
#include "germ/realalg.hpp"

#include <algorithm>
#include <sstream>

#include "germ/factor.hpp"

namespace germ {

RealAlgebraic::RealAlgebraic(const Rat& q) {
  // q is the root of den*x - num.
  m_ = UniPoly(std::vector<Rat>{-q, Rat(1)}).primitive();
  lo_ = q - 1;
  hi_ = q + 1;
}

RealAlgebraic RealAlgebraic::from_root(const UniPoly& minpoly, const Rat& lo,
                                       const Rat& hi) {
  if (minpoly.degree() < 1)
    throw Error(ErrorKind::Internal, "constant minimal polynomial");
  if (minpoly.degree() == 1) {
    Rat v = -minpoly[0] / minpoly[1];
    if (!(lo < v && v < hi))
      throw Error(ErrorKind::Internal, "root outside isolating interval");
    return RealAlgebraic(v);
  }
  RealAlgebraic r;
  r.m_ = minpoly.primitive();
  r.lo_ = lo;
  r.hi_ = hi;
  if (r.m_.sign_at(lo) == 0 || r.m_.sign_at(hi) == 0)
    throw Error(ErrorKind::Internal, "isolating endpoint is a root");
  if (r.m_.sturm_count(lo, hi) != 1)
    throw Error(ErrorKind::Internal, "interval does not isolate one root");
  return r;
}

Rat RealAlgebraic::rational_value() const {
  if (!is_rational())
    throw Error(ErrorKind::Internal, "not a rational value");
  return -m_[0] / m_[1];
}

int RealAlgebraic::sign() const {
  if (is_rational()) return sgn(rational_value());
  if (lo_ >= 0) return 1;
  if (hi_ <= 0) return -1;
  // 0 is rational, hence not a root of an irreducible of degree >= 2;
  // locate the root relative to 0 by the sign change.
  return m_.sign_at(lo_) == m_.sign_at(Rat(0)) ? 1 : -1;
}

RealAlgebraic RealAlgebraic::operator-() const {
  if (is_rational()) return RealAlgebraic(Rat(-rational_value()));
  RealAlgebraic r;
  r.m_ = m_.compose_neg().primitive();
  r.lo_ = -hi_;
  r.hi_ = -lo_;
  return r;
}

void RealAlgebraic::refine() {
  if (is_rational()) {
    Rat v = rational_value();
    Rat w = (hi_ - lo_) / 4;
    lo_ = v - w;
    hi_ = v + w;
    return;
  }
  Rat mid = (lo_ + hi_) / 2;
  // mid is rational so never a root of an irreducible of degree >= 2.
  if (m_.sign_at(lo_) != m_.sign_at(mid))
    hi_ = mid;
  else
    lo_ = mid;
}

void RealAlgebraic::refine_below(const Rat& width) {
  while (hi_ - lo_ >= width) refine();
}

double RealAlgebraic::approx() const {
  if (is_rational()) return rational_value().get_d();
  RealAlgebraic t = *this;
  t.refine_below(pow2(-80));
  Rat mid = (t.lo_ + t.hi_) / 2;
  return mid.get_d();
}

int RealAlgebraic::compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) {
    Rat x = a.rational_value(), y = b.rational_value();
    return x < y ? -1 : x > y ? 1 : 0;
  }
  if (a.m_ == b.m_) {
    Rat l = std::max(a.lo_, b.lo_), h = std::min(a.hi_, b.hi_);
    if (l < h && a.m_.sturm_count(l, h) >= 1) return 0;
  } else if (a.is_rational()) {
    // Equal is impossible: a rational is not a root of b's minimal polynomial.
    Rat v = a.rational_value();
    RealAlgebraic t = b;
    while (t.lo_ < v && v < t.hi_) t.refine();
    return v <= t.lo_ ? -1 : 1;
  } else if (b.is_rational()) {
    return -compare(b, a);
  }
  // Distinct roots: refine until the intervals separate.
  RealAlgebraic x = a, y = b;
  for (;;) {
    if (x.hi_ <= y.lo_) return -1;
    if (y.hi_ <= x.lo_) return 1;
    x.refine();
    y.refine();
  }
}

std::string RealAlgebraic::str() const {
  if (is_rational()) return rat_str(rational_value());
  std::ostringstream os;
  os << "root of " << m_.str() << " in (" << rat_str(lo_) << ", "
     << rat_str(hi_) << ")";
  return os.str();
}

namespace {

// Roots of an irreducible polynomial of degree >= 2 via Sturm bisection.
void isolate_irreducible(const UniPoly& q, std::vector<RealAlgebraic>& out) {
  auto chain = sturm_chain(q);
  Rat b = q.root_bound();
  struct Seg {
    Rat lo, hi;
    int count;
  };
  std::vector<Seg> stack;
  int total = sign_changes_at(chain, -b) - sign_changes_at(chain, b);
  if (total > 0) stack.push_back({-b, b, total});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.count == 1 && q.sign_at(s.lo) != 0 && q.sign_at(s.hi) != 0) {
      out.push_back(RealAlgebraic::from_root(q, s.lo, s.hi));
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    // mid is never a root: q is irreducible of degree >= 2.
    int left = sign_changes_at(chain, s.lo) - sign_changes_at(chain, mid);
    int right = s.count - left;
    if (left > 0) stack.push_back({s.lo, mid, left});
    if (right > 0) stack.push_back({mid, s.hi, right});
  }
}

}  // namespace

std::vector<RealAlgebraic> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero())
    throw Error(ErrorKind::Precondition, "indeterminate root count");
  std::vector<RealAlgebraic> out;
  for (const auto& [q, m] : factor_univariate(p).factors) {
    if (q.degree() == 1) {
      out.push_back(RealAlgebraic(Rat(-q[0] / q[1])));
    } else {
      isolate_irreducible(q, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace germ
