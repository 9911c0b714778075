// SPDX-License-Identifier: Apache-2.0
#include "germ/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace germ {

namespace {

Direction line_key(const Direction& d) {
  Direction n = d.negated();
  return Direction::compare(d, n) <= 0 ? d : n;
}

}  // namespace

KMap k_map(const std::vector<RealBranch>& branches) {
  if (branches.empty())
    throw Error(ErrorKind::Precondition, "empty branch list");
  std::map<Direction, int> acc;
  for (const auto& b : branches) {
    acc[b.u] += 1;
    acc[b.v] += 1;
  }
  KMap km;
  for (const auto& [d, k] : acc) km.entries.push_back({d, k});
  return km;
}

OddPart odd_part(const KMap& km) {
  OddPart o;
  for (const auto& e : km.entries)
    if (e.k & 1) o.directions.push_back(e.dir);
  return o;
}

std::pair<int, int> multiplicity(const BiPoly& f) {
  BranchDecomposition d = real_branches(f);
  if (d.isolated_origin)
    throw Error(ErrorKind::Degenerate,
                "germ is 0-dimensional; multiplicity convention out of scope");
  int m = d.f_rel.order();
  int parity = m & 1;
  OddPart o = odd_part(k_map(d.branches));
  if ((o.directions.size() & 1) != 0)
    throw Error(ErrorKind::Internal, "odd part is not antipodally paired");
  int half = (int)o.directions.size() / 2;
  if ((half & 1) != parity)
    throw Error(ErrorKind::Mismatch, "multiplicity parity cross-check failed");
  return {m, parity};
}

CurveInvariant canonical_invariant(const std::vector<RealBranch>& branches) {
  if (branches.empty())
    throw Error(ErrorKind::Precondition, "empty branch list");
  struct Cnt {
    int r0 = 0, ra = 0, rb = 0;
  };
  std::map<Direction, Cnt> lines;
  for (const auto& b : branches) {
    Direction key = line_key(b.u);
    Cnt& c = lines[key];
    if (b.k & 1) {
      c.r0 += 1;
    } else if (b.u == key) {
      c.ra += 1;
    } else {
      c.rb += 1;
    }
  }
  CurveInvariant A;
  for (const auto& [d, c] : lines) {
    InvRow r;
    r.r_zero = c.r0;
    r.r_minus = std::min(c.ra, c.rb);
    r.r_plus = std::max(c.ra, c.rb);
    A.rows.push_back(r);
  }
  auto less = [](const InvRow& a, const InvRow& b) {
    int sa = a.r_minus + a.r_zero + a.r_plus;
    int sb = b.r_minus + b.r_zero + b.r_plus;
    return std::tie(a.r_zero, sa, a.r_plus, a.r_minus) <
           std::tie(b.r_zero, sb, b.r_plus, b.r_minus);
  };
  std::sort(A.rows.begin(), A.rows.end(), less);
  return A;
}

BsTree bs_tree(const KMap& km) {
  BsTree t;
  for (const auto& e : km.entries) t.halflines.emplace_back(e.dir, e.k);
  return t;
}

std::string BsTree::text() const {
  std::ostringstream os;
  os << "root";
  for (const auto& [d, k] : halflines) os << " [" << d.str() << ": " << k << "]";
  return os.str();
}

std::string BsTree::dot() const {
  std::ostringstream os;
  os << "digraph bstree {\n  root [label=\"curve\"];\n";
  for (size_t i = 0; i < halflines.size(); ++i) {
    os << "  h" << i << " [label=\"" << halflines[i].first.str() << "\"];\n";
    os << "  root -> h" << i << ";\n";
    for (int j = 0; j < halflines[i].second; ++j) {
      os << "  h" << i << "_b" << j << " [label=\"half-branch\"];\n";
      os << "  h" << i << " -> h" << i << "_b" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

Verdict equivalent(const GermAnalysis& a, const GermAnalysis& b) {
  Verdict v;
  struct Idx {
    int k;
    int index;
  };
  std::vector<Idx> ka, kb;
  for (size_t i = 0; i < a.km.entries.size(); ++i)
    ka.push_back({a.km.entries[i].k, (int)i});
  for (size_t i = 0; i < b.km.entries.size(); ++i)
    kb.push_back({b.km.entries[i].k, (int)i});
  auto less = [](const Idx& x, const Idx& y) { return x.k < y.k; };
  std::sort(ka.begin(), ka.end(), less);
  std::sort(kb.begin(), kb.end(), less);
  v.bs_equivalent = ka.size() == kb.size();
  if (v.bs_equivalent)
    for (size_t i = 0; i < ka.size(); ++i)
      if (ka[i].k != kb[i].k) v.bs_equivalent = false;
  if (v.bs_equivalent)
    for (size_t i = 0; i < ka.size(); ++i)
      v.matching.emplace_back(ka[i].index, kb[i].index);
  v.branch_by_branch =
      v.bs_equivalent && canonical_invariant(a.branches) ==
                             canonical_invariant(b.branches);
  return v;
}

void validate_invariant(const CurveInvariant& A) {
  if (A.rows.empty())
    throw Error(ErrorKind::Input, "invariant has no rows");
  bool nonzero = false;
  for (size_t i = 0; i < A.rows.size(); ++i) {
    const InvRow& r = A.rows[i];
    if (r.r_minus < 0 || r.r_zero < 0 || r.r_plus < 0)
      throw Error(ErrorKind::Input, "negative invariant entry");
    if (r.r_minus > r.r_plus)
      throw Error(ErrorKind::Input, "invariant row violates r(-1) <= r(1)");
    if (r.r_minus + r.r_zero + r.r_plus == 0)
      throw Error(ErrorKind::Input, "invariant contains a zero row");
    nonzero = true;
    if (i > 0) {
      const InvRow& p = A.rows[i - 1];
      int sp = p.r_minus + p.r_zero + p.r_plus;
      int sr = r.r_minus + r.r_zero + r.r_plus;
      if (std::tie(p.r_zero, sp) > std::tie(r.r_zero, sr))
        throw Error(ErrorKind::Input, "invariant rows are not sorted");
    }
  }
  if (!nonzero) throw Error(ErrorKind::Input, "invariant is zero");
}

BiPoly realize(const CurveInvariant& A) {
  validate_invariant(A);
  BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
  BiPoly out = BiPoly::constant(Rat(1));
  for (size_t idx = 0; idx < A.rows.size(); ++idx) {
    int l = (int)idx + 1;  // the tangent line y = l*x
    BiPoly s = y - x * Rat(l);  // y - l x
    BiPoly w = y + x * Rat(l);  // y + l x
    const InvRow& row = A.rows[idx];
    for (int j : {-1, 1}) {
      int rj = j < 0 ? row.r_minus : row.r_plus;
      for (int r = 1; r <= rj; ++r)
        out = out * (s.pow(2) - w.pow(3) * Rat(j * r));
    }
    for (int r = 1; r <= row.r_zero; ++r)
      out = out * (s.pow(3) - w.pow(4) * Rat(r));
  }
  return out;
}

GermAnalysis analyze_poly(const BiPoly& f) {
  GermAnalysis a;
  BranchDecomposition d = real_branches(f);
  if (d.isolated_origin)
    throw Error(ErrorKind::Degenerate, "isolated origin: 0-dimensional germ");
  a.branches = std::move(d.branches);
  a.f_rel = std::move(d.f_rel);
  a.km = k_map(a.branches);
  a.odd = odd_part(a.km);
  auto [m, parity] = multiplicity(f);
  a.m = m;
  a.parity = parity;
  a.inv = canonical_invariant(a.branches);
  a.tree = bs_tree(a.km);
  return a;
}

GermAnalysis analyze_param(const std::vector<ParamBranchInput>& branches) {
  GermAnalysis a;
  a.parametric = true;
  for (const auto& p : branches) a.branches.push_back(normalize_param(p));
  if (a.branches.empty())
    throw Error(ErrorKind::Input, "no parametric branches supplied");
  size_t n = a.branches[0].components.size();
  for (const auto& b : a.branches)
    if (b.components.size() != n)
      throw Error(ErrorKind::Input, "branches live in different dimensions");
  a.km = k_map(a.branches);
  a.odd = odd_part(a.km);
  if ((a.odd.directions.size() & 1) != 0)
    throw Error(ErrorKind::Internal, "odd part is not antipodally paired");
  a.parity = (int)((a.odd.directions.size() / 2) & 1);
  a.inv = canonical_invariant(a.branches);
  a.tree = bs_tree(a.km);
  return a;
}

}  // namespace germ
