// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germ/puiseux.hpp"

namespace germ {

struct KEntry {
  Direction dir;
  int k;
};

// Tangent link with relative multiplicities, entries sorted by direction.
struct KMap {
  std::vector<KEntry> entries;
};

struct OddPart {
  std::vector<Direction> directions;
};

struct InvRow {
  int r_minus = 0, r_zero = 0, r_plus = 0;
  bool operator==(const InvRow& o) const = default;
};

// Canonical invariant A: rows (r(-1), r(0), r(1)) per tangent line,
// normalized r(-1) <= r(1), sorted by (r0, sum, r_plus, r_minus).
struct CurveInvariant {
  std::vector<InvRow> rows;
  bool operator==(const CurveInvariant& o) const = default;
};

// Rooted tree: root, one child per tangent half-line, k leaves under each.
struct BsTree {
  std::vector<std::pair<Direction, int>> halflines;
  std::string text() const;
  std::string dot() const;
};

struct GermAnalysis {
  std::vector<RealBranch> branches;
  bool parametric = false;
  BiPoly f_rel;  // implicit input only
  KMap km;
  OddPart odd;
  std::optional<int> m;  // full multiplicity, implicit input only
  int parity = 0;        // m mod 2
  CurveInvariant inv;
  BsTree tree;
};

KMap k_map(const std::vector<RealBranch>& branches);
OddPart odd_part(const KMap& km);
// (m, parity); checks parity against (#OddPart/2) mod 2.
std::pair<int, int> multiplicity(const BiPoly& f);
CurveInvariant canonical_invariant(const std::vector<RealBranch>& branches);
BsTree bs_tree(const KMap& km);

struct Verdict {
  bool bs_equivalent = false;
  bool branch_by_branch = false;
  // Pairs of indices into the two KMap entry lists, when bs_equivalent.
  std::vector<std::pair<int, int>> matching;
};
Verdict equivalent(const GermAnalysis& a, const GermAnalysis& b);

void validate_invariant(const CurveInvariant& A);  // throws on invalid rows
BiPoly realize(const CurveInvariant& A);

GermAnalysis analyze_poly(const BiPoly& f);
GermAnalysis analyze_param(const std::vector<ParamBranchInput>& branches);

}  // namespace germ
