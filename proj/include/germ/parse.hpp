// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "germ/bipoly.hpp"
#include "germ/unipoly.hpp"

namespace germ {

// Implicit-mode expression in variables x, y.
BiPoly parse_poly(const std::string& text);

// Parametric-mode expression in the single variable t.
UniPoly parse_param_expr(const std::string& text);

// One parametric branch: n >= 2 components in t, each with zero constant
// term, not all zero.
struct ParamBranchInput {
  std::vector<UniPoly> components;
};

// JSON document {"branches": [[expr, ...], ...]}.
std::vector<ParamBranchInput> parse_param(const std::string& json_text);

}  // namespace germ
