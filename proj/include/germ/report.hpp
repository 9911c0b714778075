// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germ/invariants.hpp"
#include "germ/link.hpp"
#include "germ/oracle.hpp"

namespace germ {

// All report builders emit deterministic JSON with stable field names.

std::string analysis_json(const GermAnalysis& a, const OracleResult* oracle,
                          const std::vector<SampledDirection>* samples);

std::string compare_json(const GermAnalysis& a, const GermAnalysis& b,
                         const Verdict& v);

std::string realize_json(const CurveInvariant& A, const BiPoly& f,
                         std::optional<bool> verified);

struct LinkRequest {
  bool counts = true;
  bool euler = false;
  bool diameter = false;
  bool parity = false;
  RatVec parity_point{Rat(0), Rat(0), Rat(1)};
  bool antipodal = false;
  bool nac = false;
  int cycle_cap = 10000;
  std::vector<std::pair<RatVec, RatVec>> distances;
};

std::string link_json(const Arrangement& arr, const LinkRequest& req);

// Parsers for structured CLI inputs.
CurveInvariant parse_invariant_json(const std::string& text);
LinkRequest parse_link_request_json(const std::string& text);

}  // namespace germ
