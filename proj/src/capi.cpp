// SPDX-License-Identifier: Apache-2.0
#include "germlab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "germ/parse.hpp"
#include "germ/report.hpp"

namespace {

using namespace germ;

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** slot, const std::string& s) {
  if (slot) *slot = dup_string(s);
}

int fail(char** err_msg, ErrorKind kind, const std::string& msg) {
  set_out(err_msg, msg);
  return (int)kind;
}

template <typename F>
int guarded(char** err_msg, F body) {
  try {
    return body();
  } catch (const Error& e) {
    return fail(err_msg, e.kind(), e.what());
  } catch (const std::exception& e) {
    return fail(err_msg, ErrorKind::Internal, e.what());
  }
}

GermAnalysis analyze_input(const std::string& kind, const std::string& text) {
  if (kind == "poly") return analyze_poly(parse_poly(text));
  if (kind == "param") return analyze_param(parse_param(text));
  throw Error(ErrorKind::Input, "kind must be \"poly\" or \"param\"");
}

int env_cycle_cap() {
  const char* v = std::getenv("GERMLAB_CYCLE_CAP");
  if (!v || !*v) return 10000;
  char* end = nullptr;
  long cap = std::strtol(v, &end, 10);
  if (!end || *end != '\0' || cap < 1)
    throw Error(ErrorKind::Input, "GERMLAB_CYCLE_CAP must be a positive integer");
  return (int)cap;
}

}  // namespace

extern "C" {

int germlab_analyze(const char* kind, const char* text, int with_oracle,
                    char** out_json, char** err_msg) {
  return guarded(err_msg, [&]() -> int {
    if (!kind || !text)
      throw Error(ErrorKind::Input, "null argument");
    GermAnalysis a = analyze_input(kind, text);
    if (!with_oracle) {
      set_out(out_json, analysis_json(a, nullptr, nullptr));
      return GERMLAB_OK;
    }
    if (a.parametric)
      throw Error(ErrorKind::Precondition,
                  "oracle requires polynomial input");
    OracleResult oracle = parity_by_projection(parse_poly(text), 3);
    set_out(out_json, analysis_json(a, &oracle, nullptr));
    if (oracle.parity != a.parity) {
      set_out(err_msg, "oracle parity disagrees with the exact computation");
      return GERMLAB_ERR_MISMATCH;
    }
    return GERMLAB_OK;
  });
}

int germlab_compare(const char* kind_a, const char* text_a, const char* kind_b,
                    const char* text_b, char** out_json, char** err_msg) {
  return guarded(err_msg, [&]() -> int {
    if (!kind_a || !text_a || !kind_b || !text_b)
      throw Error(ErrorKind::Input, "null argument");
    GermAnalysis a = analyze_input(kind_a, text_a);
    GermAnalysis b = analyze_input(kind_b, text_b);
    Verdict v = equivalent(a, b);
    set_out(out_json, compare_json(a, b, v));
    if (!v.bs_equivalent) {
      set_out(err_msg, "germs are not blow-spherically equivalent");
      return GERMLAB_ERR_MISMATCH;
    }
    return GERMLAB_OK;
  });
}

int germlab_realize(const char* invariant_json, int verify, char** out_json,
                    char** err_msg) {
  return guarded(err_msg, [&]() -> int {
    if (!invariant_json) throw Error(ErrorKind::Input, "null argument");
    CurveInvariant A = parse_invariant_json(invariant_json);
    validate_invariant(A);
    BiPoly f = realize(A);
    if (!verify) {
      set_out(out_json, realize_json(A, f, std::nullopt));
      return GERMLAB_OK;
    }
    bool ok = canonical_invariant(real_branches(f).branches) == A;
    set_out(out_json, realize_json(A, f, ok));
    if (!ok) {
      set_out(err_msg, "realization round-trip failed");
      return GERMLAB_ERR_MISMATCH;
    }
    return GERMLAB_OK;
  });
}

int germlab_link(const char* link_file_json, const char* request_json,
                 char** out_json, char** err_msg) {
  return guarded(err_msg, [&]() -> int {
    if (!link_file_json) throw Error(ErrorKind::Input, "null argument");
    LinkRequest req;
    if (request_json && *request_json)
      req = parse_link_request_json(request_json);
    else
      req.cycle_cap = 0;
    if (req.cycle_cap <= 0) req.cycle_cap = env_cycle_cap();
    Arrangement arr = Arrangement::build(load_link(link_file_json));
    set_out(out_json, link_json(arr, req));
    return GERMLAB_OK;
  });
}

void germlab_string_free(char* s) { std::free(s); }

const char* germlab_version(void) { return "germlab 1.0.0"; }

}  // extern "C"
