// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace germ {

using Int = mpz_class;
using Rat = mpq_class;

// Error kinds map 1:1 to CLI exit codes.
enum class ErrorKind {
  Mismatch = 1,      // not equivalent / parity disagreement
  Input = 2,         // parse or malformed file
  Degenerate = 3,    // 0-dimensional germ
  Precondition = 4,  // operation precondition violated
  Internal = 5,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline Rat rat_pow(const Rat& a, unsigned n) {
  Rat r(1), b(a);
  for (; n; n >>= 1) {
    if (n & 1) r *= b;
    b *= b;
  }
  return r;
}

inline int sgn(const Rat& a) { return sgn(a.get_num()); }

inline std::string rat_str(const Rat& a) { return a.get_str(); }

// Exact power of two 2^e for e possibly negative.
inline Rat pow2(int e) {
  Rat r(1);
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), e);
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), -e);
  return r;
}

}  // namespace germ
