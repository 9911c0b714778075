// SPDX-License-Identifier: Apache-2.0
#include "germ/parse.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace germ {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "syntax error at line " << line << ", column " << col << ": " << msg;
    throw Error(ErrorKind::Input, os.str());
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) {
      if (s[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  void advance() {
    ++pos;
    ++col;
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  // Digit run as an arbitrary-precision integer.
  Int integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
      fail("expected a number");
    std::string digits;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      digits += s[pos];
      advance();
    }
    return Int(digits);
  }

  int small_nonneg() {
    Int v = integer();
    if (v > 1000000) fail("exponent too large");
    return (int)v.get_si();
  }

  Rat rational() {
    Int num = integer();
    if (accept('/')) {
      Int den = integer();
      if (den == 0) fail("zero denominator");
      Rat q(num, den);
      q.canonicalize();
      return q;
    }
    return Rat(num);
  }
};

// Recursive-descent parser over the grammar
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nonneg-int)?
//   base   := rational | var | '(' expr ')'
// Variables are x,y in implicit mode, t in parametric mode.
struct Parser {
  Lexer lex;
  bool parametric;

  Parser(const std::string& text, bool t_mode) : lex(text), parametric(t_mode) {}

  BiPoly base() {
    char c = lex.peek();
    if (c == '(') {
      lex.advance();
      BiPoly e = expr();
      lex.expect(')');
      return e;
    }
    if (std::isdigit((unsigned char)c)) return BiPoly::constant(lex.rational());
    if (std::isalpha((unsigned char)c)) {
      lex.advance();
      if (parametric) {
        if (c == 't') return BiPoly::var_x();
        lex.fail(std::string("unknown variable '") + c +
                 "' (parametric mode allows only t)");
      }
      if (c == 'x') return BiPoly::var_x();
      if (c == 'y') return BiPoly::var_y();
      lex.fail(std::string("unknown variable '") + c + "'");
    }
    if (c == '\0') lex.fail("unexpected end of input");
    lex.fail(std::string("unexpected character '") + c + "'");
  }

  BiPoly factor() {
    BiPoly b = base();
    if (lex.accept('^')) return b.pow((unsigned)lex.small_nonneg());
    return b;
  }

  BiPoly term() {
    BiPoly t = factor();
    while (lex.accept('*')) t = t * factor();
    return t;
  }

  BiPoly expr() {
    int sign = 1;
    if (lex.accept('-'))
      sign = -1;
    else
      lex.accept('+');
    BiPoly e = term();
    if (sign < 0) e = -e;
    for (;;) {
      if (lex.accept('+'))
        e = e + term();
      else if (lex.accept('-'))
        e = e - term();
      else
        break;
    }
    return e;
  }

  BiPoly run() {
    BiPoly e = expr();
    if (!lex.eof()) lex.fail("trailing input");
    return e;
  }
};

}  // namespace

BiPoly parse_poly(const std::string& text) {
  return Parser(text, false).run();
}

UniPoly parse_param_expr(const std::string& text) {
  BiPoly p = Parser(text, true).run();
  auto cs = p.y_coeffs();
  return cs.empty() ? UniPoly() : cs[0];
}

std::vector<ParamBranchInput> parse_param(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Input, std::string("invalid document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("branches") ||
      !doc["branches"].is_array())
    throw Error(ErrorKind::Input, "document must have a \"branches\" list");
  std::vector<ParamBranchInput> out;
  for (const auto& br : doc["branches"]) {
    if (!br.is_array() || br.size() < 2)
      throw Error(ErrorKind::Input,
                  "each branch needs at least 2 component expressions");
    ParamBranchInput b;
    bool any_nonzero = false;
    for (const auto& comp : br) {
      if (!comp.is_string())
        throw Error(ErrorKind::Input, "branch components must be strings");
      UniPoly c = parse_param_expr(comp.get<std::string>());
      if (!c.is_zero()) {
        any_nonzero = true;
        if (c[0] != 0)
          throw Error(ErrorKind::Input, "branch does not pass through origin");
      }
      b.components.push_back(std::move(c));
    }
    if (!any_nonzero) throw Error(ErrorKind::Input, "degenerate branch");
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace germ
