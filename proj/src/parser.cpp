#include <cctype>
#include <string>

#include "rag/mpoly.hpp"

namespace rag {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      } else if (s[pos] == '#') {  // comment to end of line
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else {
        break;
      }
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
  [[noreturn]] void fail(const std::string& msg) { throw ParseError{pos, msg}; }

  Integer read_nat() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return Integer(s.substr(start, pos - start));
  }
};

struct Parser {
  Lexer lx;

  MPoly parse_expr() {
    bool neg = false;
    if (lx.peek() == '+' || lx.peek() == '-') {
      neg = lx.peek() == '-';
      ++lx.pos;
    }
    MPoly acc = parse_term();
    if (neg) acc = -acc;
    while (lx.peek() == '+' || lx.peek() == '-') {
      bool minus = lx.peek() == '-';
      ++lx.pos;
      MPoly t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  MPoly parse_term() {
    MPoly acc = parse_power();
    while (lx.peek() == '*') {
      ++lx.pos;
      acc = acc * parse_power();
    }
    return acc;
  }

  MPoly parse_power() {
    MPoly base = parse_primary();
    if (lx.peek() == '^') {
      ++lx.pos;
      Integer n = lx.read_nat();
      if (n > 64) lx.fail("exponent too large");
      MPoly r{Rational(1)};
      for (long i = 0; i < n.get_si(); ++i) r = r * base;
      return r;
    }
    return base;
  }

  MPoly parse_primary() {
    char c = lx.peek();
    if (c == '(') {
      ++lx.pos;
      MPoly e = parse_expr();
      if (lx.peek() != ')') lx.fail("expected ')'");
      ++lx.pos;
      return e;
    }
    if (c == '-') {  // unary minus inside a factor, e.g. "-(x1+1)"
      ++lx.pos;
      return -parse_primary();
    }
    if (c == 'x') {
      size_t at = lx.pos;
      ++lx.pos;
      if (lx.pos >= lx.s.size() || !std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
        throw ParseError{at, "expected variable index after 'x'"};
      Integer idx = lx.read_nat();
      if (idx < 1 || idx > 3)
        throw ParseError{at, "unknown variable x" + idx.get_str() +
                                 " (only x1, x2, x3)"};
      return MPoly::var(static_cast<int>(idx.get_si()) - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = lx.read_nat();
      if (lx.pos < lx.s.size() && lx.s[lx.pos] == '/') {
        ++lx.pos;
        Integer den = lx.read_nat();
        if (mpz_sgn(den.get_mpz_t()) == 0) lx.fail("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return MPoly(r);
      }
      return MPoly(Rational(num));
    }
    lx.fail("unexpected character");
  }
};

}  // namespace

MPoly parse_poly(const std::string& text) {
  Parser p{Lexer{text}};
  MPoly r = p.parse_expr();
  if (!p.lx.eof()) p.lx.fail("trailing input");
  return r;
}

}  // namespace rag
