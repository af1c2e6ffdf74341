#ifndef RAG_RATIONAL_HPP
#define RAG_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace rag {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 after
// canonicalize(), which every constructor below guarantees.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline int sgn(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }

inline Rational abs_r(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Parses "a", "-a" or "a/b". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

// r rendered as "n" or "n/d".
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Closed rational interval [lo,hi]; the basic refinement currency for
// algebraic numbers.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(const Rational& v) : lo(v), hi(v) {}  // exact point
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  // Definite sign of every point of the interval, or 0 if it straddles.
  int definite_sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;
  }

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
  Interval operator*(const Interval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rational mn = a, mx = a;
    for (const Rational& v : {b, c, d}) {
      if (v < mn) mn = v;
      if (v > mx) mx = v;
    }
    return {mn, mx};
  }
  Interval operator-() const { return {-hi, -lo}; }
};

inline Interval point_interval(const Rational& r) { return {r, r}; }

// Reciprocal of an interval not containing zero.
inline Interval recip(const Interval& iv) {
  return {1 / iv.hi, 1 / iv.lo};
}

// Round-half-even decimal rendering with `digits` significant digits.
// Exact values render exactly ("0" stays "0").
std::string to_decimal(const Rational& r, int digits);

}  // namespace rag

#endif
