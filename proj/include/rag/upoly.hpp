#ifndef RAG_UPOLY_HPP
#define RAG_UPOLY_HPP

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rag/rational.hpp"

namespace rag {

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Dense univariate polynomial over a field F, index = degree of term.
// The leading coefficient is nonzero unless the polynomial is zero
// (empty coefficient list).
template <class F>
class UPolyT {
 public:
  UPolyT() = default;
  explicit UPolyT(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPolyT constant(F v) {
    UPolyT p;
    if (!is_zero(v)) p.c_.push_back(std::move(v));
    return p;
  }
  static UPolyT x() { return UPolyT(std::vector<F>{F{}, unit()}); }

  static F unit() { return F{} + 1; }  // requires F+int; Rational and Ext both do

  bool zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<F>& coeffs() const { return c_; }
  const F& operator[](size_t i) const { return c_[i]; }
  F coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F{};
  }
  const F& lc() const {
    assert(!c_.empty());
    return c_.back();
  }

  UPolyT operator-() const {
    UPolyT r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  UPolyT operator+(const UPolyT& o) const {
    std::vector<F> r(std::max(c_.size(), o.c_.size()), F{});
    for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UPolyT(std::move(r));
  }
  UPolyT operator-(const UPolyT& o) const { return *this + (-o); }
  UPolyT operator*(const UPolyT& o) const {
    if (zero() || o.zero()) return {};
    std::vector<F> r(c_.size() + o.c_.size() - 1, F{});
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return UPolyT(std::move(r));
  }
  UPolyT operator*(const F& s) const {
    if (is_zero(s)) return {};
    UPolyT r = *this;
    for (auto& v : r.c_) v = v * s;
    r.trim();
    return r;
  }
  UPolyT operator/(const F& s) const {
    UPolyT r = *this;
    for (auto& v : r.c_) v = v / s;
    return r;
  }
  bool operator==(const UPolyT& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!is_zero(c_[i] - o.c_[i])) return false;
    return true;
  }

  UPolyT shifted(size_t k) const {  // * X^k
    if (zero()) return {};
    std::vector<F> r(c_.size() + k, F{});
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UPolyT(std::move(r));
  }

  UPolyT derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> r(c_.size() - 1, F{});
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<int>(i);
    return UPolyT(std::move(r));
  }

  template <class V>
  V eval(const V& x) const {
    V acc{};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
    return acc;
  }
  F operator()(const F& x) const {
    F acc{};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UPolyT monic() const {
    assert(!zero());
    return *this / lc();
  }

  // P(a + b*X): used by Descartes transformations and shears.
  UPolyT compose_affine(const F& a, const F& b) const {
    UPolyT lin(std::vector<F>{a, b});
    UPolyT acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(c_[i]);
    return acc;
  }

  // Coefficients reversed: X^n * P(1/X).
  UPolyT reversed() const {
    std::vector<F> r(c_.rbegin(), c_.rend());
    return UPolyT(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
void divmod(const UPolyT<F>& a, const UPolyT<F>& b, UPolyT<F>& q, UPolyT<F>& r) {
  if (b.zero()) throw std::domain_error("division by zero polynomial");
  std::vector<F> rc(a.coeffs());
  std::vector<F> qc;
  int db = b.degree();
  int da = static_cast<int>(rc.size()) - 1;
  if (da < db) {
    q = {};
    r = a;
    return;
  }
  qc.assign(da - db + 1, F{});
  for (int i = da; i >= db; --i) {
    F t = rc[i] / b.lc();
    if (!is_zero(t)) {
      qc[i - db] = t;
      for (int j = 0; j <= db; ++j) rc[i - db + j] = rc[i - db + j] - t * b[j];
    }
    rc[i] = F{};
  }
  q = UPolyT<F>(std::move(qc));
  r = UPolyT<F>(std::move(rc));
}

template <class F>
UPolyT<F> operator%(const UPolyT<F>& a, const UPolyT<F>& b) {
  UPolyT<F> q, r;
  divmod(a, b, q, r);
  return r;
}

template <class F>
UPolyT<F> operator/(const UPolyT<F>& a, const UPolyT<F>& b) {
  UPolyT<F> q, r;
  divmod(a, b, q, r);
  return q;
}

// Monic gcd over the field F; gcd(P,0) = monic(P).
template <class F>
UPolyT<F> gcd(UPolyT<F> a, UPolyT<F> b) {
  if (a.zero() && b.zero()) throw std::domain_error("gcd(0,0)");
  while (!b.zero()) {
    UPolyT<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// g = gcd(a,b) monic, with u*a + v*b = g.
template <class F>
UPolyT<F> ext_gcd(UPolyT<F> a, UPolyT<F> b, UPolyT<F>& u, UPolyT<F>& v) {
  UPolyT<F> u0 = UPolyT<F>::constant(UPolyT<F>::unit()), v0;
  UPolyT<F> u1, v1 = UPolyT<F>::constant(UPolyT<F>::unit());
  while (!b.zero()) {
    UPolyT<F> q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    UPolyT<F> u2 = u0 - q * u1;
    UPolyT<F> v2 = v0 - q * v1;
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  const F& l = a.lc();
  u = u0 / l;
  v = v0 / l;
  return a / l;
}

namespace upoly_detail {

// Rational coefficients cleared to a primitive integer vector (gcd of the
// coefficients 1, leading coefficient positive). Returns the rational
// scalar s with input = s * primitive.
inline Rational make_primitive(const std::vector<Rational>& in,
                               std::vector<Integer>& out) {
  Integer den(1);
  for (const Rational& c : in) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                       c.get_den_mpz_t());
  out.clear();
  out.reserve(in.size());
  Integer cont(0);
  for (const Rational& c : in) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (sgn(cont) == 0) return Rational(0);
  if (sgn(out.back()) < 0) cont = -cont;
  for (Integer& v : out) v /= cont;
  return Rational(cont) / Rational(den);
}

inline void trim_int(std::vector<Integer>& r) {
  while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
}

// Divide by the content, keeping the leading coefficient positive.
inline void primitive_part(std::vector<Integer>& r) {
  trim_int(r);
  if (r.empty()) return;
  Integer cont(0);
  for (const Integer& v : r)
    mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_mpz_t());
  if (sgn(r.back()) < 0) cont = -cont;
  for (Integer& v : r) v /= cont;
}

// Pseudo-remainder m*a = q*b + r with integer q, r; m is a power of lc(b).
// q and m are only filled in when wanted (track_q).
inline void pseudo_divmod(const std::vector<Integer>& a,
                          const std::vector<Integer>& b,
                          std::vector<Integer>& q, std::vector<Integer>& r,
                          Integer& m, bool track_q) {
  const Integer& d = b.back();
  int db = static_cast<int>(b.size()) - 1;
  r = a;
  m = 1;
  if (track_q) q.assign(std::max<int>(static_cast<int>(a.size()) - db, 0), Integer(0));
  while (static_cast<int>(r.size()) - 1 >= db) {
    Integer t = r.back();
    int k = static_cast<int>(r.size()) - 1 - db;
    for (Integer& c : r) c *= d;
    if (track_q) {
      for (Integer& c : q) c *= d;
      q[k] += t;
      m *= d;
    }
    for (int j = 0; j <= db; ++j) r[k + j] -= t * b[j];
    trim_int(r);
  }
}

inline UPolyT<Rational> to_rational(const std::vector<Integer>& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (const Integer& x : v) c.emplace_back(x);
  return UPolyT<Rational>(std::move(c));
}

}  // namespace upoly_detail

// Rational coefficients: primitive pseudo-remainder sequence over the
// integers, which avoids the coefficient blowup of the plain euclidean
// loop over Q.
inline UPolyT<Rational> gcd(const UPolyT<Rational>& A, const UPolyT<Rational>& B) {
  if (A.zero() && B.zero()) throw std::domain_error("gcd(0,0)");
  if (A.zero()) return B.monic();
  if (B.zero()) return A.monic();
  using namespace upoly_detail;
  std::vector<Integer> a, b;
  make_primitive(A.coeffs(), a);
  make_primitive(B.coeffs(), b);
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<Integer> q, r;
  Integer m;
  while (!b.empty()) {
    pseudo_divmod(a, b, q, r, m, false);
    primitive_part(r);
    a = std::move(b);
    b = std::move(r);
  }
  return to_rational(a).monic();
}

// g = gcd(a,b) monic with u*a + v*b = g, keeping the remainder sequence
// primitive over the integers and scaling the cofactors to match.
inline UPolyT<Rational> ext_gcd(const UPolyT<Rational>& A, const UPolyT<Rational>& B,
                                UPolyT<Rational>& u, UPolyT<Rational>& v) {
  using P = UPolyT<Rational>;
  if (B.zero()) {
    if (A.zero()) throw std::domain_error("ext_gcd(0,0)");
    u = P::constant(Rational(1) / A.lc());
    v = {};
    return A.monic();
  }
  if (A.zero()) {
    v = P::constant(Rational(1) / B.lc());
    u = {};
    return B.monic();
  }
  using namespace upoly_detail;
  std::vector<Integer> a, b;
  Rational sa = make_primitive(A.coeffs(), a);
  Rational sb = make_primitive(B.coeffs(), b);
  P u0 = P::constant(Rational(1) / sa), v0;
  P u1, v1 = P::constant(Rational(1) / sb);
  std::vector<Integer> q, r;
  Integer m;
  while (!b.empty()) {
    pseudo_divmod(a, b, q, r, m, true);
    Rational c = make_primitive(to_rational(r).coeffs(), r);
    P qr = to_rational(q);
    P u2 = u0 * Rational(m) - qr * u1;
    P v2 = v0 * Rational(m) - qr * v1;
    if (sgn(c) != 0) {
      Rational ci = Rational(1) / c;
      u2 = u2 * ci;
      v2 = v2 * ci;
    }
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  P g = to_rational(a);
  Rational l = g.lc();
  u = u0 / l;
  v = v0 / l;
  return g / l;
}

// P / gcd(P, P'): same real roots, all simple.
template <class F>
UPolyT<F> square_free_part(const UPolyT<F>& p) {
  if (p.zero()) throw std::domain_error("square_free_part of zero");
  if (p.degree() == 0) return p.monic();
  UPolyT<F> g = gcd(p, p.derivative());
  return (p / g).monic();
}

using UPoly = UPolyT<Rational>;

}  // namespace rag

#endif
