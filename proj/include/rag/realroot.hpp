#ifndef RAG_REALROOT_HPP
#define RAG_REALROOT_HPP

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "rag/mpoly.hpp"
#include "rag/rational.hpp"
#include "rag/subresultant.hpp"
#include "rag/upoly.hpp"

namespace rag {

// Field protocol used by the real-root machinery, satisfied by Rational and
// by the tower extension type:
//   int      field_sign(const F&)                  exact sign
//   Interval field_approx(const F&, const Rational& eps)
//                                  rational enclosure of width <= eps
//   F constructible from Rational
inline int field_sign(const Rational& r) { return sgn(r); }
inline Interval field_approx(const Rational& r, const Rational&) { return {r, r}; }

// Enclosure of g over the box x, with each coefficient enclosed to width eps.
template <class F>
Interval horner_interval(const UPolyT<F>& g, const Interval& x, const Rational& eps) {
  Interval acc(Rational(0));
  for (int i = g.degree(); i >= 0; --i)
    acc = acc * x + field_approx(g.coeff(i), eps);
  return acc;
}

// A real root of a square-free polynomial over F, represented by the
// defining polynomial plus a rational isolating interval (or an exact
// rational value). All predicates are decided exactly; intervals only
// shrink.
template <class F>
class RealRootT {
 public:
  // An exact rational value.
  static RealRootT from_rational(const Rational& v) {
    RealRootT r;
    r.exact_ = true;
    r.value_ = v;
    r.iv_ = Interval(v);
    return r;
  }

  // All real roots of p, strictly increasing.
  static std::vector<RealRootT> isolate(const UPolyT<F>& p);

  bool is_exact() const { return exact_; }
  const Rational& value() const { return value_; }  // valid when exact
  const UPolyT<F>& defining() const { return def_; }
  const Interval& interval() const { return iv_; }
  Rational lo() const { return iv_.lo; }
  Rational hi() const { return iv_.hi; }

  // Swap in a divisor of the current defining polynomial that still
  // vanishes at this value (callers that discover a factorization use this
  // to keep the representation minimal).
  void replace_defining(UPolyT<F> d) {
    if (exact_) return;
    def_ = std::move(d);
    sign_lo_ = field_sign(def_(F(iv_.lo)));
  }

  // One bisection step; may discover an exact rational value.
  void refine() {
    if (exact_) return;
    Rational m = iv_.mid();
    int s = field_sign(def_(F(m)));
    if (s == 0) {
      exact_ = true;
      value_ = m;
      iv_ = Interval(m);
      return;
    }
    if (s == sign_lo_)
      iv_.lo = m;
    else
      iv_.hi = m;
  }

  void refine_to(const Rational& width) {
    while (!exact_ && iv_.width() > width) refine();
  }

  // Enclosure of width <= eps.
  Interval approx(const Rational& eps) {
    refine_to(eps);
    return iv_;
  }

  // Exact sign of g at this value. Zero is certified through
  // gcd(g, defining), never inferred from intervals.
  int sign_at(const UPolyT<F>& g) {
    if (g.zero()) return 0;
    if (exact_) return field_sign(g(F(value_)));
    UPolyT<F> h = gcd(g, def_);
    if (h.degree() >= 1) {
      int sl = field_sign(h(F(iv_.lo)));
      int sh = field_sign(h(F(iv_.hi)));
      if (sl * sh < 0) return 0;  // the common root is this value
    }
    Rational eps(1);
    while (true) {
      Interval r = horner_interval(g, iv_, eps);
      int s = r.definite_sign();
      if (s != 0) return s;
      refine();
      if (exact_) return field_sign(g(F(value_)));
      refine();
      eps /= 16;
    }
  }

  // -1 / 0 / +1 for this value vs the rational r.
  int compare_rational(const Rational& r) {
    if (exact_) return cmp(value_, r) < 0 ? -1 : (value_ == r ? 0 : 1);
    int s = field_sign(def_(F(r)));
    if (s == 0 && iv_.lo < r && r < iv_.hi) {
      // r is the unique root of the defining polynomial in the interval
      exact_ = true;
      value_ = r;
      iv_ = Interval(r);
      return 0;
    }
    while (true) {
      if (r <= iv_.lo) return 1;   // value lies strictly inside (lo,hi)
      if (r >= iv_.hi) return -1;
      refine();
      if (exact_) return cmp(value_, r) < 0 ? -1 : (value_ == r ? 0 : 1);
    }
  }

  // Total order; equality decided via a common-root certificate.
  static int compare(RealRootT& a, RealRootT& b) {
    if (a.exact_) return -b.compare_rational(a.value_);
    if (b.exact_) return a.compare_rational(b.value_);
    if (a.iv_.hi < b.iv_.lo) return -1;
    if (b.iv_.hi < a.iv_.lo) return 1;
    UPolyT<F> h = gcd(a.def_, b.def_);
    bool eq_possible =
        h.degree() >= 1 && a.sign_at(h) == 0 && b.sign_at(h) == 0;
    while (true) {
      if (a.exact_ || b.exact_) return compare(a, b);
      if (a.iv_.hi < b.iv_.lo) return -1;
      if (b.iv_.hi < a.iv_.lo) return 1;
      if (eq_possible && b.iv_.lo <= a.iv_.lo && a.iv_.hi <= b.iv_.hi)
        return 0;  // a's value lies in b's isolating interval and is a
                   // root of b's defining polynomial: same number
      a.refine();
      // when equality is ruled out, shrink both so the intervals separate
      if (!eq_possible) b.refine();
    }
  }

  // Re-express a root over a subfield G as a root over F by mapping the
  // coefficients of the defining polynomial through `embed` (an injective
  // field homomorphism G -> F). The numeric value is unchanged.
  template <class G, class Fn>
  static RealRootT promote(const RealRootT<G>& o, Fn embed) {
    RealRootT r;
    r.exact_ = o.exact_;
    r.value_ = o.value_;
    r.iv_ = o.iv_;
    r.sign_lo_ = o.sign_lo_;
    if (!o.exact_) {
      std::vector<F> cs;
      cs.reserve(o.def_.coeffs().size());
      for (const G& c : o.def_.coeffs()) cs.push_back(embed(c));
      r.def_ = UPolyT<F>(std::move(cs));
    }
    return r;
  }

 private:
  template <class G>
  friend class RealRootT;

  UPolyT<F> def_;
  Interval iv_;
  int sign_lo_ = 0;  // sign of def_ at iv_.lo (nonzero unless exact)
  bool exact_ = false;
  Rational value_;

  static RealRootT from_interval(const UPolyT<F>& def, const Rational& lo,
                                 const Rational& hi, int sign_lo) {
    RealRootT r;
    r.def_ = def;
    r.iv_ = Interval(lo, hi);
    r.sign_lo_ = sign_lo;
    return r;
  }
};

namespace detail {

// Upper bound B with all real roots of w in (-B, B); w nonzero, deg >= 1.
template <class F>
Rational cauchy_bound(const UPolyT<F>& w) {
  Rational eps(1);
  Interval lc = field_approx(w.lc(), eps);
  while (lc.contains_zero()) {
    eps /= 16;
    lc = field_approx(w.lc(), eps);
  }
  Rational lc_low = std::min(abs_r(lc.lo), abs_r(lc.hi));
  if (sgn(lc.lo) < 0 && sgn(lc.hi) > 0) lc_low = 0;  // cannot happen
  Rational maxc(0);
  for (int i = 0; i < w.degree(); ++i) {
    Interval c = field_approx(w.coeff(i), Rational(1));
    Rational m = std::max(abs_r(c.lo), abs_r(c.hi));
    if (m > maxc) maxc = m;
  }
  Rational b = 2 + maxc / lc_low;
  // round up to an integer
  Integer n = b.get_num() / b.get_den() + 1;
  return Rational(n);
}

// Number of sign variations in the coefficient list (Descartes).
inline int descartes_variations(const UPoly& q) {
  int var = 0, prev = 0;
  for (const Rational& c : q.coeffs()) {
    int s = sgn(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Upper bound (exact when 0 or 1) on the roots of w in the open interval
// (a,b); requires w(a), w(b) nonzero.
inline int descartes_count(const UPoly& w, const Rational& a, const Rational& b) {
  UPoly w1 = w.compose_affine(a, b - a);       // roots in (0,1)
  UPoly w2 = w1.reversed();                    // roots in (1,oo)
  UPoly q = w2.compose_affine(Rational(1), Rational(1));  // roots in (0,oo)
  return descartes_variations(q);
}

// Sign-variation count of a Sturm sequence at x.
template <class F>
int sturm_variations(const std::vector<UPolyT<F>>& seq, const Rational& x) {
  int var = 0, prev = 0;
  for (const auto& s : seq) {
    int sg = field_sign(s(F(x)));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

template <class F>
std::vector<UPolyT<F>> sturm_sequence(const UPolyT<F>& w) {
  std::vector<UPolyT<F>> seq{w, w.derivative()};
  while (!seq.back().zero()) {
    UPolyT<F> r = seq[seq.size() - 2] % seq.back();
    if (r.zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

}  // namespace detail

template <class F>
std::vector<RealRootT<F>> RealRootT<F>::isolate(const UPolyT<F>& p) {
  if (p.zero()) throw std::domain_error("isolate: zero polynomial");
  UPolyT<F> w = square_free_part(p);
  std::vector<Rational> exact_roots;
  std::vector<RealRootT<F>> out;

  bool deflated = true;
  while (deflated) {
    deflated = false;
    out.clear();
    if (w.degree() >= 1 && is_zero(w.coeff(0))) {
      exact_roots.push_back(Rational(0));
      w = w / UPolyT<F>::x();
    }
    if (w.degree() < 1) break;
    if constexpr (std::is_same_v<F, Rational>) {
      if (w.degree() == 1) {
        exact_roots.push_back(-w.coeff(0) / w.coeff(1));
        break;
      }
    }

    std::vector<UPolyT<F>> sturm;
    if constexpr (!std::is_same_v<F, Rational>) sturm = detail::sturm_sequence(w);
    auto count = [&](const Rational& a, const Rational& b) {
      if constexpr (std::is_same_v<F, Rational>)
        return detail::descartes_count(w, a, b);
      else
        return detail::sturm_variations(sturm, a) -
               detail::sturm_variations(sturm, b);
    };

    Rational bound = detail::cauchy_bound(w);
    std::vector<Interval> stack{Interval(-bound, bound)};
    while (!stack.empty() && !deflated) {
      Interval seg = stack.back();
      stack.pop_back();
      int n = count(seg.lo, seg.hi);
      if (n == 0) continue;
      if (n == 1) {
        int sl = field_sign(w(F(seg.lo)));
        RealRootT r = from_interval(w, seg.lo, seg.hi, sl);
        // shrink a little; bisection recognizes dyadic rational roots
        r.refine_to(rat(1, 4));
        out.push_back(std::move(r));
        continue;
      }
      Rational m = seg.mid();
      if (field_sign(w(F(m))) == 0) {
        exact_roots.push_back(m);
        UPolyT<F> lin(std::vector<F>{F(-m), F{} + 1});
        w = w / lin;
        deflated = true;  // restart isolation on the deflated polynomial
        continue;
      }
      stack.push_back(Interval(seg.lo, m));
      stack.push_back(Interval(m, seg.hi));
    }
  }

  for (const Rational& v : exact_roots) out.push_back(from_rational(v));
  std::sort(out.begin(), out.end(),
            [](RealRootT<F>& a, RealRootT<F>& b) { return compare(a, b) < 0; });
  return out;
}

using AlgebraicNumber = RealRootT<Rational>;

inline std::vector<AlgebraicNumber> isolate_real_roots(const UPoly& p) {
  return AlgebraicNumber::isolate(p);
}

// Number of distinct real roots of the univariate polynomial p(x, X2)
// (p bivariate in x1, x2 with constant leading coefficient in x2),
// via the sign ladder of the subresultants of (p, dp/dx2) at x.
int count_real_roots_in_fiber(const MPoly& p, AlgebraicNumber& x);
int count_real_roots_in_fiber(const MPoly& p, const Rational& x);

// Same but with the precomputed coefficient ladder of sturm_habicht_coeffs.
int count_real_roots_in_fiber(const std::vector<MPoly>& ladder,
                              AlgebraicNumber& x);

// One rational strictly inside each open interval between consecutive
// roots, plus one below the first and one above the last ({0} when empty).
std::vector<Rational> sample_between(std::vector<AlgebraicNumber>& roots);

}  // namespace rag

#endif
