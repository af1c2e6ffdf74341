#ifndef RAG_TOWER_HPP
#define RAG_TOWER_HPP

#include <memory>

#include "rag/arrangement.hpp"
#include "rag/ext.hpp"
#include "rag/mpoly.hpp"
#include "rag/realroot.hpp"

namespace rag {

// ---------------------------------------------------------------------------
// Re-expressing values that live in a tower Q(alpha)(beta)(...) as plain
// algebraic numbers over Q, by eliminating the generators one variable at a
// time. Used to compare points that were constructed in different towers.
// ---------------------------------------------------------------------------

namespace tower_detail {

// Defining polynomial of the first-level generator found in f's
// coefficients, encoded in variable `av`; x_av itself (generator 0) when the
// coefficients are all rational.
inline std::shared_ptr<ExtContext<Rational>> ctx1_of(const UPolyT<Tower1>& f) {
  for (int i = 0; i <= f.degree(); ++i)
    if (f.coeff(i).ctx()) return f.coeff(i).ctx();
  return nullptr;
}

inline MPoly encode1(const Tower1& e, int av) {
  return mpoly_from_upoly(e.rep(), av);
}

// f as a bivariate polynomial: coefficients in Q(alpha) -> variable av,
// the polynomial's own variable -> yv.
inline MPoly encode2(const UPolyT<Tower1>& f, int av, int yv) {
  MPoly acc;
  for (int i = 0; i <= f.degree(); ++i)
    acc = acc + encode1(f.coeff(i), av) * MPoly::var(yv, i);
  return acc;
}

inline MPoly encode2(const Tower2& e, int av, int yv) {
  return encode2(e.rep(), av, yv);
}

// f over Q(alpha)(beta) as a trivariate polynomial in (x1=alpha, x2=beta,
// x3 = the polynomial's variable).
inline MPoly encode3(const UPolyT<Tower2>& f) {
  MPoly acc;
  for (int i = 0; i <= f.degree(); ++i)
    acc = acc + encode2(f.coeff(i), 0, 1) * MPoly::var(2, i);
  return acc;
}

// Eliminate the generator encoded in `var` from e, given an annihilator
// `def` of that generator. The value of e at the generators is a root of
// the result (viewed in the remaining variables). The defining polynomials
// in a tower need not be irreducible, so a vanishing resultant can occur;
// the shared factor is then free of the target variable and provably
// nonzero at the generators, so it can be divided out of e.
inline MPoly eliminate_var(const MPoly& def, MPoly e, int var) {
  if (e.degree(var) == 0) return e;
  while (true) {
    MPoly r = resultant(def, e, var);
    if (!r.zero()) return r;
    MPoly g = mgcd(def, e);
    auto q = divexact(e, g);
    if (!q || g.is_constant())
      throw std::logic_error("eliminate_var: degenerate elimination");
    e = *q;
    if (e.degree(var) == 0) return e;
  }
}

// The root of `ann` singled out by an enclosure oracle: approx(eps) must
// return an interval of width <= eps containing the value.
template <class ApproxFn>
AlgebraicNumber pick_root(const UPoly& ann, ApproxFn approx) {
  auto roots = isolate_real_roots(ann);
  Rational eps(1);
  while (true) {
    Interval iv = approx(eps);
    std::vector<size_t> live;
    for (size_t i = 0; i < roots.size(); ++i) {
      const Interval& r = roots[i].interval();
      if (!(r.hi < iv.lo || iv.hi < r.lo)) live.push_back(i);
    }
    if (live.size() == 1) return roots[live.front()];
    if (live.empty())
      throw std::logic_error("pick_root: enclosure matches no root");
    for (size_t i : live) roots[i].refine();
    eps /= 4;
  }
}

}  // namespace tower_detail

inline AlgebraicNumber algebraize(const Tower1& e) { return to_algebraic(e); }

// A root whose defining polynomial has coefficients in Q(alpha).
inline AlgebraicNumber algebraize(RealRootT<Tower1>& r) {
  using namespace tower_detail;
  if (r.is_exact()) return AlgebraicNumber::from_rational(r.value());
  auto c1 = ctx1_of(r.defining());
  MPoly a1 = c1 ? mpoly_from_upoly(c1->alpha.defining(), 0) : MPoly::var(0);
  MPoly e = encode2(r.defining(), 0, 1);
  MPoly ann = eliminate_var(a1, e, 0);
  return pick_root(ann.to_upoly(1), [&](const Rational& eps) {
    r.refine_to(eps);
    return r.interval();
  });
}

// A field element of Q(alpha)(beta).
inline AlgebraicNumber algebraize(const Tower2& e) {
  using namespace tower_detail;
  if (!e.ctx() || e.rep().degree() == 0) {
    Tower1 v = e.rep().zero() ? Tower1() : e.rep().coeff(0);
    return to_algebraic(v);
  }
  auto& beta = e.ctx()->alpha;  // RealRootT<Tower1>
  auto c1 = ctx1_of(beta.defining());
  for (int i = 0; !c1 && i <= e.rep().degree(); ++i)
    c1 = e.rep().coeff(i).ctx();
  MPoly a1 = c1 ? mpoly_from_upoly(c1->alpha.defining(), 0) : MPoly::var(0);
  MPoly d2 = encode2(beta.defining(), 0, 1);
  MPoly graph = MPoly::var(2) - encode2(e.rep(), 0, 1);
  MPoly e1 = eliminate_var(d2, graph, 1);
  MPoly ann = eliminate_var(a1, e1, 0);
  return pick_root(ann.to_upoly(2),
                   [&](const Rational& eps) { return field_approx(e, eps); });
}

// A root whose defining polynomial has coefficients in Q(alpha)(beta).
inline AlgebraicNumber algebraize(RealRootT<Tower2>& r) {
  using namespace tower_detail;
  if (r.is_exact()) return AlgebraicNumber::from_rational(r.value());
  std::shared_ptr<ExtContext<Tower1>> c2;
  for (int i = 0; !c2 && i <= r.defining().degree(); ++i)
    c2 = r.defining().coeff(i).ctx();
  std::shared_ptr<ExtContext<Rational>> c1;
  if (c2) c1 = ctx1_of(c2->alpha.defining());
  for (int i = 0; !c1 && i <= r.defining().degree(); ++i)
    c1 = ctx1_of(r.defining().coeff(i).rep());
  MPoly a1 = c1 ? mpoly_from_upoly(c1->alpha.defining(), 0) : MPoly::var(0);
  MPoly d2 = c2 ? encode2(c2->alpha.defining(), 0, 1) : MPoly::var(1);
  MPoly e3 = encode3(r.defining());
  MPoly e1 = eliminate_var(d2, e3, 1);
  MPoly ann = eliminate_var(a1, e1, 0);
  return pick_root(ann.to_upoly(2), [&](const Rational& eps) {
    r.refine_to(eps);
    return r.interval();
  });
}

// ---------------------------------------------------------------------------
// Promoting roots one story up: a fiber root becomes a field element when
// its defining polynomial is trivial, and a fresh generator otherwise.
// ---------------------------------------------------------------------------

// Value of r as a Tower2 element; fills ctx_out only when a new extension
// level is actually needed.
inline Tower2 tower2_value(RealRootT<Tower1>& r,
                           std::shared_ptr<ExtContext<Tower1>>& ctx_out) {
  if (r.is_exact()) return Tower2(r.value());
  if (r.defining().degree() == 1)
    return Tower2::of(-r.defining().coeff(0) / r.defining().coeff(1));
  ctx_out = std::make_shared<ExtContext<Tower1>>(r);
  return Tower2::generator(ctx_out);
}

inline Tower3 tower3_value(RealRootT<Tower2>& r,
                           std::shared_ptr<ExtContext<Tower2>>& ctx_out) {
  if (r.is_exact()) return Tower3(r.value());
  if (r.defining().degree() == 1)
    return Tower3::of(-r.defining().coeff(0) / r.defining().coeff(1));
  ctx_out = std::make_shared<ExtContext<Tower2>>(r);
  return Tower3::generator(ctx_out);
}

}  // namespace rag

#endif
