#ifndef RAG_EXT_HPP
#define RAG_EXT_HPP

#include <memory>
#include <stdexcept>

#include "rag/realroot.hpp"
#include "rag/upoly.hpp"

namespace rag {

// Shared generator of a simple extension F(alpha): a non-rational real root
// together with its defining polynomial. The defining polynomial may shrink
// (dynamic evaluation) when an inversion exposes a nontrivial factor; the
// root value itself never changes.
template <class F>
struct ExtContext {
  RealRootT<F> alpha;

  explicit ExtContext(RealRootT<F> a) : alpha(std::move(a)) {
    if (alpha.is_exact())
      throw std::domain_error("ExtContext: generator must be irrational");
  }
};

// Element of F(alpha), represented as a polynomial in the generator.
template <class F>
class Ext {
 public:
  using Ctx = std::shared_ptr<ExtContext<F>>;

  Ext() = default;  // zero
  Ext(const Rational& r) : rep_(UPolyT<F>::constant(F(r))) {}
  Ext(int n) : Ext(Rational(n)) {}
  // From a base-field value (the F = Rational case is covered above).
  static Ext of(F v) {
    Ext e;
    e.rep_ = UPolyT<F>::constant(std::move(v));
    return e;
  }
  Ext(Ctx c, UPolyT<F> rep) : ctx_(std::move(c)), rep_(std::move(rep)) {
    reduce();
  }
  static Ext generator(Ctx c) { return Ext(c, UPolyT<F>::x()); }

  const Ctx& ctx() const { return ctx_; }
  const UPolyT<F>& rep() const { return rep_; }
  bool constant() const { return rep_.degree() <= 0; }
  // The base-field value of a constant element.
  F base_value() const { return rep_.zero() ? F{} : rep_[0]; }

  Ext operator-() const { return Ext(ctx_, -rep_, no_reduce{}); }
  Ext operator+(const Ext& o) const {
    return Ext(merged(o), rep_ + o.rep_, no_reduce{});
  }
  Ext operator-(const Ext& o) const {
    return Ext(merged(o), rep_ - o.rep_, no_reduce{});
  }
  Ext operator*(const Ext& o) const { return Ext(merged(o), rep_ * o.rep_); }
  Ext operator/(const Ext& o) const { return *this * o.inverse(); }
  Ext operator+(int n) const { return *this + Ext(n); }
  Ext operator*(int n) const { return *this * Ext(n); }

  Ext inverse() const {
    if (rep_.zero()) throw std::domain_error("Ext: division by zero");
    if (!ctx_ || rep_.degree() == 0)
      return Ext(ctx_, UPolyT<F>::constant(UPolyT<F>::unit() / rep_[0]),
                 no_reduce{});
    UPolyT<F> a = rep_ % ctx_->alpha.defining();
    while (true) {
      UPolyT<F> u, v;
      UPolyT<F> g = ext_gcd(a, ctx_->alpha.defining(), u, v);
      if (g.degree() == 0) return Ext(ctx_, std::move(u));
      // the defining polynomial is reducible: keep the factor that
      // actually vanishes at the generator, then retry
      if (ctx_->alpha.sign_at(g) == 0)
        ctx_->alpha.replace_defining(g);
      else
        ctx_->alpha.replace_defining(ctx_->alpha.defining() / g);
      a = a % ctx_->alpha.defining();
      if (a.zero()) throw std::domain_error("Ext: division by zero");
    }
  }

 private:
  struct no_reduce {};
  Ext(Ctx c, UPolyT<F> rep, no_reduce) : ctx_(std::move(c)), rep_(std::move(rep)) {}

  Ctx merged(const Ext& o) const {
    if (!ctx_) return o.ctx_;
    if (!o.ctx_) return ctx_;
    if (ctx_ != o.ctx_)
      throw std::logic_error("Ext: mixing elements of different extensions");
    return ctx_;
  }
  void reduce() {
    if (ctx_ && rep_.degree() >= ctx_->alpha.defining().degree())
      rep_ = rep_ % ctx_->alpha.defining();
  }

  Ctx ctx_;
  UPolyT<F> rep_;
};

template <class F>
int field_sign(const Ext<F>& e) {
  if (e.rep().zero()) return 0;
  if (!e.ctx() || e.rep().degree() == 0) return field_sign(e.base_value());
  return e.ctx()->alpha.sign_at(e.rep());
}

template <class F>
bool is_zero(const Ext<F>& e) {
  return field_sign(e) == 0;
}

template <class F>
Interval field_approx(const Ext<F>& e, const Rational& eps) {
  if (e.rep().zero()) return Interval(Rational(0));
  if (!e.ctx() || e.rep().degree() == 0) return field_approx(e.base_value(), eps);
  Rational inner = eps;
  while (true) {
    Interval r = horner_interval(e.rep(), e.ctx()->alpha.interval(), inner);
    if (r.width() <= eps) return r;
    e.ctx()->alpha.refine();
    inner /= 4;
  }
}

// Dense univariate to sparse trivariate in the chosen variable.
inline MPoly mpoly_from_upoly(const UPoly& u, int var) {
  MPoly r;
  for (int i = 0; i <= u.degree(); ++i) {
    Exp e{0, 0, 0};
    e[var] = i;
    r = r + MPoly::term(u[i], e);
  }
  return r;
}

// The value of e = g(alpha) re-expressed as a root of a rational-coefficient
// polynomial: eliminate alpha from {defining(x1) = 0, x2 = g(x1)} and pick
// the root matching e's enclosure.
inline AlgebraicNumber to_algebraic(const Ext<Rational>& e) {
  if (e.rep().zero()) return AlgebraicNumber::from_rational(Rational(0));
  if (!e.ctx() || e.rep().degree() == 0)
    return AlgebraicNumber::from_rational(e.rep()[0]);
  MPoly defp = mpoly_from_upoly(e.ctx()->alpha.defining(), 0);
  MPoly graph = MPoly::var(1) - mpoly_from_upoly(e.rep(), 0);
  MPoly elim = resultant(defp, graph, 0);
  auto roots = isolate_real_roots(elim.to_upoly(1));
  Rational eps(1);
  while (true) {
    Interval iv = field_approx(e, eps);
    std::vector<size_t> live;
    for (size_t i = 0; i < roots.size(); ++i) {
      const Interval& r = roots[i].interval();
      if (!(r.hi < iv.lo || iv.hi < r.lo)) live.push_back(i);
    }
    if (live.size() == 1) return roots[live.front()];
    for (size_t i : live) roots[i].refine();
    eps /= 4;
  }
}

}  // namespace rag

#endif
