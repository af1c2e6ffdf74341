#include "rag/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace rag {

MPoly MPoly::operator-() const {
  MPoly r;
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (auto& [e, c] : o.terms_) {
    auto [it, fresh] = r.terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) r.terms_.erase(it);
    }
  }
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly mul_term(const MPoly& p, const Exp& e, const Rational& c) {
  MPoly r;
  for (auto& [pe, pc] : p.terms_)
    r.terms_[{pe[0] + e[0], pe[1] + e[1], pe[2] + e[2]}] = pc * c;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (auto& [e, c] : o.terms_) r = r + mul_term(*this, e, c);
  return r;
}

MPoly MPoly::operator*(const Rational& s) const {
  if (is_zero(s)) return {};
  MPoly r;
  for (auto& [e, c] : terms_) r.terms_[e] = c * s;
  return r;
}

MPoly MPoly::derivative(int v) const {
  MPoly r;
  for (auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exp e2 = e;
    e2[v] -= 1;
    r.terms_[e2] = c * e[v];
  }
  return r;
}

MPoly MPoly::eval_partial(const std::map<int, Rational>& assignment) const {
  MPoly r;
  for (auto& [e, c] : terms_) {
    Rational cc = c;
    Exp e2 = e;
    for (auto& [v, val] : assignment) {
      for (int i = 0; i < e[v]; ++i) cc *= val;
      e2[v] = 0;
    }
    r = r + MPoly::term(cc, e2);
  }
  return r;
}

MPoly MPoly::subst(const std::array<MPoly, 3>& images) const {
  MPoly r;
  for (auto& [e, c] : terms_) {
    MPoly t{Rational(c)};
    for (int v = 0; v < 3; ++v)
      for (int i = 0; i < e[v]; ++i) t = t * images[v];
    r = r + t;
  }
  return r;
}

std::vector<MPoly> MPoly::coeffs_wrt(int v) const {
  std::vector<MPoly> cs(degree(v) + 1);
  if (zero()) return {};
  for (auto& [e, c] : terms_) {
    Exp e2 = e;
    e2[v] = 0;
    cs[e[v]] = cs[e[v]] + MPoly::term(c, e2);
  }
  while (!cs.empty() && cs.back().zero()) cs.pop_back();
  return cs;
}

MPoly MPoly::from_coeffs_wrt(int v, const std::vector<MPoly>& cs) {
  MPoly r;
  for (size_t i = 0; i < cs.size(); ++i) {
    Exp e{0, 0, 0};
    e[v] = static_cast<int>(i);
    r = r + mul_term(cs[i], e, 1);
  }
  return r;
}

UPoly MPoly::to_upoly(int v) const {
  std::vector<Rational> cs(degree(v) + 1, Rational(0));
  if (zero()) return {};
  for (auto& [e, c] : terms_) {
    for (int w = 0; w < 3; ++w)
      if (w != v && e[w] != 0)
        throw std::domain_error("to_upoly: polynomial not univariate");
    cs[e[v]] = c;
  }
  return UPoly(std::move(cs));
}

MPoly primitive_scaled(const MPoly& p) {
  if (p.zero()) return p;
  // scale so all coefficients are integers with gcd 1
  Integer den = 1;
  for (auto& [e, c] : p.terms()) den = lcm(den, c.get_den());
  Integer g = 0;
  for (auto& [e, c] : p.terms()) g = gcd(g, Integer(c.get_num() * (den / c.get_den())));
  Rational scale(den, g);
  scale.canonicalize();
  return p * scale;
}

MPoly canonical(const MPoly& p) {
  if (p.zero()) return p;
  MPoly r = primitive_scaled(p);
  if (sgn(r.leading_coeff()) < 0) r = -r;
  return r;
}

std::optional<MPoly> divexact(const MPoly& p, const MPoly& d) {
  if (d.zero()) return std::nullopt;
  MPoly r = p, q;
  Exp de = d.leading_exp();
  const Rational& dc = d.leading_coeff();
  while (!r.zero()) {
    Exp re = r.leading_exp();
    Exp te{re[0] - de[0], re[1] - de[1], re[2] - de[2]};
    if (te[0] < 0 || te[1] < 0 || te[2] < 0) return std::nullopt;
    Rational tc = r.leading_coeff() / dc;
    MPoly t = MPoly::term(tc, te);
    q = q + t;
    r = r - t * d;
  }
  return q;
}

namespace {

// content of p wrt v = gcd of its UPoly-in-v coefficients
MPoly content_wrt(const MPoly& p, int v) {
  MPoly g;
  for (const MPoly& c : p.coeffs_wrt(v)) {
    if (c.zero()) continue;
    g = g.zero() ? canonical(c) : mgcd(g, c);
  }
  return g;
}

// pseudo-remainder of a by b, both viewed univariately in v
MPoly prem(const MPoly& a, const MPoly& b, int v) {
  std::vector<MPoly> rc = a.coeffs_wrt(v);
  std::vector<MPoly> bc = b.coeffs_wrt(v);
  int db = static_cast<int>(bc.size()) - 1;
  const MPoly& blc = bc.back();
  int steps = static_cast<int>(rc.size()) - static_cast<int>(bc.size()) + 1;
  for (int s = 0; s < steps && static_cast<int>(rc.size()) > db; ++s) {
    MPoly rlc = rc.back();
    // r <- blc*r - rlc * X^(dr-db) * b
    int dr = static_cast<int>(rc.size()) - 1;
    for (auto& c : rc) c = c * blc;
    for (int j = 0; j <= db; ++j)
      rc[dr - db + j] = rc[dr - db + j] - rlc * bc[j];
    while (!rc.empty() && rc.back().zero()) rc.pop_back();
  }
  return MPoly::from_coeffs_wrt(v, rc);
}

}  // namespace

MPoly mgcd(const MPoly& a, const MPoly& b) {
  if (a.zero() && b.zero()) throw std::domain_error("mgcd(0,0)");
  if (a.zero()) return canonical(b);
  if (b.zero()) return canonical(a);
  if (a.is_constant() || b.is_constant()) return MPoly(Rational(1));
  int v = std::max(a.top_var(), b.top_var());
  if (!a.depends_on(v)) return mgcd(content_wrt(b, v), a);
  if (!b.depends_on(v)) return mgcd(content_wrt(a, v), b);

  MPoly ca = content_wrt(a, v), cb = content_wrt(b, v);
  MPoly pa = *divexact(a, ca), pb = *divexact(b, cb);
  MPoly cg = mgcd(ca, cb);

  // primitive PRS in (Q[rest])[v]
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (true) {
    MPoly r = prem(pa, pb, v);
    if (r.zero()) break;
    MPoly cr = content_wrt(r, v);
    pa = std::move(pb);
    pb = *divexact(r, cr);
    if (!pb.depends_on(v)) return canonical(cg);  // coprime as univariates
  }
  return canonical(cg * pb);
}

MPoly square_free_part(const MPoly& p, int v) {
  if (p.zero()) throw std::domain_error("square_free_part of zero");
  if (!p.depends_on(v)) {
    // constants in v: square-free part of the polynomial in the remaining
    // variables, taken wrt its own top variable
    int w = p.top_var();
    if (w < 0) return MPoly(Rational(1));
    return square_free_part(p, w);
  }
  MPoly d = p.derivative(v);
  MPoly g = mgcd(p, d);
  MPoly q = *divexact(canonical(p), g);
  return canonical(q);
}

MPoly square_free_part_full(const MPoly& p) {
  if (p.zero()) throw std::domain_error("square_free_part_full of zero");
  if (p.is_constant()) return MPoly(Rational(1));
  // g = gcd(p, dp/dx1, dp/dx2, dp/dx3) carries every factor with its
  // multiplicity reduced by one
  MPoly g = canonical(p);
  for (int v = 0; v < 3; ++v) {
    MPoly d = p.derivative(v);
    if (!d.zero()) g = mgcd(g, d);
  }
  return canonical(*divexact(canonical(p), g));
}

MPoly gcd_free_part(const MPoly& p, const MPoly& q) {
  if (p.zero()) throw std::domain_error("gcd_free_part of zero");
  if (q.zero() || q.is_constant()) return canonical(p);
  MPoly g = mgcd(p, q);
  return canonical(*divexact(canonical(p), g));
}

MPoly shear(const MPoly& p, int v_from, int v_other, const Rational& t) {
  std::array<MPoly, 3> images{MPoly::var(0), MPoly::var(1), MPoly::var(2)};
  images[v_from] = MPoly::var(v_from) + MPoly::var(v_other) * t;
  return p.subst(images);
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending lex order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Exp& e = it->first;
    Rational c = it->second;
    int s = sgn(c);
    if (first) {
      if (s < 0) os << "-";
      first = false;
    } else {
      os << (s < 0 ? " - " : " + ");
    }
    Rational a = abs_r(c);
    bool has_var = e[0] || e[1] || e[2];
    bool coeff_shown = !has_var || a != 1;
    if (coeff_shown) os << a.get_str();
    bool need_star = coeff_shown;
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (v + 1);
      if (e[v] > 1) os << "^" << e[v];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace rag
