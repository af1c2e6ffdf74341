#ifndef RAG_MPOLY_HPP
#define RAG_MPOLY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rag/rational.hpp"
#include "rag/upoly.hpp"

namespace rag {

// Exponent vector for (x1,x2,x3).
using Exp = std::array<int, 3>;

// Lex term order with x1 < x2 < x3: compare the x3 exponent first.
struct ExpLess {
  bool operator()(const Exp& a, const Exp& b) const {
    if (a[2] != b[2]) return a[2] < b[2];
    if (a[1] != b[1]) return a[1] < b[1];
    return a[0] < b[0];
  }
};

// Sparse polynomial in at most three variables over the rationals.
// No zero coefficients are stored.
class MPoly {
 public:
  using TermMap = std::map<Exp, Rational, ExpLess>;

  MPoly() = default;
  explicit MPoly(Rational c) {
    if (!is_zero(c)) terms_[{0, 0, 0}] = std::move(c);
  }
  static MPoly var(int v, int power = 1) {
    MPoly p;
    Exp e{0, 0, 0};
    e[v] = power;
    p.terms_[e] = 1;
    return p;
  }
  static MPoly term(Rational c, Exp e) {
    MPoly p;
    if (!is_zero(c)) p.terms_[e] = std::move(c);
    return p;
  }

  bool zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0, 0});
  }
  Rational constant_value() const {
    auto it = terms_.find({0, 0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const TermMap& terms() const { return terms_; }

  int degree(int v) const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
  }
  int total_degree() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
  }
  bool depends_on(int v) const { return degree(v) > 0; }
  // Highest variable index occurring, or -1 for constants.
  int top_var() const {
    int t = -1;
    for (auto& [e, c] : terms_)
      for (int v = 0; v < 3; ++v)
        if (e[v] > 0) t = std::max(t, v);
    return t;
  }

  // Lex-leading coefficient (x1<x2<x3 order).
  Rational leading_coeff() const {
    return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
  }
  Exp leading_exp() const { return terms_.rbegin()->first; }

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rational& s) const;
  MPoly operator/(const Rational& s) const { return *this * (1 / s); }
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  MPoly derivative(int v) const;

  // Partial substitution of rationals for some variables.
  MPoly eval_partial(const std::map<int, Rational>& assignment) const;

  // Substitute each variable by a polynomial.
  MPoly subst(const std::array<MPoly, 3>& images) const;

  // View as univariate in v with MPoly coefficients (index = degree).
  std::vector<MPoly> coeffs_wrt(int v) const;
  static MPoly from_coeffs_wrt(int v, const std::vector<MPoly>& cs);

  // Conversion to dense univariate in v; requires no other variable occurs.
  UPoly to_upoly(int v) const;

  // Evaluate at generic field values (x1,x2,x3); unused variables may be
  // given anything.
  template <class V>
  V eval3(const V& x, const V& y, const V& z) const {
    V acc{};
    for (auto& [e, c] : terms_) {
      V t = V{} + 1;
      for (int i = 0; i < e[0]; ++i) t = t * x;
      for (int i = 0; i < e[1]; ++i) t = t * y;
      for (int i = 0; i < e[2]; ++i) t = t * z;
      acc = acc + t * V(c);
    }
    return acc;
  }

  std::string str() const;  // grammar-conformant text

 private:
  TermMap terms_;
  friend MPoly mul_term(const MPoly&, const Exp&, const Rational&);
};

inline bool is_zero(const MPoly& p) { return p.zero(); }
inline MPoly operator*(const Rational& s, const MPoly& p) { return p * s; }

// Canonical representative: integer coprime coefficients, positive
// lex-leading coefficient. Constants normalize to 0 or 1.
MPoly canonical(const MPoly& p);
// Same scaling but keeps the constant value for constants.
MPoly primitive_scaled(const MPoly& p);

// Exact division; nullopt if d does not divide p.
std::optional<MPoly> divexact(const MPoly& p, const MPoly& d);

// Multivariate gcd, canonical-normalized (so gcd of coprime = 1).
MPoly mgcd(const MPoly& a, const MPoly& b);

// Square-free part of p viewed univariately in v (content preserved as its
// own square-free part), canonical-normalized.
MPoly square_free_part(const MPoly& p, int v);

// p / gcd(p,q), canonical-normalized.
MPoly gcd_free_part(const MPoly& p, const MPoly& q);

// Product of the distinct irreducible factors of p (multiplicities dropped
// in every variable), canonical-normalized.
MPoly square_free_part_full(const MPoly& p);

// p(.. v_from -> v_from + t*v_other ..): the plane/space shear primitive.
MPoly shear(const MPoly& p, int v_from, int v_other, const Rational& t);

struct ParseError {
  size_t offset;
  std::string message;
};

// Polynomial text grammar: variables x1|x2|x3, integer and a/b literals,
// operators + - * ^, parentheses; no implicit multiplication.
MPoly parse_poly(const std::string& text);  // throws ParseError

}  // namespace rag

#endif
