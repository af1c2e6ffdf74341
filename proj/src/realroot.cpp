#include "rag/realroot.hpp"

namespace rag {

namespace {

Rational floor_r(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rational(q);
}

Rational ceil_r(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rational(q);
}

}  // namespace

int count_real_roots_in_fiber(const std::vector<MPoly>& ladder,
                              AlgebraicNumber& x) {
  std::vector<int> signs;
  signs.reserve(ladder.size());
  for (const MPoly& c : ladder)
    signs.push_back(c.zero() ? 0 : x.sign_at(c.to_upoly(0)));
  if (signs.empty() || signs[0] == 0)
    throw std::domain_error(
        "count_real_roots_in_fiber: leading coefficient vanishes at x");
  return sturm_habicht_count(signs);
}

int count_real_roots_in_fiber(const MPoly& p, AlgebraicNumber& x) {
  return count_real_roots_in_fiber(sturm_habicht_coeffs(p, 1), x);
}

int count_real_roots_in_fiber(const MPoly& p, const Rational& x) {
  AlgebraicNumber a = AlgebraicNumber::from_rational(x);
  return count_real_roots_in_fiber(p, a);
}

std::vector<Rational> sample_between(std::vector<AlgebraicNumber>& roots) {
  if (roots.empty()) return {Rational(0)};
  for (auto& r : roots) r.refine_to(rat(1, 4));
  // separate adjacent intervals (duplicates are collapsed)
  std::vector<size_t> keep;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (!keep.empty() &&
        AlgebraicNumber::compare(roots[keep.back()], roots[i]) == 0)
      continue;
    keep.push_back(i);
  }
  std::vector<Rational> out;
  {
    const AlgebraicNumber& first = roots[keep.front()];
    Rational l = first.is_exact() ? first.value() : first.lo();
    out.push_back(ceil_r(l) - 1);
  }
  for (size_t k = 0; k + 1 < keep.size(); ++k) {
    const AlgebraicNumber& a = roots[keep[k]];
    const AlgebraicNumber& b = roots[keep[k + 1]];
    Rational ha = a.is_exact() ? a.value() : a.hi();
    Rational lb = b.is_exact() ? b.value() : b.lo();
    out.push_back((ha + lb) / 2);
  }
  {
    const AlgebraicNumber& last = roots[keep.back()];
    Rational h = last.is_exact() ? last.value() : last.hi();
    out.push_back(floor_r(h) + 1);
  }
  return out;
}

}  // namespace rag
