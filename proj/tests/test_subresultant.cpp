#include "doctest.h"

#include <random>

#include "rag/mpoly.hpp"
#include "rag/subresultant.hpp"

using namespace rag;

namespace {

int sign_of_constant(const MPoly& p) {
  REQUIRE(p.is_constant());
  return sgn(p.constant_value());
}

// Distinct real roots of a univariate polynomial in x1.
int distinct_real_roots(const std::string& text) {
  MPoly p = parse_poly(text);
  auto seq = sturm_habicht_coeffs(p, 0);
  std::vector<int> signs;
  for (const MPoly& c : seq) signs.push_back(sign_of_constant(c));
  return sturm_habicht_count(signs);
}

}  // namespace

TEST_CASE("matrix layout for a pair of linear polynomials") {
  UPoly p = parse_poly("x1 - 2").to_upoly(0);
  UPoly q = parse_poly("x1 - 5").to_upoly(0);
  QMatrix m = sylvester_habicht(p, q, 0);
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 2);
  CHECK(m.at(0, 0) == rat(1));
  CHECK(m.at(0, 1) == rat(-2));
  CHECK(m.at(1, 0) == rat(1));
  CHECK(m.at(1, 1) == rat(-5));
}

TEST_CASE("matrix layout for quadratic against derivative") {
  // rows: P, Q, x1*Q in the basis x1^2, x1, 1
  UPoly p = parse_poly("x1^2 - 1").to_upoly(0);
  UPoly q = parse_poly("2*x1").to_upoly(0);
  QMatrix m = sylvester_habicht(p, q, 0);
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 3);
  Rational want[3][3] = {{rat(1), rat(0), rat(-1)},
                         {rat(0), rat(2), rat(0)},
                         {rat(2), rat(0), rat(0)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == want[i][j]);
}

TEST_CASE("determinant of exact polynomial matrices") {
  auto c = [](long v) { return MPoly(rat(v)); };
  std::vector<std::vector<MPoly>> m = {{c(1), c(0), c(-1)},
                                       {c(0), c(2), c(0)},
                                       {c(2), c(0), c(0)}};
  CHECK(det_poly_matrix(m) == c(4));
  std::vector<std::vector<MPoly>> sym = {
      {parse_poly("x1"), c(1)}, {c(1), parse_poly("x1")}};
  CHECK(det_poly_matrix(sym) == parse_poly("x1^2 - 1"));
  std::vector<std::vector<MPoly>> singular = {{c(0), c(0)}, {c(1), c(2)}};
  CHECK(det_poly_matrix(singular).zero());
}

TEST_CASE("resultant of two linear forms") {
  MPoly r = resultant(parse_poly("x1 - x2"), parse_poly("x1 - x3"), 0);
  CHECK(canonical(r) == canonical(parse_poly("x2 - x3")));
}

TEST_CASE("resultant vanishes exactly on common factors") {
  MPoly g = parse_poly("x1 - x2");
  MPoly r = resultant(g * parse_poly("x1 + 1"), g * parse_poly("x1 + x2 + 3"), 0);
  CHECK(r.zero());
  MPoly r2 = resultant(parse_poly("x1^2 + x2^2 - 1"), parse_poly("x1 - x2"), 0);
  // common zeros at x2 = +-1/sqrt(2): resultant is 2*x2^2 - 1 up to scale
  CHECK(canonical(r2) == canonical(parse_poly("2*x2^2 - 1")));
}

TEST_CASE("resultant requires positive degree in the variable") {
  CHECK_THROWS_AS(resultant(parse_poly("x2 + 1"), parse_poly("x1"), 0),
                  DegenerateResultant);
}

TEST_CASE("ladder endpoints: sResP_q is Q, sResP_0 is the resultant") {
  MPoly p = parse_poly("x1^2 - 1");
  MPoly q = parse_poly("2*x1");
  auto lad = signed_subresultants(p, q, 0);
  REQUIRE(lad.q == 1);
  CHECK(lad.sResP[1] == q);
  CHECK(lad.sResP[0] == MPoly(rat(4)));
  CHECK(lad.sRes[1] == MPoly(rat(2)));
  CHECK(lad.sRes[0] == MPoly(rat(4)));
}

TEST_CASE("proportional pair flagged") {
  auto lad = signed_subresultants(parse_poly("x1^2 - x2"),
                                  parse_poly("3*x1^2 - 3*x2"), 0);
  CHECK(lad.proportional);
}

TEST_CASE("gcd degree from vanishing principal coefficients") {
  // gcd (x1 - x2) has degree 1: sRes_0 == 0, sRes_1 != 0, sResP_1 ~ gcd
  MPoly p = parse_poly("(x1 - x2)*(x1 + 1)");
  MPoly q = parse_poly("(x1 - x2)*(x1 - 3)");
  auto lad = signed_subresultants(p, q, 0);
  // specialize at x2 = 5: gcd should be x1 - 5
  std::map<int, Rational> at{{1, rat(5)}};
  CHECK(sgn(lad.sRes[0].eval_partial(at).constant_value()) == 0);
  CHECK(sgn(lad.sRes[1].eval_partial(at).constant_value()) != 0);
  MPoly g = lad.sResP[1].eval_partial(at);
  CHECK(canonical(g) == canonical(parse_poly("x1 - 5")));
}

TEST_CASE("distinct real root counts of univariate polynomials") {
  CHECK(distinct_real_roots("x1^2 - 1") == 2);
  CHECK(distinct_real_roots("x1^2 + 1") == 0);
  CHECK(distinct_real_roots("x1^2 - 2*x1 + 1") == 1);
  CHECK(distinct_real_roots("x1^3 - x1") == 3);
  CHECK(distinct_real_roots("x1^3 + x1") == 1);
  CHECK(distinct_real_roots("(x1^2 + 1)*(x1^2 + 4)") == 0);
  CHECK(distinct_real_roots("(x1^2 - 1)*(x1^2 - 4)") == 4);
  CHECK(distinct_real_roots("x1^4") == 1);
  CHECK(distinct_real_roots("(x1 - 2)^3 * (x1 + 7)") == 2);
  CHECK(distinct_real_roots("5*x1 - 3") == 1);
}

TEST_CASE("fiber root counts of a circle") {
  MPoly p = parse_poly("x1^2 + x2^2 - 1");
  auto seq = sturm_habicht_coeffs(p, 1);  // roots in x2 over a given x1
  auto count_at = [&](const Rational& x) {
    std::vector<int> signs;
    for (const MPoly& c : seq)
      signs.push_back(sgn(c.eval_partial({{0, x}}).constant_value()));
    return sturm_habicht_count(signs);
  };
  CHECK(count_at(rat(0)) == 2);
  CHECK(count_at(rat(1, 2)) == 2);
  CHECK(count_at(rat(1)) == 1);
  CHECK(count_at(rat(-1)) == 1);
  CHECK(count_at(rat(2)) == 0);
  CHECK(count_at(rat(-3)) == 0);
}

TEST_CASE("random specialization commutes with the ladder") {
  // signs of sRes_j at a rational point match the ladder of the
  // specialized pair computed over the rationals
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dc(-4, 4);
  int done = 0;
  while (done < 30) {
    // random bivariate p, q with deg_x1 = 3, 2
    MPoly p, q;
    for (int i = 0; i <= 3; ++i)
      p = p + MPoly::term(rat(dc(rng)), Exp{i, (i * 7) % 2, 0});
    for (int i = 0; i <= 2; ++i)
      q = q + MPoly::term(rat(dc(rng)), Exp{i, (i + 1) % 2, 0});
    if (p.degree(0) != 3 || q.degree(0) != 2) continue;
    auto lad = signed_subresultants(p, q, 0);
    Rational x = rat(dc(rng));
    MPoly ps = p.eval_partial({{1, x}});
    MPoly qs = q.eval_partial({{1, x}});
    if (ps.degree(0) != 3 || qs.degree(0) != 2) continue;
    auto lads = signed_subresultants(ps, qs, 0);
    for (int j = 0; j <= 2; ++j) {
      CHECK(lad.sRes[j].eval_partial({{1, x}}) == lads.sRes[j]);
    }
    ++done;
  }
}
