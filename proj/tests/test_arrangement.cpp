#include "doctest.h"

#include "rag/arrangement.hpp"

using namespace rag;

TEST_CASE("coprime square-free basis splits shared factors") {
  MPoly circle = parse_poly("x1^2 + x2^2 - 1");
  MPoly doubled = circle * circle;
  MPoly mixed = circle * parse_poly("x2 - x1");
  auto basis = coprime_square_free_basis({doubled, mixed});
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].total_degree() == 1);
  CHECK(basis[1].total_degree() == 2);
  CHECK(mgcd(basis[0], basis[1]).is_constant());
  // constants and duplicates disappear
  auto one = coprime_square_free_basis({parse_poly("7"), circle, circle});
  REQUIRE(one.size() == 1);
  CHECK(one[0].total_degree() == 2);
}

TEST_CASE("root promotion keeps the value and the defining data") {
  auto roots = isolate_real_roots(parse_poly("x1^2 - 2").to_upoly(0));
  REQUIRE(roots.size() == 2);
  auto r = RealRootT<Tower1>::promote(
      roots[1], [](const Rational& c) { return Tower1(c); });
  UPolyT<Tower1> p(std::vector<Tower1>{Tower1(-2), Tower1(0), Tower1(1)});
  CHECK(r.sign_at(p) == 0);
  UPolyT<Tower1> shifted(std::vector<Tower1>{Tower1(rat(-3, 2)), Tower1(1)});
  CHECK(r.sign_at(shifted) < 0);  // sqrt(2) < 3/2
}

TEST_CASE("single circle arrangement") {
  auto arr = plane_arrangement({parse_poly("x1^2 + x2^2 - 1")}, {});
  CHECK(arr.shear_t == 0);
  REQUIRE(arr.xs.size() == 2);
  CHECK(arr.xs[0].value() == rat(-1));
  CHECK(arr.xs[1].value() == rat(1));
  REQUIRE(arr.band.size() == 3);
  CHECK(arr.band[0].empty());
  CHECK(arr.band[1].size() == 2);
  CHECK(arr.band[2].empty());
  REQUIRE(arr.absc.size() == 2);
  CHECK(arr.absc[0].size() == 1);
  CHECK(arr.absc[1].size() == 1);
  CHECK(arr.phi_right[0] == std::vector<int>{0, 0});
  CHECK(arr.phi_left[1] == std::vector<int>{0, 0});
}

TEST_CASE("circle and diagonal line share a merged fiber") {
  auto arr = plane_arrangement(
      {parse_poly("x1^2 + x2^2 - 1"), parse_poly("x2 - x1")}, {});
  // critical abscissas of the circle plus the two crossings at +-1/sqrt(2)
  REQUIRE(arr.xs.size() == 4);
  CHECK(arr.xs[0].compare_rational(rat(-1)) == 0);
  CHECK(arr.xs[3].compare_rational(rat(1)) == 0);
  CHECK(arr.xs[1].sign_at(parse_poly("2*x1^2 - 1").to_upoly(0)) == 0);
  CHECK(arr.xs[2].sign_at(parse_poly("2*x1^2 - 1").to_upoly(0)) == 0);
  // middle band: two circle branches and the line, line strictly between
  REQUIRE(arr.band[2].size() == 3);
  int line = arr.curves[0].total_degree() == 1 ? 0 : 1;
  CHECK(arr.band[2][1].curves == std::vector<int>{line});
  // at a crossing the two curves share one stack point
  bool shared = false;
  for (auto& sp : arr.absc[1])
    if (sp.curves.size() == 2) shared = true;
  CHECK(shared);
  // the line alone spans the outer bands
  CHECK(arr.band[0].size() == 1);
  CHECK(arr.band[4].size() == 1);
}

TEST_CASE("two crossing lines need no curve-valency machinery") {
  auto arr = plane_arrangement(
      {parse_poly("x2 - x1"), parse_poly("x2 + x1")}, {});
  REQUIRE(arr.xs.size() == 1);
  CHECK(arr.xs[0].value() == rat(0));
  CHECK(arr.band[0].size() == 2);
  CHECK(arr.band[1].size() == 2);
  REQUIRE(arr.absc[0].size() == 1);
  CHECK(arr.absc[0][0].curves.size() == 2);
  CHECK(arr.phi_left[0] == std::vector<int>{0, 0});
  CHECK(arr.phi_right[0] == std::vector<int>{0, 0});
}

TEST_CASE("cusp absorbs both branches") {
  auto arr = plane_arrangement({parse_poly("x2^2 - x1^3")}, {});
  REQUIRE(arr.xs.size() == 1);
  CHECK(arr.xs[0].value() == rat(0));
  CHECK(arr.band[0].empty());
  CHECK(arr.band[1].size() == 2);
  CHECK(arr.phi_right[0] == std::vector<int>{0, 0});
}

TEST_CASE("marker curves only contribute crossing abscissas") {
  auto arr = plane_arrangement({parse_poly("x1^2 + x2^2 - 1")},
                               {parse_poly("x1")});
  // the vertical marker forces a shear; with t = 1 the circle's critical
  // abscissas move to +-sqrt(2) and the marker crossings (0,-1),(0,1) land
  // at x = 1 and x = -1
  CHECK(arr.shear_t == 1);
  REQUIRE(arr.xs.size() == 4);
  CHECK(arr.xs[0].sign_at(parse_poly("x1^2 - 2").to_upoly(0)) == 0);
  CHECK(arr.xs[1].value() == rat(-1));
  CHECK(arr.xs[2].value() == rat(1));
  CHECK(arr.xs[3].sign_at(parse_poly("x1^2 - 2").to_upoly(0)) == 0);
  // marker fibers are not part of the stacks
  for (auto& stack : arr.absc)
    for (auto& sp : stack) CHECK(sp.curves == std::vector<int>{0});
}

TEST_CASE("marker sharing a component with a curve is ignored for crossings") {
  // the marker equals one of the curves: no extra abscissas, no failure
  auto arr = plane_arrangement({parse_poly("x1^2 + x2^2 - 1")},
                               {parse_poly("x1^2 + x2^2 - 1")});
  CHECK(arr.xs.size() == 2);
}

TEST_CASE("irrational abscissa stacks live in an extension field") {
  auto arr = plane_arrangement(
      {parse_poly("x1^2 + x2^2 - 1"), parse_poly("x2 - x1")}, {});
  // above x = -1/sqrt(2) the crossing point has y = x (on the line)
  REQUIRE(arr.xctx[1] != nullptr);
  auto& sp = arr.absc[1];
  for (auto& p : sp)
    if (p.curves.size() == 2) {
      Tower1 x = Tower1::generator(arr.xctx[1]);
      UPolyT<Tower1> line(std::vector<Tower1>{-x, Tower1(1)});  // X2 - x
      CHECK(p.y.sign_at(line) == 0);
    }
}
