#include "doctest.h"

#include "rag/quadric.hpp"

using namespace rag;

namespace {

MPoly P(const std::string& s) { return parse_poly(s); }

// every reported point must satisfy all three input equations exactly
void check_sound(IntersectionResult& R, const MPoly& p1, const MPoly& p2,
                 const MPoly& p3) {
  for (SpacePoint& v : R.vertices) {
    CHECK(v.sign_of(p1) == 0);
    CHECK(v.sign_of(p2) == 0);
    CHECK(v.sign_of(p3) == 0);
  }
  for (SpacePoint& v : R.isolated) {
    CHECK(v.sign_of(p1) == 0);
    CHECK(v.sign_of(p2) == 0);
    CHECK(v.sign_of(p3) == 0);
  }
  for (auto& e : R.edges) {
    CHECK(e.first >= 0);
    CHECK(e.first < static_cast<int>(R.vertices.size()));
    CHECK(e.second >= 0);
    CHECK(e.second < static_cast<int>(R.vertices.size()));
    CHECK(e.first != e.second);
  }
  CHECK(R.kinds.size() == R.vertices.size());
}

}  // namespace

TEST_CASE("refusals") {
  MPoly s1 = P("x1^2 + x2^2 + x3^2 - 1");
  CHECK_THROWS_AS(
      intersect_three_quadrics(P("x1^3 - x2"), s1, P("x1^2 + x2^2 - 1")),
      InputRefusal);
  CHECK_THROWS_AS(intersect_three_quadrics(P("(x1 + x2)^2"), s1,
                                           P("x1^2 + x2^2 - 1")),
                  InputRefusal);
  // two surfaces sharing the plane x1 = 0
  CHECK_THROWS_AS(intersect_three_quadrics(s1, P("x1 * x2"), P("x1 * x3")),
                  InputRefusal);
  // all three coincide
  CHECK_THROWS_AS(intersect_three_quadrics(s1, P("2 * x1^2 + 2 * x2^2 + "
                                                 "2 * x3^2 - 2"),
                                           P("3 * x1^2 + 3 * x2^2 + "
                                             "3 * x3^2 - 3")),
                  InputRefusal);
}

TEST_CASE("three spheres meeting in two points") {
  MPoly p1 = P("x1^2 + x2^2 + x3^2 - 1");
  MPoly p2 = P("(x1 - 1)^2 + x2^2 + x3^2 - 1");
  MPoly p3 = P("x1^2 + (x2 - 1)^2 + x3^2 - 1");
  auto R = intersect_three_quadrics(p1, p2, p3);
  CHECK(!R.empty);
  CHECK(R.vertices.empty());
  CHECK(R.edges.empty());
  CHECK(R.components == 0);
  REQUIRE(R.isolated.size() == 2);
  for (SpacePoint& q : R.isolated) {
    CHECK(q.sign_of(P("2 * x1 - 1")) == 0);
    CHECK(q.sign_of(P("2 * x2 - 1")) == 0);
    CHECK(q.sign_of(P("2 * x3^2 - 1")) == 0);
  }
  // deterministic order: sorted by coordinates, so z < 0 comes first
  CHECK(R.isolated[0].sign_of(P("x3")) < 0);
  CHECK(R.isolated[1].sign_of(P("x3")) > 0);
  check_sound(R, p1, p2, p3);

  SUBCASE("invariant under rescaling the equations") {
    auto S = intersect_three_quadrics(p1 * Rational(3), p2 * Rational(5),
                                      p3 * Rational(7));
    CHECK(S.isolated.size() == 2);
    CHECK(S.vertices.empty());
    for (SpacePoint& q : S.isolated) {
      CHECK(q.sign_of(P("2 * x1 - 1")) == 0);
      CHECK(q.sign_of(P("2 * x2 - 1")) == 0);
      CHECK(q.sign_of(P("2 * x3^2 - 1")) == 0);
    }
  }
}

TEST_CASE("externally tangent spheres: one touching point") {
  // the touching point (1, 0, 0) only shows up as a degree-zero survivor
  // of the projected-curve decomposition
  MPoly p1 = P("x1^2 + x2^2 + x3^2 - 1");
  MPoly p2 = P("(x1 - 2)^2 + x2^2 + x3^2 - 1");
  MPoly p3 = p2 * Rational(2);
  auto R = intersect_three_quadrics(p1, p2, p3);
  CHECK(!R.empty);
  CHECK(R.vertices.empty());
  REQUIRE(R.isolated.size() == 1);
  CHECK(R.isolated[0].sign_of(P("x1 - 1")) == 0);
  CHECK(R.isolated[0].sign_of(P("x2")) == 0);
  CHECK(R.isolated[0].sign_of(P("x3")) == 0);
  check_sound(R, p1, p2, p3);
}

TEST_CASE("two shifted spheres and a band: a closed curve with surd vertices") {
  MPoly p1 = P("(x1 - x2)^2 + x2^2 + x3^2 - 1");
  MPoly p2 = P("(x1 - x2 - 1)^2 + x2^2 + x3^2 - 1");
  MPoly p3 = P("4 * x2^2 + 4 * x3^2 - 3");
  auto R = intersect_three_quadrics(p1, p2, p3);
  CHECK(!R.empty);
  CHECK(R.isolated.empty());
  CHECK(R.shear_a == 0);
  CHECK(R.shear_b == 0);

  CHECK(R.proj.sil == canonical(P("x1^2 - 2 * x1 * x2 + 2 * x2^2 - 1")));
  CHECK(R.proj.H2.is_constant());
  CHECK(R.proj.H3 == canonical(P("2 * x2 - 2 * x1 - 1")));
  CHECK(R.proj.SilTilde.is_constant());
  CHECK(R.proj.Gtilde == canonical(P("2 * x2 - 2 * x1 + 1")));

  // a single closed loop: as many edges as vertices
  REQUIRE(R.vertices.size() == 4);
  CHECK(R.edges.size() == 4);
  CHECK(R.components == 1);
  int crit = 0;
  for (size_t i = 0; i < R.vertices.size(); ++i) {
    if (R.kinds[i] == VertexKind::critical) {
      ++crit;
      // x = (1 -+ sqrt(3))/2, y = -+ sqrt(3)/2, z = 0
      CHECK(R.vertices[i].sign_of(P("2 * x1^2 - 2 * x1 - 1")) == 0);
      CHECK(R.vertices[i].sign_of(P("4 * x2^2 - 3")) == 0);
      CHECK(R.vertices[i].sign_of(P("x3")) == 0);
    }
  }
  CHECK(crit == 2);
  check_sound(R, p1, p2, p3);
}

TEST_CASE("empty intersection") {
  MPoly p1 = P("x2 + (x1 + x2 + x3)^2");
  MPoly p2 = P("x3^2 + 1 - x2");
  MPoly p3 = P("2 * x3^2 + 2 - 2 * x2");
  auto R = intersect_three_quadrics(p1, p2, p3);
  CHECK(R.empty);
  CHECK(R.isolated.empty());
  CHECK(R.vertices.empty());
  CHECK(R.components == 0);
}

TEST_CASE("isolated origin plus an open arc") {
  MPoly p1 = P("x2 + (x1 + x2 + x3)^2");
  MPoly p2 = P("x3^2 - x2 + x1 * x2 + x2^2 + x2 * x3");
  MPoly p3 = p2 * Rational(2);
  auto R = intersect_three_quadrics(p1, p2, p3);
  CHECK(!R.empty);
  REQUIRE(R.isolated.size() == 1);
  CHECK(R.isolated[0].sign_of(P("x1")) == 0);
  CHECK(R.isolated[0].sign_of(P("x2")) == 0);
  CHECK(R.isolated[0].sign_of(P("x3")) == 0);
  CHECK(!R.vertices.empty());
  CHECK(R.components == 1);
  check_sound(R, p1, p2, p3);
}

TEST_CASE("two crossing lines in the plane x3 = 0") {
  MPoly p1 = P("x3^2 + x1^2 - x2^2");
  MPoly p2 = P("x3^2 + x1 * x3 + x2 * x3 - x3 + x1^2 - x2^2");
  MPoly p3 = P("x3^2 + x1 * x3 + x2 * x3 + x3 + x1^2 - x2^2");
  auto R = intersect_three_quadrics(p1, p2, p3);
  CHECK(!R.empty);
  CHECK(R.isolated.empty());
  CHECK(R.components == 1);
  // a tree: two lines crossing once
  CHECK(R.edges.size() + 1 == R.vertices.size());
  std::vector<int> deg(R.vertices.size(), 0);
  for (auto& e : R.edges) {
    ++deg[e.first];
    ++deg[e.second];
  }
  int origin = -1;
  for (size_t i = 0; i < R.vertices.size(); ++i) {
    CHECK(R.vertices[i].sign_of(P("x3")) == 0);
    CHECK(R.vertices[i].sign_of(P("x1^2 - x2^2")) == 0);
    if (R.vertices[i].sign_of(P("x1")) == 0 &&
        R.vertices[i].sign_of(P("x2")) == 0)
      origin = static_cast<int>(i);
  }
  REQUIRE(origin >= 0);
  CHECK(deg[origin] == 4);
  check_sound(R, p1, p2, p3);
}

TEST_CASE("a single space curve component") {
  MPoly p1 = P("x2 - x3 + x1 * x3 + 5 * x2 * x3 + 2 * x3^2");
  MPoly p2 = P("6 * x2^2 - 5 * x2 * x3 - x3^2 + x1 * x2 - x1 * x3 + x3");
  auto R = intersect_three_quadrics(p1, p2, p2);
  CHECK(!R.empty);
  CHECK(R.components == 1);
  check_sound(R, p1, p2, p2);
}
