#include "doctest.h"

#include <random>

#include "rag/betti.hpp"

using namespace rag;

namespace {

ObjectDescriptor surf(const char* s) {
  return validate_object(parse_poly(s), Rel::eq);
}
ObjectDescriptor solid(const char* s) {
  return validate_object(parse_poly(s), Rel::le);
}

std::vector<ObjectDescriptor> three_ellipsoids() {
  return {surf("8/9*x1^2+1/64*x2^2+1/6*x3^2-1"),
          surf("1/64*x1^2+8/9*x2^2+8/9*x3^2-1"),
          surf("8/9*x1^2+8/9*x2^2+1/64*x3^2-1")};
}

// plain rational Gaussian elimination, written independently of QMatrix::rank
size_t echelon_rank(const QMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(),
                                       std::vector<Rational>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
  size_t rk = 0;
  for (size_t col = 0; col < m.cols() && rk < m.rows(); ++col) {
    size_t piv = rk;
    while (piv < m.rows() && sgn(a[piv][col]) == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[rk], a[piv]);
    for (size_t i = rk + 1; i < m.rows(); ++i) {
      if (sgn(a[i][col]) == 0) continue;
      Rational f = a[i][col] / a[rk][col];
      for (size_t j = col; j < m.cols(); ++j) a[i][j] = a[i][j] - f * a[rk][j];
    }
    ++rk;
  }
  return rk;
}

}  // namespace

TEST_CASE("three touching ellipsoids: full incidence bookkeeping") {
  BettiResult r = betti01(three_ellipsoids());
  CHECK(r.d0 == 3);
  CHECK(r.d1 == 4);
  REQUIRE(r.pair_components.size() == 3);
  CHECK(r.pair_components[0] == 2);  // (1,2): two loops
  CHECK(r.pair_components[1] == 1);  // (1,3)
  CHECK(r.pair_components[2] == 1);  // (2,3)
  REQUIRE(r.triple_components.size() == 1);
  CHECK(r.triple_components[0] == 8);

  REQUIRE(r.a.rows() == 3);
  REQUIRE(r.a.cols() == 3);
  int arows[3][3] = {{-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(r.a.at(i, j) == Rational(arows[i][j]));
  CHECK(r.rank_a == 2);

  REQUIRE(r.b.rows() == 8);
  REQUIRE(r.b.cols() == 4);
  // every triple point lies in one of the two components of the first pair
  // and in the single components of the other two pairs
  for (size_t i = 0; i < 8; ++i) {
    CHECK(r.b.at(i, 0) + r.b.at(i, 1) == Rational(1));
    CHECK(r.b.at(i, 2) == Rational(-1));
    CHECK(r.b.at(i, 3) == Rational(1));
  }
  CHECK(r.rank_b == 2);
  CHECK(r.b0 == 1);
  CHECK(r.b1 == 0);
}

TEST_CASE("betti numbers do not depend on the input order") {
  auto os = three_ellipsoids();
  BettiResult ref = betti01(os);
  std::vector<std::vector<int>> perms = {{1, 0, 2}, {2, 1, 0}, {1, 2, 0}};
  for (auto& p : perms) {
    std::vector<ObjectDescriptor> shuffled;
    for (int i : p) shuffled.push_back(os[i]);
    BettiResult r = betti01(shuffled);
    CHECK(r.b0 == ref.b0);
    CHECK(r.b1 == ref.b1);
    CHECK(r.d1 == ref.d1);
    CHECK(r.rank_a == ref.rank_a);
    CHECK(r.rank_b == ref.rank_b);
  }
}

TEST_CASE("component count of the union agrees with the nerve graph") {
  auto os = three_ellipsoids();
  os.push_back(surf("(x1-40)^2+(x2-40)^2+x3^2-1"));  // far away, separate
  BettiResult r = betti01(os);
  std::vector<std::pair<int, int>> touching;
  int k = 0;
  for (int i = 0; i < r.d0; ++i)
    for (int j = i + 1; j < r.d0; ++j)
      if (r.pair_components[k++] > 0) touching.push_back({i, j});
  CHECK(r.b0 == union_components(r.d0, touching));
  CHECK(r.b0 == 2);
}

TEST_CASE("solid objects: convex intersections carry at most one component") {
  std::vector<ObjectDescriptor> os = {
      solid("8/9*x1^2+1/64*x2^2+1/6*x3^2-1"),
      solid("1/64*x1^2+8/9*x2^2+8/9*x3^2-1"),
      solid("8/9*x1^2+8/9*x2^2+1/64*x3^2-1")};
  BettiResult r = betti01(os);
  CHECK(r.d1 == 3);
  CHECK(r.triple_components[0] == 1);
  CHECK(r.rank_a == 2);
  CHECK(r.rank_b == 1);
  CHECK(r.b0 == 1);
  CHECK(r.b1 == 0);

  std::vector<ObjectDescriptor> far = {
      solid("x1^2+x2^2+x3^2-1"), solid("(x1-10)^2+x2^2+x3^2-1")};
  BettiResult f = betti01(far);
  CHECK(f.d1 == 0);
  CHECK(f.b0 == 2);
  CHECK(f.b1 == 0);
}

TEST_CASE("mixed relations and duplicate objects are refused") {
  std::vector<ObjectDescriptor> mixed = {solid("x1^2+x2^2+x3^2-1"),
                                         surf("(x1-1)^2+x2^2+x3^2-1")};
  CHECK_THROWS_AS(betti01(mixed), InputRefusal);
  std::vector<ObjectDescriptor> dup = {
      surf("x1^2+x2^2+x3^2-1"), surf("3*x1^2+3*x2^2+3*x3^2-3")};
  CHECK_THROWS_AS(betti01(dup), InputRefusal);
  CHECK_THROWS_AS(betti01({}), InputRefusal);
}

TEST_CASE("exact rank agrees with row-echelon elimination on random matrices") {
  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 60; ++iter) {
    size_t rows = 1 + rng() % 50, cols = 1 + rng() % 50;
    QMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        m.at(i, j) = Rational(static_cast<int>(rng() % 3) - 1);
    CHECK(m.rank() == echelon_rank(m));
  }
}
