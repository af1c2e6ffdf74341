#include "doctest.h"

#include "rag/tower.hpp"

using namespace rag;

namespace {

Tower1 sqrt_gen(int n, std::shared_ptr<ExtContext<Rational>>& ctx) {
  MPoly p = parse_poly("x1^2 - " + std::to_string(n));
  auto roots = isolate_real_roots(p.to_upoly(0));
  ctx = std::make_shared<ExtContext<Rational>>(roots[1]);  // positive root
  return Tower1::generator(ctx);
}

}  // namespace

TEST_CASE("algebraize a level-one element") {
  std::shared_ptr<ExtContext<Rational>> c1;
  Tower1 s2 = sqrt_gen(2, c1);
  AlgebraicNumber a = algebraize(s2 + 1);  // 1 + sqrt(2)
  CHECK(a.sign_at(parse_poly("x1^2 - 2*x1 - 1").to_upoly(0)) == 0);
  CHECK(a.compare_rational(rat(2)) > 0);
}

TEST_CASE("algebraize a root defined over an extension") {
  std::shared_ptr<ExtContext<Rational>> c1;
  Tower1 s2 = sqrt_gen(2, c1);
  // X^2 - sqrt(2): roots +-2^(1/4)
  UPolyT<Tower1> f(std::vector<Tower1>{-s2, Tower1(0), Tower1(1)});
  auto roots = RealRootT<Tower1>::isolate(f);
  REQUIRE(roots.size() == 2);
  AlgebraicNumber a = algebraize(roots[1]);
  CHECK(a.sign_at(parse_poly("x1^4 - 2").to_upoly(0)) == 0);
  CHECK(a.compare_rational(rat(0)) > 0);
}

TEST_CASE("algebraize a level-two element: sqrt(2) + sqrt(3)") {
  std::shared_ptr<ExtContext<Rational>> c1;
  Tower1 s2 = sqrt_gen(2, c1);
  UPolyT<Tower1> f(std::vector<Tower1>{Tower1(-3), Tower1(0), Tower1(1)});
  auto roots = RealRootT<Tower1>::isolate(f);
  REQUIRE(roots.size() == 2);
  auto c2 = std::make_shared<ExtContext<Tower1>>(roots[1]);
  Tower2 s3 = Tower2::generator(c2);
  Tower2 e = s3 + Tower2::of(s2);
  AlgebraicNumber a = algebraize(e);
  CHECK(a.sign_at(parse_poly("x1^4 - 10*x1^2 + 1").to_upoly(0)) == 0);
  Interval iv = a.approx(rat(1, 1000));
  CHECK(iv.lo > rat(3));
  CHECK(iv.hi < rat(4));
}

TEST_CASE("algebraize a root over a level-two field") {
  std::shared_ptr<ExtContext<Rational>> c1;
  Tower1 s2 = sqrt_gen(2, c1);
  UPolyT<Tower1> f(std::vector<Tower1>{Tower1(-3), Tower1(0), Tower1(1)});
  auto c2 = std::make_shared<ExtContext<Tower1>>(
      RealRootT<Tower1>::isolate(f)[1]);
  Tower2 s3 = Tower2::generator(c2);
  // X^2 - (sqrt(2) + sqrt(3)): the positive root is (2+3+2*sqrt(6))^(1/4)...
  UPolyT<Tower2> g(
      std::vector<Tower2>{-(s3 + Tower2::of(s2)), Tower2(0), Tower2(1)});
  auto roots = RealRootT<Tower2>::isolate(g);
  REQUIRE(roots.size() == 2);
  AlgebraicNumber a = algebraize(roots[1]);
  // value^4 = (sqrt(2)+sqrt(3))^2 = 5 + 2*sqrt(6): x^8 - 10 x^4 + 1 = 0
  CHECK(a.sign_at(parse_poly("x1^8 - 10*x1^4 + 1").to_upoly(0)) == 0);
  CHECK(a.compare_rational(rat(1)) > 0);
}

TEST_CASE("tower promotion of trivial roots avoids new levels") {
  std::shared_ptr<ExtContext<Rational>> c1;
  Tower1 s2 = sqrt_gen(2, c1);
  // linear fiber: root = sqrt(2)/2, stays a field element
  UPolyT<Tower1> lin(std::vector<Tower1>{-s2, Tower1(2)});
  auto roots = RealRootT<Tower1>::isolate(lin);
  REQUIRE(roots.size() == 1);
  std::shared_ptr<ExtContext<Tower1>> c2;
  Tower2 v = tower2_value(roots[0], c2);
  CHECK(c2 == nullptr);
  CHECK(field_sign(v * v * 2 - Tower2(1)) == 0);
}
