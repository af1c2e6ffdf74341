#include "doctest.h"

#include <random>

#include "rag/ext.hpp"
#include "rag/mpoly.hpp"
#include "rag/realroot.hpp"

using namespace rag;

namespace {

UPoly up(const std::string& s) { return parse_poly(s).to_upoly(0); }

Rational bigrat(const char* num, const char* den) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("isolate surds") {
  auto roots = isolate_real_roots(up("x1^2 - 2"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].compare_rational(rat(0)) == -1);
  CHECK(roots[1].compare_rational(rat(0)) == 1);
  CHECK(roots[1].compare_rational(rat(3, 2)) == -1);
  CHECK(roots[1].compare_rational(rat(7, 5)) == 1);
  Rational tiny = bigrat("1", "1000000000000");
  Interval iv = roots[1].approx(tiny);
  CHECK(iv.width() <= tiny);
  CHECK(iv.lo < bigrat("14142135623731", "10000000000000"));
  CHECK(iv.hi > bigrat("14142135623730", "10000000000000"));
}

TEST_CASE("isolate recognizes rational roots exactly") {
  auto roots = isolate_real_roots(up("x1^3 - x1"));
  REQUIRE(roots.size() == 3);
  for (auto& r : roots) CHECK(r.is_exact());
  CHECK(roots[0].value() == rat(-1));
  CHECK(roots[1].value() == rat(0));
  CHECK(roots[2].value() == rat(1));
}

TEST_CASE("isolate square-frees its input") {
  auto roots = isolate_real_roots(up("(x1 - 2)^3 * (x1^2 - 2)"));
  CHECK(roots.size() == 3);
}

TEST_CASE("sign_at with certified zero") {
  auto r2 = isolate_real_roots(up("x1^2 - 2"))[1];
  CHECK(r2.sign_at(up("x1^2 - 2")) == 0);
  CHECK(r2.sign_at(up("x1 - 1")) == 1);
  CHECK(r2.sign_at(up("x1 - 2")) == -1);
  CHECK(r2.sign_at(up("(x1^2 - 2)*(x1 + 7)")) == 0);
  CHECK(r2.sign_at(up("x1^2 - 3")) == -1);
}

TEST_CASE("compare across different defining polynomials") {
  auto a = isolate_real_roots(up("x1^2 - 2"))[1];
  auto b = isolate_real_roots(up("(x1^2 - 2)*(x1 + 5)"))[2];
  CHECK(AlgebraicNumber::compare(a, b) == 0);
  auto c = isolate_real_roots(up("x1^2 - 3"))[1];
  CHECK(AlgebraicNumber::compare(a, c) == -1);
  auto half = AlgebraicNumber::from_rational(rat(1, 2));
  CHECK(AlgebraicNumber::compare(half, a) == -1);
}

TEST_CASE("refinement reaches tiny widths and never escapes") {
  auto r = isolate_real_roots(up("x1^2 - 2"))[1];
  Rational w = rat(1, 1);
  for (int i = 0; i < 5; ++i) w /= 1000000;
  Interval before = r.interval();
  r.refine_to(w);
  CHECK(r.interval().width() <= w);
  CHECK(r.interval().lo >= before.lo);
  CHECK(r.interval().hi <= before.hi);
}

TEST_CASE("isolation count matches an independent Sturm count") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dc(-9, 9);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Rational> cs(1 + trial % 6 + 1);
    for (auto& c : cs) c = rat(dc(rng));
    UPoly p(cs);
    if (p.degree() < 1) continue;
    UPoly w = square_free_part(p);
    auto seq = detail::sturm_sequence(w);
    Rational b = detail::cauchy_bound(w);
    int sturm = detail::sturm_variations(seq, -b) - detail::sturm_variations(seq, b);
    CHECK(isolate_real_roots(p).size() == static_cast<size_t>(sturm));
  }
}

TEST_CASE("fiber counts of the unit circle") {
  MPoly circle = parse_poly("x1^2 + x2^2 - 1");
  auto pm1 = isolate_real_roots(up("x1^2 - 1"));
  CHECK(count_real_roots_in_fiber(circle, pm1[0]) == 1);
  CHECK(count_real_roots_in_fiber(circle, pm1[1]) == 1);
  auto inner = isolate_real_roots(up("2*x1^2 - 1"));  // +-1/sqrt(2)
  CHECK(count_real_roots_in_fiber(circle, inner[1]) == 2);
  auto outer = isolate_real_roots(up("x1^2 - 2"));
  CHECK(count_real_roots_in_fiber(circle, outer[1]) == 0);
  CHECK(count_real_roots_in_fiber(circle, rat(0)) == 2);
}

TEST_CASE("fiber count equals direct isolation at rational abscissas") {
  MPoly p = parse_poly("x2^2 - x1^3 + x1");
  for (long num : {-3, -1, 1, 3}) {
    Rational x = rat(num, 2);
    MPoly spec = p.eval_partial({{0, x}});
    size_t direct = isolate_real_roots(spec.to_upoly(1)).size();
    CHECK(count_real_roots_in_fiber(p, x) == static_cast<int>(direct));
  }
}

TEST_CASE("sample points between roots") {
  auto pm1 = isolate_real_roots(up("x1^2 - 1"));
  auto s = sample_between(pm1);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == rat(-2));
  CHECK(s[1] == rat(0));
  CHECK(s[2] == rat(2));

  auto r2 = isolate_real_roots(up("x1^2 - 2"));
  std::vector<AlgebraicNumber> only{r2[1]};
  auto s2 = sample_between(only);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0] == rat(1));
  CHECK(s2[1] == rat(2));

  std::vector<AlgebraicNumber> none;
  auto s3 = sample_between(none);
  REQUIRE(s3.size() == 1);
  CHECK(s3[0] == rat(0));
}

TEST_CASE("extension field arithmetic over sqrt(2)") {
  auto roots = isolate_real_roots(up("x1^2 - 2"));
  auto ctx = std::make_shared<ExtContext<Rational>>(roots[1]);
  using K = Ext<Rational>;
  K g = K::generator(ctx);
  CHECK(field_sign(g * g - K(2)) == 0);
  CHECK(field_sign(g - K(1)) == 1);
  CHECK(field_sign(g - K(2)) == -1);
  // (1+sqrt2)^(-1) = sqrt2 - 1
  K inv = (K(1) + g).inverse();
  CHECK(field_sign(inv - (g - K(1))) == 0);
  // approx encloses 1.41421356...
  Interval iv = field_approx(g, rat(1, 1000000));
  CHECK(iv.lo < rat(141422, 100000));
  CHECK(iv.hi > rat(141421, 100000));
}

TEST_CASE("reducible defining polynomial is refined on inversion") {
  auto roots = isolate_real_roots(up("(x1^2 - 2)*(x1^2 - 3)"));
  REQUIRE(roots.size() == 4);
  // roots sorted: -sqrt3, -sqrt2, sqrt2, sqrt3
  auto ctx = std::make_shared<ExtContext<Rational>>(roots[2]);
  using K = Ext<Rational>;
  K g = K::generator(ctx);
  K e = g * g - K(3);  // equals -1 at sqrt2
  K inv = e.inverse();
  CHECK(field_sign(inv + K(1)) == 0);
  CHECK(ctx->alpha.defining().degree() == 2);
  CHECK(ctx->alpha.sign_at(up("x1^2 - 2")) == 0);
}

TEST_CASE("roots of a quadratic over an extension field") {
  auto roots = isolate_real_roots(up("x1^2 - 2"));
  auto ctx = std::make_shared<ExtContext<Rational>>(roots[1]);
  using K = Ext<Rational>;
  K g = K::generator(ctx);
  // Z^2 - sqrt2: roots +-2^(1/4)
  UPolyT<K> q(std::vector<K>{-g, K(0), K(1)});
  auto zs = RealRootT<K>::isolate(q);
  REQUIRE(zs.size() == 2);
  CHECK(zs[0].compare_rational(rat(0)) == -1);
  CHECK(zs[1].compare_rational(rat(0)) == 1);
  // 2^(1/4) = 1.18920711...
  CHECK(zs[1].compare_rational(rat(118920, 100000)) == 1);
  CHECK(zs[1].compare_rational(rat(118921, 100000)) == -1);
  CHECK(zs[1].sign_at(q) == 0);
  UPolyT<K> shifted(std::vector<K>{-g + K(1), K(0), K(1)});  // Z^2 - sqrt2 + 1
  CHECK(RealRootT<K>::isolate(shifted).size() == 2);
}
