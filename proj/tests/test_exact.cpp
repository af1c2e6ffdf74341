#include "doctest.h"

#include "rag/rational.hpp"

using namespace rag;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(*parse_rational("5") == rat(5));
  CHECK(*parse_rational("-7") == rat(-7));
  CHECK(*parse_rational("2/4") == rat(1, 2));
  CHECK(*parse_rational("-6/4") == rat(-3, 2));
  CHECK(!parse_rational("").has_value());
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("1.5").has_value());
  CHECK(!parse_rational("a").has_value());
  CHECK(!parse_rational("1/").has_value());
}

TEST_CASE("to_decimal renders exact integers exactly") {
  CHECK(to_decimal(rat(0), 15) == "0");
  CHECK(to_decimal(rat(123), 15) == "123");
  CHECK(to_decimal(rat(-42), 2) == "-42");
}

TEST_CASE("to_decimal significant digits and rounding") {
  CHECK(to_decimal(rat(1, 3), 5) == "0.33333");
  CHECK(to_decimal(rat(2, 3), 5) == "0.66667");
  CHECK(to_decimal(rat(1, 8), 3) == "0.125");
  CHECK(to_decimal(rat(1, 800), 3) == "0.00125");
  CHECK(to_decimal(rat(12345, 10), 3) == "1230");  // rounds to 3 sig digits
  // round-half-even at the boundary
  CHECK(to_decimal(rat(25, 10), 1) == "2");
  CHECK(to_decimal(rat(35, 10), 1) == "4");
  CHECK(to_decimal(rat(-25, 10), 1) == "-2");
  // carry over a string of nines
  CHECK(to_decimal(rat(9999, 1000), 3) == "10.0");
}

TEST_CASE("interval arithmetic bounds") {
  Interval a{rat(-1), rat(2)}, b{rat(3), rat(4)};
  Interval s = a + b;
  CHECK(s.lo == rat(2));
  CHECK(s.hi == rat(6));
  Interval d = a - b;
  CHECK(d.lo == rat(-5));
  CHECK(d.hi == rat(-1));
  Interval m = a * b;
  CHECK(m.lo == rat(-4));
  CHECK(m.hi == rat(8));
  CHECK(a.contains_zero());
  CHECK(b.definite_sign() == 1);
  Interval r = recip(b);
  CHECK(r.lo == rat(1, 4));
  CHECK(r.hi == rat(1, 3));
}
