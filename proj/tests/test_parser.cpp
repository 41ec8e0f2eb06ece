#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hkc/errors.hpp"
#include "hkc/parser.hpp"

using namespace hkc;

TEST_CASE("generator lists") {
  const Parametrization p = parse_generators("t^8, t^12 + t^14 + t^15");
  REQUIRE(p.size() == 2);
  CHECK(p[0] == PowerSeries::monomial(8));
  CHECK(p[1].terms().size() == 3);
  CHECK(p[0].is_exact());
  CHECK(p[1].is_exact());
}

TEST_CASE("coefficients") {
  const PowerSeries f = parse_series("2*t^19 + t^20 + t^41");
  CHECK(f.terms() == PowerSeries::Terms{{19, 2}, {20, 1}, {41, 1}});
  CHECK(parse_series("t^3 + O(t^10)").precision() == 10);
  CHECK(parse_series("-3/4*t^2").terms() == PowerSeries::Terms{{2, make_scalar(-3, 4)}});
}

TEST_CASE("expressions") {
  CHECK(parse_series("(t + t^2)^2") == parse_series("t^2 + 2*t^3 + t^4"));
  CHECK(parse_series("(t^2 - t^3)/2") == parse_series("1/2*t^2 - 1/2*t^3"));
  CHECK(parse_series("t*t*t") == PowerSeries::monomial(3));
  CHECK(parse_series("t^4 - t^4") == PowerSeries::zero(kExact));
  CHECK(parse_series("t + O(t^3) + t^5") == parse_series("t + O(t^3)"));
  CHECK(parse_series("t^2 * (1 + O(t^4))").precision() == 6);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_generators("t^2, t^3 +* t");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 10);
  }
  CHECK_THROWS_AS(parse_series("t^"), ParseError);
  CHECK_THROWS_AS(parse_series("(t + 1"), ParseError);
  CHECK_THROWS_AS(parse_series("t / t"), ParseError);
  CHECK_THROWS_AS(parse_series("x^2"), ParseError);
  CHECK_THROWS_AS(parse_series("t/0"), ParseError);
  CHECK_THROWS_AS(parse_generators(""), ParseError);
  CHECK_THROWS_AS(parse_generators("t^2,,t^3"), ParseError);
}

TEST_CASE("units and zero are rejected") {
  CHECK_THROWS_WITH_AS(parse_generators("t^2, 1 + t"), doctest::Contains("generator is a unit or zero"), MathError);
  CHECK_THROWS_WITH_AS(parse_generators("t^2, 0"), doctest::Contains("generator is a unit or zero"), MathError);
  CHECK_THROWS_WITH_AS(parse_generators("O(t^4)"), doctest::Contains("generator is a unit or zero"), MathError);
}
