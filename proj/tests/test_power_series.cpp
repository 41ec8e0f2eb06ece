#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hkc/errors.hpp"
#include "hkc/parser.hpp"
#include "hkc/power_series.hpp"
#include "oracles.hpp"

using namespace hkc;

namespace {

PowerSeries ps(const char* text) { return parse_series(text); }

PowerSeries random_series(std::mt19937& rng, Exponent low, Exponent high, Exponent precision) {
  PowerSeries::Terms terms;
  std::bernoulli_distribution keep(0.5);
  for (Exponent e = low; e <= high; ++e) {
    if (e == low || keep(rng)) terms[e] = oracle::random_scalar(rng);
  }
  return PowerSeries(std::move(terms), precision);
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(to_string(make_scalar(6, -4)) == "-3/2");
  CHECK(to_string(make_scalar(8, 4)) == "2");
  CHECK(parse_scalar("-3/6") == make_scalar(-1, 2));
  CHECK_FALSE(parse_scalar("3/0").has_value());
  CHECK_FALSE(parse_scalar("x").has_value());
  CHECK(rational_root(make_scalar(8, 27), 3) == make_scalar(2, 3));
  CHECK(rational_root(make_scalar(4), 2) == make_scalar(2));
  CHECK_FALSE(rational_root(make_scalar(2), 2).has_value());
}

TEST_CASE("construction drops zeros and terms beyond precision") {
  PowerSeries f(PowerSeries::Terms{{1, 0}, {2, 3}, {7, 1}}, 5);
  CHECK(f.terms().size() == 1);
  CHECK(f.order() == 2);
  CHECK(f.precision() == 5);
  CHECK(PowerSeries::zero(kExact).order() == kInfinity);
  CHECK_THROWS_AS(PowerSeries::zero(4).order(), PrecisionError);
  CHECK(PowerSeries::zero(4).order_bound() == 4);
}

TEST_CASE("sum and product precision") {
  const PowerSeries f = ps("t^2 + t^3 + O(t^10)");
  const PowerSeries g = ps("t^5 + O(t^8)");
  CHECK((f + g).precision() == 8);
  // min(10 + 5, 8 + 2)
  CHECK((f * g).precision() == 10);
  CHECK(f * g == ps("t^7 + t^8 + O(t^10)"));
  CHECK((ps("t^3") * ps("t^4 - t^6")).is_exact());
  CHECK(ps("t^2") * PowerSeries::zero(kExact) == PowerSeries::zero(kExact));
}

TEST_CASE("product agrees with a dense reference") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const PowerSeries f = random_series(rng, 1, 12, kExact);
    const PowerSeries g = random_series(rng, 0, 9, kExact);
    const Exponent d = 25;
    const auto expected = oracle::dense_mul(oracle::dense(f, d), oracle::dense(g, d));
    CHECK(oracle::dense(f * g, d) == expected);
  }
}

TEST_CASE("truncate and with_precision") {
  const PowerSeries f = ps("t + 2*t^4 + t^9 + O(t^12)");
  CHECK(truncate(f, 5) == ps("t + 2*t^4"));
  CHECK(truncate(f, 5).is_exact());
  CHECK(with_precision(f, 5) == ps("t + 2*t^4 + O(t^5)"));
  CHECK_THROWS_AS(truncate(f, 13), PrecisionError);
  CHECK(monic(ps("3*t^2 + t^3")) == ps("t^2 + 1/3*t^3"));
}

TEST_CASE("inverse of a unit") {
  const PowerSeries u = ps("1 - t");
  CHECK(invert_unit(u, 6) == ps("1 + t + t^2 + t^3 + t^4 + t^5 + O(t^6)"));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const PowerSeries f = random_series(rng, 0, 8, kExact);
    const PowerSeries g = invert_unit(f, 30);
    CHECK(g.precision() == 30);
    CHECK(with_precision(f * g, 30) == PowerSeries::monomial(1, 0, 30));
  }
  CHECK_THROWS_AS(invert_unit(ps("t"), 5), MathError);
  CHECK_THROWS(invert_unit(ps("1 + t")));
}

TEST_CASE("n-th roots") {
  CHECK(nth_root_unit(ps("1 + 2*t + t^2"), 2, 10) == ps("1 + t + O(t^10)"));
  std::mt19937 rng(5);
  for (unsigned n = 2; n <= 5; ++n) {
    PowerSeries f = random_series(rng, 1, 6, kExact) + PowerSeries::constant(1);
    const PowerSeries r = nth_root_unit(f, n, 20);
    CHECK(with_precision(pow(r, n), 20) == with_precision(f, 20));
  }
  CHECK(nth_root_unit(ps("4 + t"), 2, 3) == ps("2 + 1/4*t - 1/64*t^2 + O(t^3)"));
  CHECK_THROWS_AS(nth_root_unit(ps("2 + t"), 2, 3), MathError);
}

TEST_CASE("composition and reversion") {
  CHECK(compose(ps("t^2 + t^3"), ps("t + t^2")) == ps("t^2 + 3*t^3 + 4*t^4 + 3*t^5 + t^6"));
  CHECK(compose(ps("t^2 + O(t^5)"), ps("2*t")) == ps("4*t^2 + O(t^5)"));
  CHECK(compose(ps("t^2 + O(t^5)"), ps("2*t^2")) == ps("4*t^4 + O(t^10)"));
  CHECK_THROWS_AS(compose(ps("t"), ps("1 + t")), MathError);

  CHECK(revert(ps("t + t^2"), 6) == ps("t - t^2 + 2*t^3 - 5*t^4 + 14*t^5 + O(t^6)"));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 15; ++trial) {
    const PowerSeries s = ps("t") + random_series(rng, 2, 7, kExact);
    const PowerSeries r = revert(s, 25);
    CHECK(with_precision(compose(s, r), 25) == ps("t + O(t^25)"));
    CHECK(with_precision(compose(r, s), 25) == ps("t + O(t^25)"));
  }
  CHECK_THROWS_AS(revert(ps("2*t + t^2"), 5), MathError);
  CHECK_THROWS_AS(revert(ps("t^2"), 5), MathError);
}

TEST_CASE("derivative") {
  CHECK(derivative(ps("t^3 + 1/2*t^2 + 7")) == ps("3*t^2 + t"));
  CHECK(derivative(ps("t^3 + O(t^6)")).precision() == 5);
}

TEST_CASE("canonical text") {
  CHECK(to_string(ps("t^20 + 2*t^19")) == "2*t^19 + t^20");
  CHECK(to_string(ps("1/2*t^3 - t^4 + O(t^10)")) == "1/2*t^3 - t^4 + O(t^10)");
  CHECK(to_string(ps("-t")) == "-t");
  CHECK(to_string(PowerSeries::zero(kExact)) == "0");
  CHECK(to_string(PowerSeries::zero(7)) == "O(t^7)");
  CHECK(to_string(ps("3 - 2/3*t")) == "3 - 2/3*t");
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Exponent precision = trial % 2 ? kExact : 15;
    const PowerSeries f = random_series(rng, 0, 14, precision);
    CHECK(parse_series(to_string(f)) == f);
  }
}
