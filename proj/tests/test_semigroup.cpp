#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hkc/errors.hpp"
#include "hkc/semigroup.hpp"
#include "oracles.hpp"

using namespace hkc;

TEST_CASE("closure") {
  CHECK(sg_close({3, 5}, 10) == std::set<Nat>{0, 3, 5, 6, 8, 9, 10});
  CHECK_THROWS(sg_close({}, 4));
}

TEST_CASE("semigroup from a value set") {
  const auto values = sg_close({6, 9, 19, 41}, 60);
  const NumericalSemigroup s = sg_from_value_set(values, 60);
  CHECK(s.min_generators == std::vector<Nat>{6, 9, 19, 41});
  CHECK(s.conductor == 36);
  CHECK(s.multiplicity() == 6);
  CHECK(sg_genus(s) == 20);
  CHECK(sg_member(s, 38));
  CHECK_FALSE(sg_member(s, 35));
  CHECK(sg_member(s, 1000));
}

TEST_CASE("trivial semigroup") {
  const NumericalSemigroup s = sg_from_value_set(sg_close({1}, 5), 5);
  CHECK(s.min_generators == std::vector<Nat>{1});
  CHECK(s.conductor == 0);
  CHECK(s.gaps.empty());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(sg_from_value_set(sg_close({4, 6}, 40), 40), GcdError);
  CHECK_THROWS_AS(sg_from_value_set(sg_close({5, 7}, 25), 25), PrecisionError);
}

TEST_CASE("agrees with brute force on random semigroups") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<Nat> gen(2, 20);
  int tested = 0;
  while (tested < 60) {
    std::vector<Nat> gens(static_cast<std::size_t>(2 + tested % 3));
    for (auto& g : gens) g = gen(rng);
    Nat d = 0;
    for (Nat g : gens) d = std::gcd(d, g);
    if (d != 1) continue;
    ++tested;
    const Nat bound = 500;
    const auto members = oracle::semigroup_members(gens, bound);
    const NumericalSemigroup s = sg_from_value_set(members, bound);
    CHECK(s.conductor == oracle::conductor_of(members, bound));
    CHECK(s.min_generators == oracle::minimal_generators(members, s.conductor + s.multiplicity()));
    CHECK(sg_genus(s) == static_cast<Nat>(s.conductor + 1 - std::count_if(members.begin(), members.end(), [&](Nat x) { return x <= s.conductor; })));
  }
}
