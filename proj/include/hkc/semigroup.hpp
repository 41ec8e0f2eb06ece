#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace hkc {

using Nat = std::int64_t;

/// Numerical semigroup certified from a value set known on [0, bound].
struct NumericalSemigroup {
  std::vector<Nat> min_generators;
  Nat conductor = 0;
  std::vector<Nat> gaps;
  Nat bound = 0;

  Nat multiplicity() const { return min_generators.front(); }
};

// All sums of generators that are <= bound, plus 0.
std::set<Nat> sg_close(const std::vector<Nat>& generators, Nat bound);

// Requires a run of multiplicity-many consecutive members within [0, bound];
// throws PrecisionError ("insufficient bound") or GcdError otherwise.
NumericalSemigroup sg_from_value_set(const std::set<Nat>& values, Nat bound);

std::vector<Nat> sg_minimal_generators(const NumericalSemigroup& s);
bool sg_member(const NumericalSemigroup& s, Nat x);
Nat sg_genus(const NumericalSemigroup& s);

}  // namespace hkc
