#include "hkc/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hkc/errors.hpp"

namespace hkc {

std::set<Nat> sg_close(const std::vector<Nat>& generators, Nat bound) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  for (Nat g : generators) {
    if (g <= 0) throw std::invalid_argument("generators must be positive");
  }
  std::vector<char> reachable(static_cast<std::size_t>(std::max<Nat>(bound, 0) + 1), 0);
  reachable[0] = 1;
  for (Nat x = 1; x <= bound; ++x) {
    for (Nat g : generators) {
      if (g <= x && reachable[static_cast<std::size_t>(x - g)]) {
        reachable[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  std::set<Nat> result;
  for (Nat x = 0; x <= bound; ++x) {
    if (reachable[static_cast<std::size_t>(x)]) result.insert(result.end(), x);
  }
  return result;
}

NumericalSemigroup sg_from_value_set(const std::set<Nat>& values, Nat bound) {
  if (!values.contains(0)) throw std::invalid_argument("value set must contain 0");
  auto first_nonzero = values.upper_bound(0);
  if (first_nonzero == values.end() || *first_nonzero > bound) {
    throw PrecisionError("insufficient bound: no nonzero value below " + std::to_string(bound));
  }
  const Nat multiplicity = *first_nonzero;

  // Smallest start of a run of `multiplicity` consecutive members.
  Nat run_start = -1;
  Nat run_length = 0;
  for (Nat x = 0; x <= bound; ++x) {
    if (values.contains(x)) {
      if (run_length == 0) run_start = x;
      if (++run_length == multiplicity) break;
    } else {
      run_length = 0;
    }
  }
  if (run_length < multiplicity) {
    Nat g = 0;
    for (Nat v : values) {
      if (v <= bound) g = std::gcd(g, v);
    }
    if (g > 1) throw GcdError("gcd > 1: observed values share the divisor " + std::to_string(g));
    throw PrecisionError("insufficient bound: no run of " + std::to_string(multiplicity) +
                         " consecutive values below " + std::to_string(bound));
  }

  NumericalSemigroup s;
  s.bound = bound;
  for (Nat x = 0; x < run_start; ++x) {
    if (!values.contains(x)) s.gaps.push_back(x);
  }
  s.conductor = s.gaps.empty() ? 0 : s.gaps.back() + 1;
  s.min_generators = sg_minimal_generators(s);
  return s;
}

bool sg_member(const NumericalSemigroup& s, Nat x) {
  if (x < 0) return false;
  if (x >= s.conductor) return true;
  return !std::binary_search(s.gaps.begin(), s.gaps.end(), x);
}

Nat sg_genus(const NumericalSemigroup& s) { return static_cast<Nat>(s.gaps.size()); }

std::vector<Nat> sg_minimal_generators(const NumericalSemigroup& s) {
  // Every minimal generator is at most conductor + multiplicity - 1 (or 1).
  Nat multiplicity = 1;
  while (!sg_member(s, multiplicity)) ++multiplicity;
  std::vector<Nat> generators;
  for (Nat x = 1; x <= s.conductor + multiplicity; ++x) {
    if (!sg_member(s, x)) continue;
    bool decomposable = false;
    for (Nat y = 1; y <= x / 2 && !decomposable; ++y) {
      decomposable = sg_member(s, y) && sg_member(s, x - y);
    }
    if (!decomposable) generators.push_back(x);
  }
  return generators;
}

}  // namespace hkc
