#pragma once

// Brute-force reference computations used to check the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hkc/power_series.hpp"
#include "hkc/semigroup.hpp"

namespace oracle {

using hkc::Exponent;
using hkc::Nat;
using hkc::PowerSeries;
using hkc::Scalar;

using Dense = std::vector<Scalar>;  // coefficients of t^0 .. t^(D-1)

inline Dense dense(const PowerSeries& f, Exponent d) {
  Dense out(static_cast<std::size_t>(d));
  for (const auto& [e, c] : f.terms()) {
    if (e < d) out[static_cast<std::size_t>(e)] = c;
  }
  return out;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) {
      if (sgn(b[j]) != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

inline bool dense_zero(const Dense& a) {
  return std::all_of(a.begin(), a.end(), [](const Scalar& c) { return sgn(c) == 0; });
}

// Valuations of the span of all monomials y^alpha modulo t^d, by plain
// Gaussian elimination on dense vectors.
inline std::set<Nat> monomial_span_valuations(const std::vector<PowerSeries>& gens, Exponent d) {
  std::vector<Dense> products{dense(PowerSeries::constant(1), d)};
  for (const auto& g : gens) {
    const Dense dg = dense(g, d);
    std::vector<Dense> next;
    for (const auto& p : products) {
      Dense cur = p;
      while (!dense_zero(cur)) {
        next.push_back(cur);
        cur = dense_mul(cur, dg);
      }
    }
    products = std::move(next);
  }
  std::map<std::size_t, Dense> pivots;
  for (auto v : products) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      auto it = pivots.find(i);
      if (it == pivots.end()) {
        pivots.emplace(i, v);
        break;
      }
      const Scalar factor = v[i] / it->second[i];
      for (std::size_t j = i; j < v.size(); ++j) v[j] -= factor * it->second[j];
    }
  }
  std::set<Nat> keys;
  for (const auto& [k, row] : pivots) keys.insert(static_cast<Nat>(k));
  return keys;
}

// Members of the semigroup generated by gens, up to bound.
inline std::set<Nat> semigroup_members(const std::vector<Nat>& gens, Nat bound) {
  std::vector<bool> in(static_cast<std::size_t>(bound + 1), false);
  in[0] = true;
  for (Nat x = 1; x <= bound; ++x) {
    for (Nat g : gens) {
      if (g <= x && in[static_cast<std::size_t>(x - g)]) {
        in[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  std::set<Nat> out;
  for (Nat x = 0; x <= bound; ++x) {
    if (in[static_cast<std::size_t>(x)]) out.insert(x);
  }
  return out;
}

// Least c with [c, bound] inside the member set.
inline Nat conductor_of(const std::set<Nat>& members, Nat bound) {
  Nat c = bound + 1;
  while (c > 0 && members.contains(c - 1)) --c;
  return c;
}

// Minimal generators by definition: members that are not sums of two
// nonzero members.
inline std::vector<Nat> minimal_generators(const std::set<Nat>& members, Nat upto) {
  std::vector<Nat> out;
  for (Nat x : members) {
    if (x == 0 || x > upto) continue;
    bool decomposable = false;
    for (Nat y : members) {
      if (y == 0) continue;
      if (y > x / 2) break;
      if (members.contains(x - y)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(x);
  }
  return out;
}

inline Scalar random_scalar(std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  Scalar c;
  do {
    c = Scalar(num(rng), den(rng));
    c.canonicalize();
  } while (sgn(c) == 0);
  return c;
}

}  // namespace oracle
