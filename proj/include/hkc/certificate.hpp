#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hkc/power_series.hpp"
#include "hkc/scalar.hpp"

namespace hkc {

/// Polynomial with rational coefficients in variables x1, x2, ... .
///
/// Records how a series was obtained from a list of generators, e.g. the
/// relation x2^2 - x1^3 behind the value 19 of k[[t^6, t^9 + t^10]].
class Certificate {
 public:
  // Exponent of each variable; trailing zeros are trimmed.
  using Monomial = std::vector<unsigned>;
  using Terms = std::map<Monomial, Scalar>;

  Certificate() = default;
  static Certificate constant(const Scalar& c);
  static Certificate variable(std::size_t index);
  static Certificate monomial(Monomial exponents, const Scalar& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  unsigned degree() const;
  // Highest variable index used plus one.
  std::size_t arity() const;

  Certificate& operator+=(const Certificate& other);
  Certificate& operator-=(const Certificate& other);
  Certificate scaled(const Scalar& c) const;
  Certificate times_variable(std::size_t index) const;

  PowerSeries evaluate(std::span<const PowerSeries> variables) const;

  friend bool operator==(const Certificate&, const Certificate&) = default;

 private:
  void add(const Monomial& m, const Scalar& c);
  Terms terms_;
};

// "x2^2 - x1^3"; "0" for the empty polynomial.
std::string to_string(const Certificate& c);

}  // namespace hkc
