#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>

#include "hkc/scalar.hpp"

namespace hkc {

using Exponent = std::int64_t;

// Used both as "order of the zero series" and "precision of a polynomial".
inline constexpr Exponent kInfinity = std::numeric_limits<Exponent>::max();
inline constexpr Exponent kExact = kInfinity;

// Saturating sum, so kInfinity absorbs.
constexpr Exponent add_exponents(Exponent a, Exponent b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b;
}

/// Truncated power series in one variable t with exact rational coefficients.
///
/// Coefficients are known for every exponent below precision(); a precision
/// of kExact means the series is a polynomial. Only nonzero coefficients are
/// stored and every stored exponent lies below the precision.
class PowerSeries {
 public:
  using Terms = std::map<Exponent, Scalar>;

  PowerSeries() = default;
  explicit PowerSeries(Terms terms, Exponent precision = kExact);

  static PowerSeries constant(const Scalar& c);
  static PowerSeries monomial(const Scalar& c, Exponent e, Exponent precision = kExact);
  static PowerSeries monomial(Exponent e) { return monomial(Scalar(1), e); }
  // O(t^d)
  static PowerSeries zero(Exponent precision) { return PowerSeries({}, precision); }

  const Terms& terms() const noexcept { return terms_; }
  Exponent precision() const noexcept { return precision_; }
  bool is_exact() const noexcept { return precision_ == kExact; }
  bool empty() const noexcept { return terms_.empty(); }

  // Least exponent with a nonzero coefficient; kInfinity for the exact zero.
  // Throws PrecisionError for an empty series with finite precision.
  Exponent order() const;
  // order() when determinate, otherwise the precision: v(f) >= this always.
  Exponent order_bound() const noexcept;
  // Largest stored exponent, -1 when empty.
  Exponent degree() const noexcept;

  Scalar coefficient(Exponent e) const;
  // Coefficient at order(); requires a nonempty series.
  const Scalar& leading_coefficient() const;

  bool is_monomial() const noexcept { return terms_.size() == 1; }

  PowerSeries operator-() const;
  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  Terms terms_;
  Exponent precision_ = kExact;
};

PowerSeries operator+(PowerSeries f, const PowerSeries& g);
PowerSeries operator-(PowerSeries f, const PowerSeries& g);
PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator*(const Scalar& c, const PowerSeries& f);

inline PowerSeries add(const PowerSeries& f, const PowerSeries& g) { return f + g; }
inline PowerSeries sub(const PowerSeries& f, const PowerSeries& g) { return f - g; }
inline PowerSeries mul(const PowerSeries& f, const PowerSeries& g) { return f * g; }
PowerSeries scale(const Scalar& c, const PowerSeries& f);
PowerSeries pow(const PowerSeries& f, unsigned exponent);

// Drops terms at exponents >= d and lowers the precision to d if needed.
PowerSeries with_precision(const PowerSeries& f, Exponent d);
// Polynomial part below t^d, marked exact.
PowerSeries truncate(const PowerSeries& f, Exponent d);
// Scaled so the lowest coefficient is 1.
PowerSeries monic(const PowerSeries& f);

// For exact inputs the result is computed to `precision`; otherwise to
// min(precision, input precision).
PowerSeries invert_unit(const PowerSeries& f, Exponent precision = kExact);
PowerSeries nth_root_unit(const PowerSeries& f, unsigned n, Exponent precision = kExact);

// f(g(t)); requires order(g) >= 1.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);
// r with s(r(t)) = t = r(s(t)); requires s = t + O(t^2).
PowerSeries revert(const PowerSeries& s, Exponent precision = kExact);

PowerSeries derivative(const PowerSeries& f);

// Canonical text: "2*t^19 + t^20", "1/2*t^3 - t^4 + O(t^10)", "0".
std::string to_string(const PowerSeries& f);
std::ostream& operator<<(std::ostream& os, const PowerSeries& f);

}  // namespace hkc
