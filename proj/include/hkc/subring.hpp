#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "hkc/certificate.hpp"
#include "hkc/power_series.hpp"
#include "hkc/semigroup.hpp"

namespace hkc {

/// Generators y1, ..., yn of R = k[[y1, ..., yn]] inside k[[t]].
///
/// Generators keep the scaling they were given with; every generator has a
/// determinate order >= 1.
class Parametrization {
 public:
  explicit Parametrization(std::vector<PowerSeries> generators);

  const std::vector<PowerSeries>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const PowerSeries& operator[](std::size_t i) const { return generators_[i]; }

  // Smallest generator precision (kExact when all are polynomials).
  Exponent precision() const;
  Exponent max_exponent() const;
  std::vector<Exponent> orders() const;

  friend bool operator==(const Parametrization&, const Parametrization&) = default;

 private:
  std::vector<PowerSeries> generators_;
};

enum class BasisKind { kRing, kIdeal };

/// Valuation-indexed table of monic representatives of a ring or ideal,
/// known modulo t^precision.
///
/// Rows are in reduced echelon form: the row at key v is t^v plus terms at
/// exponents that are not keys. That makes the table a canonical form of the
/// subspace it spans. For an ideal with shift e the represented object is
/// t^-e times the span, so valuations are keys minus e.
class ReducedBasis {
 public:
  BasisKind kind() const noexcept { return kind_; }
  Exponent precision() const noexcept { return precision_; }
  Exponent shift() const noexcept { return shift_; }
  std::optional<Nat> conductor_hint() const noexcept { return conductor_hint_; }
  void set_conductor_hint(Nat c) { conductor_hint_ = c; }

  const std::map<Exponent, PowerSeries>& reps() const noexcept { return reps_; }
  bool contains(Exponent key) const { return reps_.contains(key); }
  const PowerSeries& rep(Exponent key) const;
  std::set<Nat> keys() const;
  // Keys minus shift.
  std::set<Nat> valuations() const;
  // Least key; kInfinity for an empty table.
  Exponent min_key() const;

  // Series the table is closed under multiplication by (the ring generators).
  const std::vector<PowerSeries>& multipliers() const noexcept { return multipliers_; }

 private:
  friend ReducedBasis build_basis(BasisKind, std::span<const PowerSeries>, std::span<const PowerSeries>,
                                  Exponent, Exponent);
  BasisKind kind_ = BasisKind::kRing;
  Exponent precision_ = 0;
  Exponent shift_ = 0;
  std::optional<Nat> conductor_hint_;
  std::map<Exponent, PowerSeries> reps_;
  std::vector<PowerSeries> multipliers_;
};

struct Reduction {
  PowerSeries remainder;
  // (key, coefficient) of every row subtracted, in order.
  std::vector<std::pair<Exponent, Scalar>> used;
};

// Cancels the lowest term against the row at its valuation until that
// valuation is not a key or reaches `limit` (default: the basis precision).
// Throws PrecisionError when the remainder runs out of known coefficients
// before reaching `limit`.
Reduction reduce(const PowerSeries& f, const ReducedBasis& basis, std::optional<Exponent> limit = std::nullopt);

// Table of R modulo t^precision. Throws PrecisionError when a generator is
// known to less than `precision`.
ReducedBasis ring_closure(const Parametrization& p, Exponent precision);

// Span of igens * R modulo t^precision; igens are given multiplied by t^shift.
ReducedBasis ideal_closure(std::span<const PowerSeries> igens, const ReducedBasis& ring, Exponent precision,
                           Exponent shift = 0);

struct AnalysisOptions {
  std::optional<Exponent> initial_precision;
  Exponent max_precision = 16384;
};

struct RingAnalysis {
  ReducedBasis basis;
  Nat conductor = 0;
  Nat multiplicity = 0;
  NumericalSemigroup semigroup;
};

// Adaptive driver: doubles the working precision until the conductor is
// certified, then raises it to at least conductor + 2 * multiplicity + 1.
RingAnalysis analyze_ring(const Parametrization& p, const AnalysisOptions& options = {});

// f in R iff it reduces to something of order >= conductor.
bool ring_member(const PowerSeries& f, const ReducedBasis& ring, Nat conductor);

// f in J iff it reduces to something of order >= min_J + conductor.
bool ideal_member(const PowerSeries& f, const ReducedBasis& ideal, Nat min_ideal, Nat conductor);

// Valuations of v(I) \ v(mI) with the rows of I at those keys.
std::vector<std::pair<Nat, PowerSeries>> ideal_min_generators(const ReducedBasis& ideal,
                                                               const ReducedBasis& m_ideal, Nat conductor);

/// Reduced table of the subalgebra k[[x1, ..., xm]] whose rows also record
/// their expression as a polynomial in the xi.
class CertifiedTable {
 public:
  struct Row {
    PowerSeries series;
    Certificate certificate;
  };

  CertifiedTable(std::span<const PowerSeries> xs, Exponent precision);

  Exponent precision() const noexcept { return precision_; }
  const std::map<Exponent, Row>& rows() const noexcept { return rows_; }

  // Expression p in the xi with v(f - p) >= limit; nullopt when some order
  // below limit has no row.
  std::optional<Certificate> express(const PowerSeries& f, Exponent limit) const;

 private:
  Exponent precision_;
  std::map<Exponent, Row> rows_;
};

}  // namespace hkc
