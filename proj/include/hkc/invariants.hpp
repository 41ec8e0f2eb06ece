#pragma once

#include <optional>
#include <vector>

#include "hkc/certificate.hpp"
#include "hkc/power_series.hpp"
#include "hkc/semigroup.hpp"
#include "hkc/subring.hpp"

namespace hkc {

/// Herzog–Kunz sequence a1 < ... < an = v(m) \ v(m^2) with elements x_i of
/// R of valuation a_i.
struct HKProfile {
  std::vector<Nat> sequence;
  std::vector<PowerSeries> generators;
  // Filled by hk_generators: y_{source[i]} = x_i + z_i(x_1, ..., x_{i-1}).
  std::vector<Certificate> certificates;
  std::vector<std::size_t> source;

  std::size_t size() const noexcept { return sequence.size(); }
  Nat last() const { return sequence.back(); }
};

/// Everything derived from one parametrization: the ring table with its
/// certified conductor and the tables of m and m^2 at the same precision.
struct AnalyzedRing {
  Parametrization parametrization;
  RingAnalysis ring;
  ReducedBasis m;
  ReducedBasis m2;
  HKProfile hk;

  Nat conductor() const noexcept { return ring.conductor; }
  Nat multiplicity() const noexcept { return ring.multiplicity; }
  Exponent precision() const noexcept { return ring.basis.precision(); }

  bool contains(const PowerSeries& f) const { return ring_member(f, ring.basis, conductor()); }
  // m^2 membership; min(m^2) = 2 * a1.
  bool in_m2(const PowerSeries& f) const { return ideal_member(f, m2, m2.min_key(), conductor()); }
};

AnalyzedRing analyze(const Parametrization& p, const AnalysisOptions& options = {});

Nat multiplicity(const ReducedBasis& ring);
NumericalSemigroup value_semigroup(const ReducedBasis& ring, Nat conductor);

struct MaximalIdealTables {
  ReducedBasis m;
  ReducedBasis m2;
};
// Tables of m = (y_i) and m^2 = (y_i y_j) at the precision of the ring table.
MaximalIdealTables maximal_ideal_tables(const Parametrization& p, const RingAnalysis& ring);

// Needs tables certified up to conductor + 2 * a1 + 1.
HKProfile hk_sequence(const MaximalIdealTables& tables, const RingAnalysis& ring);

inline std::size_t embedding_dimension(const HKProfile& hk) { return hk.size(); }

// True iff the conductor ideal lies in m^2, i.e. a_n < c_R.
inline bool conductor_in_msquare(const HKProfile& hk, Nat conductor) { return hk.last() < conductor; }

struct ReducedType {
  Nat s = 0;
  // Non-members of the window [max(0, c - a1), c - 1].
  std::vector<Nat> b_list;
};
ReducedType reduced_type(const NumericalSemigroup& v, Nat conductor, Nat multiplicity);

struct RingReport {
  Parametrization parametrization;
  Nat multiplicity = 0;
  NumericalSemigroup value_semigroup;
  Nat conductor_degree = 0;
  HKProfile hk;
  std::size_t embedding_dimension = 0;
  bool conductor_in_m2 = false;
  ReducedType reduced_type;
  Exponent precision_used = 0;
};
RingReport make_report(const AnalyzedRing& ring);

}  // namespace hkc
