#include "hkc/invariants.hpp"

#include <algorithm>
#include <string>

#include "hkc/errors.hpp"

namespace hkc {

Nat multiplicity(const ReducedBasis& ring) {
  auto it = ring.reps().upper_bound(0);
  if (it == ring.reps().end()) throw PrecisionError("no nonzero value below the working precision");
  return it->first;
}

NumericalSemigroup value_semigroup(const ReducedBasis& ring, Nat conductor) {
  NumericalSemigroup s = sg_from_value_set(ring.keys(), ring.precision() - 1);
  if (s.conductor != conductor) {
    throw MathError("value set conductor " + std::to_string(s.conductor) + " disagrees with " +
                    std::to_string(conductor));
  }
  return s;
}

MaximalIdealTables maximal_ideal_tables(const Parametrization& p, const RingAnalysis& ring) {
  const auto& gens = p.generators();
  std::vector<PowerSeries> products;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) products.push_back(gens[i] * gens[j]);
  }
  const Exponent d = ring.basis.precision();
  return {ideal_closure(gens, ring.basis, d), ideal_closure(products, ring.basis, d)};
}

HKProfile hk_sequence(const MaximalIdealTables& tables, const RingAnalysis& ring) {
  const Exponent needed = ring.conductor + 2 * ring.multiplicity + 1;
  if (tables.m.precision() < needed || tables.m2.precision() < needed) {
    throw PrecisionError("insufficient precision: m and m^2 must be known to O(t^" + std::to_string(needed) + ")");
  }
  HKProfile hk;
  for (const auto& [key, rep] : tables.m.reps()) {
    if (tables.m2.contains(key)) continue;
    hk.sequence.push_back(key);
    // rep differs from an element of m by O(t^D) with D > c_R, and such
    // tails lie in the conductor, so the polynomial part is itself in m.
    hk.generators.push_back(truncate(rep, rep.precision()));
  }
  return hk;
}

AnalyzedRing analyze(const Parametrization& p, const AnalysisOptions& options) {
  RingAnalysis ring = analyze_ring(p, options);
  MaximalIdealTables tables = maximal_ideal_tables(p, ring);
  HKProfile hk = hk_sequence(tables, ring);
  return AnalyzedRing{p, std::move(ring), std::move(tables.m), std::move(tables.m2), std::move(hk)};
}

ReducedType reduced_type(const NumericalSemigroup& v, Nat conductor, Nat multiplicity) {
  ReducedType result;
  for (Nat x = std::max<Nat>(0, conductor - multiplicity); x < conductor; ++x) {
    if (!sg_member(v, x)) result.b_list.push_back(x);
  }
  result.s = static_cast<Nat>(result.b_list.size());
  return result;
}

RingReport make_report(const AnalyzedRing& ring) {
  RingReport report{ring.parametrization};
  report.multiplicity = ring.multiplicity();
  report.value_semigroup = ring.ring.semigroup;
  report.conductor_degree = ring.conductor();
  report.hk = ring.hk;
  report.embedding_dimension = embedding_dimension(ring.hk);
  report.conductor_in_m2 = conductor_in_msquare(ring.hk, ring.conductor());
  report.reduced_type = reduced_type(ring.ring.semigroup, ring.conductor(), ring.multiplicity());
  report.precision_used = ring.precision();
  return report;
}

}  // namespace hkc
