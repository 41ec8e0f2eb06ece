#include "hkc/subring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hkc/errors.hpp"

namespace hkc {

Parametrization::Parametrization(std::vector<PowerSeries> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("parametrization needs at least one generator");
  for (const auto& g : generators_) {
    if (g.empty()) throw MathError("generator is zero or of indeterminate order: " + to_string(g));
    if (g.order() < 1) throw MathError("generator is a unit: " + to_string(g));
  }
}

Exponent Parametrization::precision() const {
  Exponent p = kExact;
  for (const auto& g : generators_) p = std::min(p, g.precision());
  return p;
}

Exponent Parametrization::max_exponent() const {
  Exponent e = 0;
  for (const auto& g : generators_) e = std::max(e, g.degree());
  return e;
}

std::vector<Exponent> Parametrization::orders() const {
  std::vector<Exponent> result;
  for (const auto& g : generators_) result.push_back(g.order());
  return result;
}

const PowerSeries& ReducedBasis::rep(Exponent key) const {
  auto it = reps_.find(key);
  if (it == reps_.end()) throw std::out_of_range("no representative at key " + std::to_string(key));
  return it->second;
}

std::set<Nat> ReducedBasis::keys() const {
  std::set<Nat> result;
  for (const auto& [k, r] : reps_) result.insert(result.end(), k);
  return result;
}

std::set<Nat> ReducedBasis::valuations() const {
  std::set<Nat> result;
  for (const auto& [k, r] : reps_) result.insert(result.end(), k - shift_);
  return result;
}

Exponent ReducedBasis::min_key() const { return reps_.empty() ? kInfinity : reps_.begin()->first; }

namespace {

struct EchelonRow {
  PowerSeries::Terms terms;
  Certificate certificate;
};

// terms -= c * row
void subtract_scaled(PowerSeries::Terms& terms, const PowerSeries::Terms& row, const Scalar& c) {
  Scalar product;
  for (const auto& [e, v] : row) {
    mpq_mul(product.get_mpq_t(), c.get_mpq_t(), v.get_mpq_t());
    auto [it, inserted] = terms.try_emplace(e, 0);
    it->second -= product;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

/// Reduced echelon table over exact rationals modulo t^precision.
class EchelonTable {
 public:
  EchelonTable(Exponent precision, bool track) : precision_(precision), track_(track) {}

  // Reduces f against the table and stores the monic remainder if nonzero.
  // Returns the stored row.
  std::optional<EchelonRow> insert(const PowerSeries& f, Certificate certificate) {
    if (f.precision() < precision_) {
      throw PrecisionError("input precision insufficient for requested D = " + std::to_string(precision_) +
                           " (known to O(t^" + std::to_string(f.precision()) + "))");
    }
    EchelonRow row{with_precision(f, precision_).terms(), std::move(certificate)};
    reduce_fully(row);
    if (row.terms.empty()) return std::nullopt;

    const Exponent key = row.terms.begin()->first;
    const Scalar inverse = 1 / row.terms.begin()->second;
    for (auto& [e, v] : row.terms) v *= inverse;
    if (track_) row.certificate = row.certificate.scaled(inverse);

    for (auto& [k, other] : rows_) {
      if (k >= key) break;
      auto it = other.terms.find(key);
      if (it == other.terms.end()) continue;
      const Scalar c = it->second;
      subtract_scaled(other.terms, row.terms, c);
      if (track_) other.certificate -= row.certificate.scaled(c);
    }
    rows_.emplace(key, row);
    return row;
  }

  void reduce_fully(EchelonRow& row) const {
    auto& terms = row.terms;
    for (auto it = terms.begin(); it != terms.end();) {
      auto match = rows_.find(it->first);
      if (match == rows_.end()) {
        ++it;
        continue;
      }
      const Exponent e = it->first;
      const Scalar c = it->second;
      subtract_scaled(terms, match->second.terms, c);
      if (track_) row.certificate -= match->second.certificate.scaled(c);
      it = terms.upper_bound(e);
    }
  }

  Exponent precision() const { return precision_; }
  std::map<Exponent, EchelonRow>& rows() { return rows_; }

 private:
  Exponent precision_;
  bool track_;
  std::map<Exponent, EchelonRow> rows_;
};

// Inserts the seeds, then closes the span under multiplication by each
// multiplier. Closure under the generators of a ring suffices: the span is
// then an R-module, so products of any two rows reduce to zero as well.
void close_under(EchelonTable& table, std::vector<EchelonRow> seeds, std::span<const PowerSeries> multipliers,
                 bool track) {
  std::deque<EchelonRow> work;
  const Exponent d = table.precision();
  for (auto& seed : seeds) {
    if (auto row = table.insert(PowerSeries(seed.terms, kExact), std::move(seed.certificate))) {
      work.push_back(std::move(*row));
    }
  }
  while (!work.empty()) {
    EchelonRow current = std::move(work.front());
    work.pop_front();
    const PowerSeries series(std::move(current.terms), d);
    for (std::size_t j = 0; j < multipliers.size(); ++j) {
      PowerSeries product = with_precision(multipliers[j] * series, d);
      Certificate certificate = track ? current.certificate.times_variable(j) : Certificate{};
      if (auto row = table.insert(product, std::move(certificate))) work.push_back(std::move(*row));
    }
  }
}

std::vector<EchelonRow> seed_rows(std::span<const PowerSeries> series, Exponent precision) {
  std::vector<EchelonRow> rows;
  for (const auto& s : series) {
    if (s.precision() < precision) {
      throw PrecisionError("input precision insufficient for requested D = " + std::to_string(precision) +
                           " (generator known to O(t^" + std::to_string(s.precision()) + "))");
    }
    rows.push_back({with_precision(s, precision).terms(), {}});
  }
  return rows;
}

}  // namespace

ReducedBasis build_basis(BasisKind kind, std::span<const PowerSeries> seeds, std::span<const PowerSeries> multipliers,
                         Exponent precision, Exponent shift) {
  if (precision < 0) throw std::invalid_argument("negative precision");
  EchelonTable table(precision, false);
  std::vector<EchelonRow> rows = seed_rows(seeds, precision);
  if (kind == BasisKind::kRing && precision > 0) rows.insert(rows.begin(), EchelonRow{{{0, Scalar(1)}}, {}});
  close_under(table, std::move(rows), multipliers, false);

  ReducedBasis basis;
  basis.kind_ = kind;
  basis.precision_ = precision;
  basis.shift_ = shift;
  basis.multipliers_.assign(multipliers.begin(), multipliers.end());
  for (auto& [key, row] : table.rows()) basis.reps_.emplace(key, PowerSeries(std::move(row.terms), precision));
  return basis;
}

Reduction reduce(const PowerSeries& f, const ReducedBasis& basis, std::optional<Exponent> limit) {
  const Exponent stop = std::min(limit.value_or(basis.precision()), basis.precision());
  if (limit && *limit > basis.precision()) {
    throw PrecisionError("insufficient precision: decision needs O(t^" + std::to_string(*limit) +
                         ") but the table is known to O(t^" + std::to_string(basis.precision()) + ")");
  }
  Reduction result{f, {}};
  PowerSeries& r = result.remainder;
  while (true) {
    if (r.empty()) {
      if (r.precision() < stop) {
        throw PrecisionError("precision exhausted: remainder is O(t^" + std::to_string(r.precision()) +
                             ") before reaching t^" + std::to_string(stop));
      }
      return result;
    }
    const Exponent e = r.order();
    if (e >= stop || !basis.contains(e)) return result;
    const Scalar c = r.leading_coefficient();
    r -= scale(c, basis.rep(e));
    result.used.emplace_back(e, c);
  }
}

ReducedBasis ring_closure(const Parametrization& p, Exponent precision) {
  const auto& gens = p.generators();
  return build_basis(BasisKind::kRing, gens, gens, precision, 0);
}

ReducedBasis ideal_closure(std::span<const PowerSeries> igens, const ReducedBasis& ring, Exponent precision,
                           Exponent shift) {
  if (igens.empty()) throw std::invalid_argument("ideal needs at least one generator");
  if (ring.kind() != BasisKind::kRing) throw std::invalid_argument("ideal closure needs a ring basis");
  return build_basis(BasisKind::kIdeal, igens, ring.multipliers(), precision, shift);
}

namespace {

Exponent exponent_gcd(const Parametrization& p) {
  Exponent g = 0;
  for (const auto& gen : p.generators()) {
    for (const auto& [e, c] : gen.terms()) g = std::gcd(g, e);
  }
  return g;
}

}  // namespace

RingAnalysis analyze_ring(const Parametrization& p, const AnalysisOptions& options) {
  const Exponent input_precision = p.precision();
  if (input_precision == kExact && exponent_gcd(p) > 1) {
    throw GcdError("generators have gcd > 1 up to precision: every exponent is divisible by " +
                   std::to_string(exponent_gcd(p)));
  }

  Exponent d = options.initial_precision.value_or(2 * (1 + p.max_exponent()));
  d = std::max<Exponent>(d, 2);
  d = std::min(d, input_precision);

  RingAnalysis analysis;
  while (true) {
    analysis.basis = ring_closure(p, d);
    try {
      analysis.semigroup = sg_from_value_set(analysis.basis.keys(), d - 1);
      break;
    } catch (const MathError& failure) {
      const bool gcd_failure = dynamic_cast<const GcdError*>(&failure) != nullptr;
      if (d >= input_precision) {
        throw PrecisionError("input precision insufficient: generators known to O(t^" +
                             std::to_string(input_precision) + ") do not certify the conductor");
      }
      if (d >= options.max_precision) {
        if (gcd_failure) {
          throw GcdError("generators have gcd > 1 up to precision " + std::to_string(d));
        }
        throw PrecisionError("precision cap " + std::to_string(options.max_precision) +
                             " reached before the conductor was certified");
      }
      d = std::min({2 * d, options.max_precision, input_precision});
    }
  }

  analysis.conductor = analysis.semigroup.conductor;
  analysis.multiplicity = analysis.semigroup.multiplicity();
  const Exponent required = analysis.conductor + 2 * analysis.multiplicity + 1;
  if (d < required) {
    if (required > input_precision) {
      throw PrecisionError("input precision insufficient: need O(t^" + std::to_string(required) + "), have O(t^" +
                           std::to_string(input_precision) + ")");
    }
    d = required;
    analysis.basis = ring_closure(p, d);
    analysis.semigroup = sg_from_value_set(analysis.basis.keys(), d - 1);
  }
  analysis.basis.set_conductor_hint(analysis.conductor);
  return analysis;
}

bool ring_member(const PowerSeries& f, const ReducedBasis& ring, Nat conductor) {
  if (ring.kind() != BasisKind::kRing) throw std::invalid_argument("ring membership needs a ring basis");
  const Reduction r = reduce(f, ring, conductor);
  return r.remainder.order_bound() >= conductor;
}

bool ideal_member(const PowerSeries& f, const ReducedBasis& ideal, Nat min_ideal, Nat conductor) {
  const Exponent limit = add_exponents(min_ideal, conductor);
  if (f.is_exact() && f.empty()) return true;
  const Reduction r = reduce(f, ideal, limit);
  return r.remainder.order_bound() >= limit;
}

std::vector<std::pair<Nat, PowerSeries>> ideal_min_generators(const ReducedBasis& ideal,
                                                               const ReducedBasis& m_ideal, Nat conductor) {
  const Exponent needed = add_exponents(m_ideal.min_key(), conductor);
  if (ideal.precision() < needed || m_ideal.precision() < needed) {
    throw PrecisionError("insufficient precision: tables must be known past min(mI) + c = " +
                         std::to_string(needed));
  }
  std::vector<std::pair<Nat, PowerSeries>> result;
  for (const auto& [key, rep] : ideal.reps()) {
    if (!m_ideal.contains(key)) result.emplace_back(key - ideal.shift(), rep);
  }
  return result;
}

CertifiedTable::CertifiedTable(std::span<const PowerSeries> xs, Exponent precision) : precision_(precision) {
  EchelonTable table(precision, true);
  std::vector<EchelonRow> seeds = seed_rows(xs, precision);
  for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i].certificate = Certificate::variable(i);
  if (precision > 0) seeds.insert(seeds.begin(), EchelonRow{{{0, Scalar(1)}}, Certificate::constant(1)});
  close_under(table, std::move(seeds), xs, true);
  for (auto& [key, row] : table.rows()) {
    rows_.emplace(key, Row{PowerSeries(std::move(row.terms), precision), std::move(row.certificate)});
  }
}

std::optional<Certificate> CertifiedTable::express(const PowerSeries& f, Exponent limit) const {
  if (limit > precision_) throw PrecisionError("insufficient precision for the requested split level");
  Certificate expression;
  PowerSeries r = f;
  while (true) {
    if (r.empty()) {
      if (r.precision() < limit) throw PrecisionError("insufficient precision: element known to O(t^" +
                                                      std::to_string(r.precision()) + ")");
      return expression;
    }
    const Exponent e = r.order();
    if (e >= limit) return expression;
    auto row = rows_.find(e);
    if (row == rows_.end()) return std::nullopt;
    const Scalar c = r.leading_coefficient();
    r -= scale(c, row->second.series);
    expression += row->second.certificate.scaled(c);
  }
}

}  // namespace hkc
