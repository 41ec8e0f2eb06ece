#include "hkc/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "hkc/errors.hpp"

namespace hkc {

namespace {

// f / t^k for f divisible by t^k.
PowerSeries shift_down(const PowerSeries& f, Exponent k) {
  PowerSeries::Terms terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_hint(terms.end(), e - k, c);
  return PowerSeries(std::move(terms), f.is_exact() ? kExact : f.precision() - k);
}

}  // namespace

Normalization normalize_parameter(const Parametrization& p, const AnalysisOptions& options) {
  const auto orders = p.orders();
  const std::size_t pivot = static_cast<std::size_t>(std::min_element(orders.begin(), orders.end()) - orders.begin());
  const PowerSeries& y = p[pivot];
  const Exponent a1 = orders[pivot];
  const PowerSeries t = PowerSeries::monomial(1);

  // y = c * t^a1 * u with u(0) = 1.
  const Scalar c = y.leading_coefficient();
  const PowerSeries unit = scale(1 / c, shift_down(y, a1));
  if (unit == PowerSeries::constant(1)) {
    std::vector<PowerSeries> gens = p.generators();
    gens[pivot] = PowerSeries::monomial(a1);
    return Normalization{Parametrization(std::move(gens)), t, t, pivot};
  }

  const AnalyzedRing ring = analyze(p, options);
  const Exponent precision = std::max(ring.precision(), p.max_exponent() + 1);
  if (p.precision() < precision) {
    throw PrecisionError("input precision insufficient for normalization: need O(t^" + std::to_string(precision) +
                         ")");
  }

  // tau = t * u^(1/a1), so y = c * tau^a1.
  const PowerSeries substitution = t * nth_root_unit(unit, static_cast<unsigned>(a1), precision);
  const PowerSeries inverse = revert(substitution, precision);

  std::vector<PowerSeries> gens;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == pivot) {
      gens.push_back(PowerSeries::monomial(a1));
      continue;
    }
    // Tails of order >= precision > c_R lie in the conductor.
    gens.push_back(truncate(with_precision(compose(p[i], inverse), precision), precision));
  }
  return Normalization{Parametrization(std::move(gens)), substitution, inverse, pivot};
}

Parametrization monomialize_tail(const HKProfile& hk, Nat conductor) {
  std::vector<PowerSeries> gens;
  for (std::size_t i = 0; i < hk.size(); ++i) {
    gens.push_back(hk.sequence[i] >= conductor ? PowerSeries::monomial(hk.sequence[i]) : hk.generators[i]);
  }
  return Parametrization(std::move(gens));
}

Split split_element(const PowerSeries& f, Exponent level, std::span<const PowerSeries> xs) {
  std::size_t used = 0;
  while (used < xs.size() && xs[used].order() <= level) ++used;
  const auto active = xs.first(used);

  if (f.order_bound() > level) return Split{Certificate{}, f};
  const CertifiedTable table(active, level + 1);
  auto expression = table.express(f, level + 1);
  if (!expression) throw MathError("element is not in the ring generated by the given elements");
  PowerSeries g = f - expression->evaluate(active);
  return Split{std::move(*expression), std::move(g)};
}

Split split_element(const PowerSeries& f, Exponent level, const HKProfile& hk) {
  return split_element(f, level, std::span<const PowerSeries>(hk.generators));
}

HKProfile hk_generators(const Parametrization& p, const AnalysisOptions& options) {
  const AnalyzedRing ring = analyze(p, options);
  const auto& a = ring.hk.sequence;
  const std::size_t n = a.size();
  if (p.size() != n) {
    throw HypothesisError("generators not minimal: " + std::to_string(p.size()) +
                          " generators for embedding dimension " + std::to_string(n));
  }

  std::vector<PowerSeries> parts = p.generators();
  std::vector<Certificate> certificates(n);
  std::vector<std::size_t> source(n);
  std::iota(source.begin(), source.end(), 0);

  // Moves the candidate of valuation a_k with the smallest input index to k.
  auto promote = [&](std::size_t k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (parts[i].order_bound() == a[k] && !parts[i].empty() && (best == n || source[i] < source[best])) best = i;
    }
    if (best == n) {
      throw HypothesisError("generators not minimal: no remaining generator attains a_" + std::to_string(k + 1) +
                            " = " + std::to_string(a[k]));
    }
    std::swap(parts[k], parts[best]);
    std::swap(certificates[k], certificates[best]);
    std::swap(source[k], source[best]);
  };

  promote(0);
  for (std::size_t k = 1; k < n; ++k) {
    const std::span<const PowerSeries> xs(parts.data(), k);
    const CertifiedTable table(xs, a[k]);
    for (std::size_t i = k; i < n; ++i) {
      if (parts[i].order_bound() >= a[k]) continue;
      auto expression = table.express(parts[i], a[k]);
      if (!expression) {
        throw HypothesisError("generators not minimal: generator " + std::to_string(source[i] + 1) +
                              " has a value below a_" + std::to_string(k + 1) + " outside the smaller subalgebra");
      }
      parts[i] -= expression->evaluate(xs);
      certificates[i] += *expression;
    }
    promote(k);
  }

  HKProfile hk;
  hk.sequence = a;
  hk.generators = std::move(parts);
  hk.certificates = std::move(certificates);
  hk.source = std::move(source);
  return hk;
}

Exponent unit_order(const PowerSeries& x) {
  if (x.empty()) throw PrecisionError("unit order of a series without known terms");
  auto it = std::next(x.terms().begin());
  if (it != x.terms().end()) return it->first - x.order();
  if (x.is_exact()) return kInfinity;
  throw PrecisionError("unit order undetermined below O(t^" + std::to_string(x.precision()) + ")");
}

Parametrization mm42_substitution(const Parametrization& p, const HKProfile& hk, Nat conductor, std::size_t i,
                                  std::size_t d, ReplaceTarget target) {
  if (p.orders() != hk.sequence) {
    throw HypothesisError("hypotheses not satisfied: generators do not have the Herzog-Kunz valuations");
  }
  const std::size_t n = p.size();
  std::vector<std::string> failures;
  if (i < 2 || i > n) failures.push_back("2 <= i <= n");
  if (d < 2 || d > n) failures.push_back("2 <= d <= n");
  if (!failures.empty()) {
    throw HypothesisError("hypotheses not satisfied: " + failures.front());
  }

  const Exponent od = unit_order(p[d - 1]);
  const Exponent oi = unit_order(p[i - 1]);
  const Nat ai = hk.sequence[i - 1];
  if (od == kInfinity) failures.push_back("o(alpha_d) < infinity");
  if (od != kInfinity && od + ai < conductor) {
    failures.push_back("o(alpha_d) + a_i >= c_R (" + std::to_string(od) + " + " + std::to_string(ai) + " < " +
                       std::to_string(conductor) + ")");
  }
  if (target == ReplaceTarget::kI && od > oi) failures.push_back("o(alpha_d) <= o(alpha_i)");
  if (target == ReplaceTarget::kD && i > d) failures.push_back("i <= d");
  if (!failures.empty()) {
    std::ostringstream message;
    message << "hypotheses not satisfied:";
    for (const auto& f : failures) message << ' ' << f << ';';
    throw HypothesisError(message.str());
  }

  const std::size_t replaced = (target == ReplaceTarget::kI ? i : d) - 1;
  std::vector<PowerSeries> gens = p.generators();
  gens[replaced] = PowerSeries::monomial(hk.sequence[replaced]);
  return Parametrization(std::move(gens));
}

Parametrization truncate_at(const Parametrization& p, Exponent d) {
  std::vector<PowerSeries> gens;
  for (const auto& g : p.generators()) gens.push_back(truncate(g, d));
  return Parametrization(std::move(gens));
}

Truncation truncate_parametrization(const Parametrization& p, const HKProfile& hk, Nat conductor) {
  const Exponent d = std::max<Exponent>(hk.last() + 1, conductor);
  return Truncation{truncate_at(p, d), d};
}

bool rings_equal(const AnalyzedRing& ring, const Parametrization& other) {
  for (const auto& g : other.generators()) {
    if (!ring.contains(g)) return false;
  }
  // other ⊆ R. Equal value sets on a window that certifies the conductor
  // force equality of the rings.
  const ReducedBasis other_basis = ring_closure(other, ring.precision());
  if (other_basis.keys() != ring.ring.basis.keys()) return false;
  for (const auto& g : ring.parametrization.generators()) {
    if (!ring_member(g, other_basis, ring.conductor())) return false;
  }
  return true;
}

bool rings_equal(const Parametrization& p, const Parametrization& q, const AnalysisOptions& options) {
  return rings_equal(analyze(p, options), q);
}

bool perturb_check(const Parametrization& p, const Parametrization& perturbed, const AnalysisOptions& options) {
  const AnalyzedRing ring = analyze(p, options);
  for (std::size_t i = 0; i < perturbed.size(); ++i) {
    if (!ring.contains(perturbed[i])) {
      throw HypothesisError("perturbation not inside R: generator " + std::to_string(i + 1));
    }
  }
  return rings_equal(ring, perturbed);
}

Parametrization drop_redundant(const Parametrization& p, const AnalysisOptions& options) {
  const AnalyzedRing ring = analyze(p, options);
  std::vector<PowerSeries> current = p.generators();
  for (std::size_t i = current.size(); i-- > 0;) {
    if (current.size() == 1) break;
    std::vector<PowerSeries> candidate = current;
    candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
    if (rings_equal(ring, Parametrization(candidate))) current = std::move(candidate);
  }
  return Parametrization(std::move(current));
}

std::optional<TorsionWitness> torsion_witness(const Parametrization& p, const AnalysisOptions& options) {
  const AnalyzedRing original = analyze(p, options);
  if (conductor_in_msquare(original.hk, original.conductor())) return std::nullopt;

  const Normalization normalized = normalize_parameter(p, options);
  const AnalyzedRing ring = analyze(normalized.parametrization, options);
  Parametrization hk_param = monomialize_tail(ring.hk, ring.conductor());
  std::vector<PowerSeries> gens = hk_param.generators();
  gens.front() = PowerSeries::monomial(ring.hk.sequence.front());
  hk_param = Parametrization(std::move(gens));
  if (!rings_equal(ring, hk_param)) throw MathError("normalized Herzog-Kunz generators do not generate R");

  TorsionWitness w{.a1 = ring.hk.sequence.front(),
                   .an = ring.hk.last(),
                   .x1 = hk_param.generators().front(),
                   .xn = hk_param.generators().back(),
                   .omega_text = {},
                   .image_in_normalization = {},
                   .substitution = normalized.substitution,
                   .hk_parametrization = hk_param,
                   .nonvanishing_note = "nonzero torsion in the universally finite differential module (known result)"};
  w.omega_text = std::to_string(w.an) + "*x" + std::to_string(hk_param.size()) + "*dx1 - " + std::to_string(w.a1) +
                 "*x1*dx" + std::to_string(hk_param.size());
  w.image_in_normalization =
      scale(Scalar(w.an), w.xn * derivative(w.x1)) - scale(Scalar(w.a1), w.x1 * derivative(w.xn));
  if (!w.image_in_normalization.empty()) throw MathError("torsion witness image is not zero");
  return w;
}

ExtensionReport extend_by_conductor(const Parametrization& p, const AnalysisOptions& options) {
  const AnalyzedRing original = analyze(p, options);
  if (!conductor_in_msquare(original.hk, original.conductor())) {
    throw HypothesisError("hypothesis conductor ⊆ m^2 fails (a_n = " + std::to_string(original.hk.last()) +
                          " >= c_R = " + std::to_string(original.conductor()) + "); use torsion instead");
  }

  const Normalization normalized = normalize_parameter(p, options);
  const AnalyzedRing ring = analyze(normalized.parametrization, options);
  const Nat c = ring.conductor();
  const Nat a1 = ring.multiplicity();
  const auto& a = ring.hk.sequence;

  ExtensionReport report{.s_generators = normalized.parametrization};
  const ReducedType rt = reduced_type(ring.ring.semigroup, c, a1);
  report.b_list = rt.b_list;
  report.s = rt.s;

  std::vector<PowerSeries> s_gens = normalized.parametrization.generators();
  for (Nat b : rt.b_list) s_gens.push_back(PowerSeries::monomial(b));
  report.s_generators = Parametrization(std::move(s_gens));

  const AnalyzedRing s_ring = analyze(report.s_generators, options);
  report.conductor_s = s_ring.conductor();
  report.semigroup_s = s_ring.ring.semigroup;
  const auto& sa = s_ring.hk.sequence;

  report.i0 = static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [&](Nat x) { return x < c - a1; }));
  report.conductor_drop_holds = report.conductor_s == c - a1;
  report.length_holds = sa.size() == a.size() + rt.b_list.size();
  report.prefix_holds = sa.size() >= report.i0 && std::equal(a.begin(), a.begin() + report.i0, sa.begin());

  std::vector<Nat> expected_tail(a.begin() + report.i0, a.end());
  expected_tail.insert(expected_tail.end(), rt.b_list.begin(), rt.b_list.end());
  std::sort(expected_tail.begin(), expected_tail.end());
  const std::vector<Nat> tail(sa.begin() + std::min(report.i0, sa.size()), sa.end());
  report.tail_set_holds = tail == expected_tail;

  report.hk_s.sequence = sa;
  for (std::size_t j = 0; j < sa.size(); ++j) {
    report.hk_s.generators.push_back(j < report.i0 ? ring.hk.generators[j] : PowerSeries::monomial(sa[j]));
  }
  report.chosen_generate = rings_equal(s_ring, Parametrization(report.hk_s.generators));
  return report;
}

}  // namespace hkc
