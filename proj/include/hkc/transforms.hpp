#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkc/certificate.hpp"
#include "hkc/invariants.hpp"
#include "hkc/power_series.hpp"
#include "hkc/subring.hpp"

namespace hkc {

struct Normalization {
  Parametrization parametrization;
  // New parameter as a series in the old one: tau = s(t).
  PowerSeries substitution;
  // t = r(tau), the reversion of s.
  PowerSeries inverse;
  // Position of the generator that became t^a1.
  std::size_t pivot = 0;
};

// Changes the parameter so the first generator of minimal order becomes
// exactly t^a1. Other generators are re-expanded in the new parameter and
// truncated where the tail lies in the conductor.
Normalization normalize_parameter(const Parametrization& p, const AnalysisOptions& options = {});

// HK generators with every x_i of valuation >= c_R replaced by t^{a_i}.
Parametrization monomialize_tail(const HKProfile& hk, Nat conductor);

// y_i = x_i + z_i with v(x_i) = a_i and z_i a polynomial in x_1..x_{i-1}.
// The input must minimally generate m.
HKProfile hk_generators(const Parametrization& p, const AnalysisOptions& options = {});

struct Split {
  Certificate p;  // polynomial in the supplied xs
  PowerSeries g;  // f - p(xs), of order > level
};

// Writes f = p(x_1, ..., x_i0) + g with v(g) > level, where x_1..x_i0 are the
// leading xs of order <= level.
Split split_element(const PowerSeries& f, Exponent level, std::span<const PowerSeries> xs);
Split split_element(const PowerSeries& f, Exponent level, const HKProfile& hk);

// v(x / (c t^v(x)) - 1); kInfinity for a monomial.
Exponent unit_order(const PowerSeries& x);

enum class ReplaceTarget {
  kI,  // replace x_i; needs o(alpha_d) <= o(alpha_i)
  kD,  // replace x_d; needs i <= d
};

// `p` must consist of HK generators in sequence order; i and d are 1-based.
Parametrization mm42_substitution(const Parametrization& p, const HKProfile& hk, Nat conductor, std::size_t i,
                                  std::size_t d, ReplaceTarget target);

struct Truncation {
  Parametrization parametrization;
  Exponent degree = 0;
};

// Truncates every generator at t^d, d = max(a_n + 1, c_R).
Truncation truncate_parametrization(const Parametrization& p, const HKProfile& hk, Nat conductor);
Parametrization truncate_at(const Parametrization& p, Exponent d);

bool rings_equal(const AnalyzedRing& ring, const Parametrization& other);
bool rings_equal(const Parametrization& p, const Parametrization& q, const AnalysisOptions& options = {});

// Throws HypothesisError when some perturbed generator is not in R.
bool perturb_check(const Parametrization& p, const Parametrization& perturbed, const AnalysisOptions& options = {});

Parametrization drop_redundant(const Parametrization& p, const AnalysisOptions& options = {});

struct TorsionWitness {
  Nat a1 = 0;
  Nat an = 0;
  PowerSeries x1;
  PowerSeries xn;
  std::string omega_text;
  PowerSeries image_in_normalization;
  PowerSeries substitution;
  Parametrization hk_parametrization;
  // Nonvanishing in the universally finite differential module is a known
  // result; only its preconditions and the zero image are checked here.
  std::string nonvanishing_note;
};

// nullopt when the conductor lies in m^2.
std::optional<TorsionWitness> torsion_witness(const Parametrization& p, const AnalysisOptions& options = {});

struct ExtensionReport {
  std::vector<Nat> b_list;
  Nat s = 0;
  Parametrization s_generators;
  Nat conductor_s = 0;
  NumericalSemigroup semigroup_s;
  HKProfile hk_s;
  std::size_t i0 = 0;
  bool conductor_drop_holds = false;  // c_S = c_R - a1
  bool length_holds = false;          // |hk_S| = n + s
  bool prefix_holds = false;          // leading i0 values agree with R
  bool tail_set_holds = false;        // remaining values are {a_{i0+1..n}} u b_list
  bool chosen_generate = false;       // chosen generators give S
};

// Requires the conductor to lie in m^2; throws HypothesisError otherwise.
ExtensionReport extend_by_conductor(const Parametrization& p, const AnalysisOptions& options = {});

}  // namespace hkc
