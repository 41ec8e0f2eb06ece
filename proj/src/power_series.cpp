#include "hkc/power_series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hkc/errors.hpp"

namespace hkc {

PowerSeries::PowerSeries(Terms terms, Exponent precision)
    : terms_(std::move(terms)), precision_(precision) {
  if (precision_ < 0) throw std::invalid_argument("negative precision");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first < 0) throw std::invalid_argument("negative exponent");
    if (it->first >= precision_ || sgn(it->second) == 0) {
      it = terms_.erase(it);
    } else {
      it->second.canonicalize();
      ++it;
    }
  }
}

PowerSeries PowerSeries::constant(const Scalar& c) { return monomial(c, 0); }

PowerSeries PowerSeries::monomial(const Scalar& c, Exponent e, Exponent precision) {
  return PowerSeries(Terms{{e, c}}, precision);
}

Exponent PowerSeries::order() const {
  if (!terms_.empty()) return terms_.begin()->first;
  if (is_exact()) return kInfinity;
  throw PrecisionError("order below precision floor O(t^" + std::to_string(precision_) + ")");
}

Exponent PowerSeries::order_bound() const noexcept {
  return terms_.empty() ? precision_ : terms_.begin()->first;
}

Exponent PowerSeries::degree() const noexcept {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

Scalar PowerSeries::coefficient(Exponent e) const {
  if (e >= precision_) throw PrecisionError("coefficient of t^" + std::to_string(e) + " is unknown");
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

const Scalar& PowerSeries::leading_coefficient() const {
  if (terms_.empty()) throw PrecisionError("leading coefficient of an empty series");
  return terms_.begin()->second;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries result = *this;
  for (auto& [e, c] : result.terms_) c = -c;
  return result;
}

namespace {

template <typename Op>
void accumulate(PowerSeries::Terms& terms, Exponent& precision, const PowerSeries& other, Op op) {
  precision = std::min(precision, other.precision());
  terms.erase(terms.lower_bound(precision), terms.end());
  for (const auto& [e, c] : other.terms()) {
    if (e >= precision) break;
    auto [it, inserted] = terms.try_emplace(e, 0);
    op(it->second, c);
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

}  // namespace

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  accumulate(terms_, precision_, other, [](Scalar& a, const Scalar& b) { a += b; });
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  accumulate(terms_, precision_, other, [](Scalar& a, const Scalar& b) { a -= b; });
  return *this;
}

PowerSeries operator+(PowerSeries f, const PowerSeries& g) { return f += g; }
PowerSeries operator-(PowerSeries f, const PowerSeries& g) { return f -= g; }

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
  const Exponent precision = std::min(add_exponents(f.precision(), g.order_bound()),
                                      add_exponents(g.precision(), f.order_bound()));
  if (f.empty() || g.empty()) return PowerSeries::zero(precision);

  const Exponent low = f.order() + g.order();
  const Exponent high = std::min(f.degree() + g.degree(), precision - 1);
  if (high < low) return PowerSeries::zero(precision);

  // Dense accumulator over the reachable exponent window.
  std::vector<Scalar> buffer(static_cast<std::size_t>(high - low + 1));
  Scalar product;
  for (const auto& [ef, cf] : f.terms()) {
    if (ef + g.order() > high) break;
    for (const auto& [eg, cg] : g.terms()) {
      const Exponent e = ef + eg;
      if (e > high) break;
      mpq_mul(product.get_mpq_t(), cf.get_mpq_t(), cg.get_mpq_t());
      buffer[static_cast<std::size_t>(e - low)] += product;
    }
  }
  PowerSeries::Terms terms;
  for (std::size_t i = 0; i < buffer.size(); ++i) {
    if (sgn(buffer[i]) != 0) terms.emplace_hint(terms.end(), low + static_cast<Exponent>(i), std::move(buffer[i]));
  }
  return PowerSeries(std::move(terms), precision);
}

PowerSeries operator*(const Scalar& c, const PowerSeries& f) { return scale(c, f); }

PowerSeries scale(const Scalar& c, const PowerSeries& f) {
  if (sgn(c) == 0) return PowerSeries::zero(f.precision());
  PowerSeries::Terms terms;
  for (const auto& [e, coeff] : f.terms()) terms.emplace_hint(terms.end(), e, c * coeff);
  return PowerSeries(std::move(terms), f.precision());
}

PowerSeries pow(const PowerSeries& f, unsigned exponent) {
  PowerSeries result = PowerSeries::constant(1);
  PowerSeries base = f;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

PowerSeries with_precision(const PowerSeries& f, Exponent d) {
  if (d >= f.precision()) return f;
  PowerSeries::Terms terms(f.terms().begin(), f.terms().lower_bound(d));
  return PowerSeries(std::move(terms), d);
}

PowerSeries truncate(const PowerSeries& f, Exponent d) {
  if (d > f.precision()) throw PrecisionError("cannot truncate at t^" + std::to_string(d) + " beyond the known precision");
  PowerSeries::Terms terms(f.terms().begin(), f.terms().lower_bound(std::max<Exponent>(d, 0)));
  return PowerSeries(std::move(terms), kExact);
}

PowerSeries monic(const PowerSeries& f) {
  const Scalar inverse = 1 / f.leading_coefficient();
  return scale(inverse, f);
}

namespace {

Exponent target_precision(const PowerSeries& f, Exponent requested) {
  const Exponent precision = std::min(f.precision(), requested);
  if (precision == kExact) throw std::invalid_argument("an explicit precision is required for exact input");
  return precision;
}

void require_unit(const PowerSeries& f) {
  if (f.empty() || f.order() != 0) throw MathError("not a unit");
}

// Treats an approximation as a polynomial so the next Newton step is not
// capped by the precision it was computed at.
PowerSeries lift(const PowerSeries& f) { return PowerSeries(f.terms(), kExact); }

// Newton iterations double the number of correct coefficients per step.
std::vector<Exponent> newton_schedule(Exponent precision) {
  std::vector<Exponent> steps;
  for (Exponent p = precision; p > 1; p = (p + 1) / 2) steps.push_back(p);
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

PowerSeries invert_unit(const PowerSeries& f, Exponent precision) {
  require_unit(f);
  const Exponent target = target_precision(f, precision);
  if (target == 0) return PowerSeries::zero(0);
  PowerSeries g = PowerSeries::monomial(1 / f.leading_coefficient(), 0, 1);
  const PowerSeries two = PowerSeries::constant(2);
  for (Exponent p : newton_schedule(target)) {
    const PowerSeries fp = with_precision(f, p);
    const PowerSeries gp = lift(g);
    g = with_precision(gp * (two - fp * gp), p);
  }
  return g;
}

PowerSeries nth_root_unit(const PowerSeries& f, unsigned n, Exponent precision) {
  if (n == 0) throw std::invalid_argument("zeroth root");
  require_unit(f);
  if (n == 1) return precision == kExact ? f : with_precision(f, precision);
  const Exponent target = target_precision(f, precision);
  if (target == 0) return PowerSeries::zero(0);
  auto c0 = rational_root(f.leading_coefficient(), n);
  if (!c0) throw MathError("no rational n-th root of leading coefficient");

  // g <- g + (f / g^(n-1) - g) / n
  PowerSeries g = PowerSeries::monomial(*c0, 0, 1);
  const Scalar inv_n(1, n);
  for (Exponent p : newton_schedule(target)) {
    const PowerSeries gp = lift(g);
    const PowerSeries quotient = with_precision(f, p) * invert_unit(pow(gp, n - 1), p);
    g = with_precision(gp + scale(inv_n, quotient - gp), p);
  }
  return g;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  const Exponent g_order = g.order_bound();
  if (g_order < 1) throw MathError("inner series has order 0");

  // Unknown terms of f start at t^(prec_f * v(g)); a term c*g^e is known
  // up to prec_g + (e - 1) * v(g).
  Exponent precision = f.is_exact() ? kExact : f.precision() * g_order;
  for (const auto& [e, c] : f.terms()) {
    if (e == 0) continue;
    if (!g.is_exact()) precision = std::min(precision, g.precision() + (e - 1) * g_order);
    break;
  }

  PowerSeries result = PowerSeries::zero(precision);
  if (f.empty()) return result;
  PowerSeries power = PowerSeries::constant(1);
  Exponent current = 0;
  for (const auto& [e, c] : f.terms()) {
    if (precision != kExact && e * g_order >= precision) break;
    while (current < e) {
      power = power * g;
      if (precision != kExact) power = with_precision(power, precision);
      ++current;
    }
    result += scale(c, power);
  }
  return result;
}

PowerSeries revert(const PowerSeries& s, Exponent precision) {
  if (s.empty() || s.terms().begin()->first != 1) throw MathError("order != 1");
  if (s.leading_coefficient() != 1) throw MathError("linear coefficient != 1");
  const Exponent target = target_precision(s, precision);

  // Newton on s(r) - t = 0: r <- r - (s(r) - t) / s'(r).
  const PowerSeries t = PowerSeries::monomial(1);
  const PowerSeries ds = derivative(s);
  PowerSeries r = PowerSeries::monomial(1, 1, std::min<Exponent>(target, 2));
  for (Exponent p : newton_schedule(target)) {
    if (p <= 2) continue;
    const PowerSeries rp = lift(r);
    const PowerSeries residual = with_precision(compose(with_precision(s, p), rp), p) - t;
    const PowerSeries slope = with_precision(compose(with_precision(ds, p), rp), p);
    r = with_precision(rp - residual * invert_unit(slope, p), p);
  }
  if (target <= 2) r = with_precision(r, target);
  return r;
}

PowerSeries derivative(const PowerSeries& f) {
  PowerSeries::Terms terms;
  for (const auto& [e, c] : f.terms()) {
    if (e > 0) terms.emplace_hint(terms.end(), e - 1, c * e);
  }
  const Exponent precision = f.is_exact() ? kExact : std::max<Exponent>(f.precision() - 1, 0);
  return PowerSeries(std::move(terms), precision);
}

std::string to_string(const PowerSeries& f) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Scalar magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out << to_string(magnitude) << '*';
    out << 't';
    if (e != 1) out << '^' << e;
  }
  if (!f.is_exact()) {
    if (!first) out << " + ";
    out << "O(t^" << f.precision() << ')';
  } else if (first) {
    out << '0';
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& f) { return os << to_string(f); }

}  // namespace hkc
