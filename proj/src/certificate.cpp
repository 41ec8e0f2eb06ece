#include "hkc/certificate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hkc {

namespace {

void trim(Certificate::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

// Higher-indexed variables first, then by descending exponent.
bool display_before(const Certificate::Monomial& a, const Certificate::Monomial& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = n; i-- > 0;) {
    const unsigned ea = i < a.size() ? a[i] : 0;
    const unsigned eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

}  // namespace

Certificate Certificate::constant(const Scalar& c) { return monomial({}, c); }

Certificate Certificate::variable(std::size_t index) {
  Monomial m(index + 1, 0);
  m[index] = 1;
  return monomial(std::move(m));
}

Certificate Certificate::monomial(Monomial exponents, const Scalar& c) {
  Certificate result;
  trim(exponents);
  result.add(exponents, c);
  return result;
}

unsigned Certificate::degree() const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, std::accumulate(m.begin(), m.end(), 0u));
  return best;
}

std::size_t Certificate::arity() const {
  std::size_t best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.size());
  return best;
}

void Certificate::add(const Monomial& m, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, 0);
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Certificate& Certificate::operator+=(const Certificate& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

Certificate& Certificate::operator-=(const Certificate& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

Certificate Certificate::scaled(const Scalar& c) const {
  Certificate result;
  if (sgn(c) == 0) return result;
  for (const auto& [m, coeff] : terms_) result.terms_.emplace_hint(result.terms_.end(), m, coeff * c);
  return result;
}

Certificate Certificate::times_variable(std::size_t index) const {
  Certificate result;
  for (const auto& [m, c] : terms_) {
    Monomial shifted = m;
    if (shifted.size() <= index) shifted.resize(index + 1, 0);
    ++shifted[index];
    result.terms_.emplace(std::move(shifted), c);
  }
  return result;
}

PowerSeries Certificate::evaluate(std::span<const PowerSeries> variables) const {
  if (arity() > variables.size()) throw std::invalid_argument("certificate uses more variables than supplied");
  // powers[i][k] = variables[i]^k, built on demand.
  std::vector<std::vector<PowerSeries>> powers(variables.size());
  auto power = [&](std::size_t i, unsigned k) -> const PowerSeries& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(PowerSeries::constant(1));
    while (cache.size() <= k) cache.push_back(cache.back() * variables[i]);
    return cache[k];
  };
  PowerSeries result;
  for (const auto& [m, c] : terms_) {
    PowerSeries term = PowerSeries::constant(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) term = term * power(i, m[i]);
    }
    result += term;
  }
  return result;
}

std::string to_string(const Certificate& c) {
  if (c.empty()) return "0";
  std::vector<const Certificate::Terms::value_type*> ordered;
  for (const auto& entry : c.terms()) ordered.push_back(&entry);
  std::sort(ordered.begin(), ordered.end(),
            [](auto* a, auto* b) { return display_before(a->first, b->first); });

  std::ostringstream out;
  bool first = true;
  for (const auto* entry : ordered) {
    const auto& [m, coeff] = *entry;
    const Scalar magnitude = abs(coeff);
    if (first) {
      if (sgn(coeff) < 0) out << '-';
    } else {
      out << (sgn(coeff) < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = m.size(); i-- > 0;) {
      if (m[i] == 0) continue;
      std::string factor = "x" + std::to_string(i + 1);
      if (m[i] > 1) factor += "^" + std::to_string(m[i]);
      factors.push_back(std::move(factor));
    }
    if (factors.empty()) {
      out << to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out << to_string(magnitude) << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

}  // namespace hkc
