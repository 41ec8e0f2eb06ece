#include "hkc/scalar.hpp"

#include <stdexcept>

namespace hkc {

Scalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Scalar value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::optional<Scalar> parse_scalar(const std::string& text) {
  Scalar value;
  if (value.set_str(text, 10) != 0) return std::nullopt;
  if (value.get_den() == 0) return std::nullopt;
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

namespace {

std::optional<mpz_class> integer_root(const mpz_class& value, unsigned long n) {
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), n) == 0) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Scalar> rational_root(const Scalar& value, unsigned long n) {
  if (n == 0) return std::nullopt;
  if (sgn(value) < 0 && n % 2 == 0) return std::nullopt;
  auto num = integer_root(value.get_num(), n);
  auto den = integer_root(value.get_den(), n);
  if (!num || !den) return std::nullopt;
  Scalar root(*num, *den);
  root.canonicalize();
  return root;
}

}  // namespace hkc
