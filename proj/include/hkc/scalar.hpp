#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

namespace hkc {

// Exact rational coefficient. mpq_class keeps values canonical (lowest
// terms, positive denominator) as long as every constructor path calls
// canonicalize(), which make_scalar does.
using Scalar = mpq_class;

Scalar make_scalar(long numerator, long denominator = 1);

// Parses "p" or "p/q" with optional leading sign.
std::optional<Scalar> parse_scalar(const std::string& text);

// "p/q", or "p" when q == 1.
std::string to_string(const Scalar& value);

// Rational n-th root if one exists; picks the positive root for even n.
std::optional<Scalar> rational_root(const Scalar& value, unsigned long n);

}  // namespace hkc
