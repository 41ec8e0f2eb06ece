#pragma once

#include <string_view>
#include <vector>

#include "hkc/power_series.hpp"
#include "hkc/subring.hpp"

namespace hkc {

// One series over the grammar: rational literals, t, ^, *, /, +, -,
// parentheses and an optional O(t^d) term declaring finite precision.
// Division is only by nonzero constants.
PowerSeries parse_series(std::string_view text);

// Comma-separated series. Throws ParseError with the offending position, or
// MathError when a generator is a unit or zero.
Parametrization parse_generators(std::string_view text);

}  // namespace hkc
