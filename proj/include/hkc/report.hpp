#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hkc/invariants.hpp"
#include "hkc/transforms.hpp"

namespace hkc {

// HK generators are printed up to t^(conductor + multiplicity); higher terms
// are replaced by an O-term.
Exponent display_precision(const RingReport& report);
std::string display_series(const PowerSeries& f, Exponent precision);

nlohmann::json semigroup_json(const NumericalSemigroup& s);
nlohmann::json witness_json(const std::optional<TorsionWitness>& witness);
nlohmann::json extension_json(const std::optional<ExtensionReport>& extension);
nlohmann::json report_json(const RingReport& report, const std::optional<TorsionWitness>& witness,
                           const std::optional<ExtensionReport>& extension);

std::string report_text(const RingReport& report, const std::optional<TorsionWitness>& witness,
                        const std::optional<ExtensionReport>& extension);

}  // namespace hkc
