#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkc/power_series.hpp"

namespace hkc {

enum class OutputMode { kText, kJson };

struct InputSpec {
  // One comma-separated generator list per parametrization.
  std::vector<std::string> parametrizations;
  std::optional<Exponent> precision_override;
  Exponent max_precision = 16384;
  OutputMode output_mode = OutputMode::kText;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMath = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
  std::string error;
};

// Commands: analyze, hk, semigroup, member <series>, equal <other>, truncate,
// normalize, extend, torsion. For `equal` the argument is a file whose first
// nonempty line holds the other generators, or the generators themselves.
// Parametrizations are processed concurrently; output keeps input order.
CommandResult run_command(const std::string& command, const std::vector<std::string>& args, const InputSpec& spec);

// Nonempty lines of a generator file, '#' starting a comment line.
std::vector<std::string> read_parametrizations(const std::string& path);

}  // namespace hkc
