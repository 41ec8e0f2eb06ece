#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hkc/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Invariants of one-dimensional complete local domains k[[y1..yn]] in k[[t]]"};
  app.set_help_flag("-h,--help", "Show help");

  std::string command;
  std::vector<std::string> positional;
  bool json = false;
  std::optional<hkc::Exponent> precision;
  hkc::Exponent max_precision = 16384;
  std::string file;

  app.add_option("command", command,
                 "analyze | hk | semigroup | member <series> | equal <other> | truncate | normalize | extend | torsion")
      ->required();
  app.add_option("args", positional, "command argument, then the generators unless --file is given");
  app.add_flag("--json", json, "emit JSON");
  app.add_option("--precision", precision, "initial working precision")->check(CLI::PositiveNumber);
  app.add_option("--max-precision", max_precision, "precision cap")->check(CLI::PositiveNumber);
  app.add_option("--file", file, "one parametrization per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hkc::kExitUsage;
  }

  hkc::InputSpec spec;
  spec.precision_override = precision;
  spec.max_precision = max_precision;
  spec.output_mode = json ? hkc::OutputMode::kJson : hkc::OutputMode::kText;

  std::vector<std::string> args = positional;
  if (!file.empty()) {
    try {
      spec.parametrizations = hkc::read_parametrizations(file);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return hkc::kExitUsage;
    }
  } else if (!args.empty()) {
    spec.parametrizations.push_back(args.back());
    args.pop_back();
  }

  const auto result = hkc::run_command(command, args, spec);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
