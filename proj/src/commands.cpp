#include "hkc/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hkc/errors.hpp"
#include "hkc/invariants.hpp"
#include "hkc/parser.hpp"
#include "hkc/report.hpp"
#include "hkc/transforms.hpp"

namespace hkc {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rendered {
  json value;
  std::string text;
};

using Handler = std::function<Rendered(const Parametrization&, const std::vector<std::string>&,
                                       const AnalysisOptions&)>;

json series_list(const std::vector<PowerSeries>& series) {
  json list = json::array();
  for (const auto& s : series) list.push_back(to_string(s));
  return list;
}

std::string generators_text(const Parametrization& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(p[i]);
  }
  return out;
}

std::string first_nonempty_line(const std::string& path) {
  for (const auto& line : read_parametrizations(path)) return line;
  throw UsageError("no generators in " + path);
}

const std::string& single_argument(const std::vector<std::string>& args, const char* command) {
  if (args.size() != 1) throw UsageError(std::string(command) + " takes exactly one argument");
  return args.front();
}

Rendered cmd_analyze(const Parametrization& p, const std::vector<std::string>&, const AnalysisOptions& options) {
  const AnalyzedRing ring = analyze(p, options);
  const RingReport report = make_report(ring);
  const auto witness = torsion_witness(p, options);
  std::optional<ExtensionReport> extension;
  if (report.conductor_in_m2) extension = extend_by_conductor(p, options);
  return {report_json(report, witness, extension), report_text(report, witness, extension)};
}

Rendered cmd_hk(const Parametrization& p, const std::vector<std::string>&, const AnalysisOptions& options) {
  const Parametrization minimal = drop_redundant(p, options);
  const HKProfile hk = hk_generators(minimal, options);
  json rows = json::array();
  std::ostringstream text;
  text << "HK sequence: ";
  for (std::size_t i = 0; i < hk.size(); ++i) text << (i ? ", " : "") << hk.sequence[i];
  text << '\n';
  for (std::size_t i = 0; i < hk.size(); ++i) {
    const std::string z = to_string(hk.certificates[i]);
    rows.push_back({{"valuation", hk.sequence[i]},
                    {"x", to_string(hk.generators[i])},
                    {"z", z},
                    {"source", hk.source[i] + 1}});
    text << "  x" << i + 1 << " = " << to_string(hk.generators[i]) << "  (y" << hk.source[i] + 1 << " = x"
         << i + 1 << " + " << z << ")\n";
  }
  json value = {{"generators", series_list(minimal.generators())},
                {"hk_sequence", hk.sequence},
                {"hk_generators", rows},
                {"embedding_dimension", hk.size()}};
  return {value, text.str()};
}

Rendered cmd_semigroup(const Parametrization& p, const std::vector<std::string>&, const AnalysisOptions& options) {
  const RingAnalysis ring = analyze_ring(p, options);
  const auto& s = ring.semigroup;
  json value = semigroup_json(s);
  value["gaps"] = s.gaps;
  value["multiplicity"] = ring.multiplicity;
  value["precision_used"] = ring.basis.precision();
  std::ostringstream text;
  text << "value semigroup: <";
  for (std::size_t i = 0; i < s.min_generators.size(); ++i) text << (i ? ", " : "") << s.min_generators[i];
  text << ">\nconductor: " << s.conductor << "\ngenus: " << sg_genus(s) << '\n';
  return {value, text.str()};
}

Rendered cmd_member(const Parametrization& p, const std::vector<std::string>& args, const AnalysisOptions& options) {
  const PowerSeries f = parse_series(single_argument(args, "member"));
  const AnalyzedRing ring = analyze(p, options);
  const bool member = ring.contains(f);
  json value = {{"series", to_string(f)}, {"member", member}};
  return {value, to_string(f) + (member ? " is in R\n" : " is not in R\n")};
}

Rendered cmd_equal(const Parametrization& p, const std::vector<std::string>& args, const AnalysisOptions& options) {
  const std::string& arg = single_argument(args, "equal");
  std::error_code ec;
  const std::string text = std::filesystem::is_regular_file(arg, ec) ? first_nonempty_line(arg) : arg;
  const Parametrization other = parse_generators(text);
  const bool equal = rings_equal(analyze(p, options), other);
  json value = {{"generators", series_list(p.generators())},
                {"other", series_list(other.generators())},
                {"equal", equal}};
  return {value, equal ? "rings are equal\n" : "rings differ\n"};
}

Rendered cmd_truncate(const Parametrization& p, const std::vector<std::string>&, const AnalysisOptions& options) {
  const AnalyzedRing ring = analyze(p, options);
  const Truncation t = truncate_parametrization(p, ring.hk, ring.conductor());
  const bool equal = rings_equal(ring, t.parametrization);
  json value = {{"d", t.degree}, {"generators", series_list(t.parametrization.generators())}, {"rings_equal", equal}};
  std::ostringstream text;
  text << "d = " << t.degree << "\ntruncated: " << generators_text(t.parametrization)
       << "\nrings equal: " << (equal ? "yes" : "no") << '\n';
  return {value, text.str()};
}

Rendered cmd_normalize(const Parametrization& p, const std::vector<std::string>&, const AnalysisOptions& options) {
  const Normalization n = normalize_parameter(p, options);
  json value = {{"generators", series_list(n.parametrization.generators())},
                {"substitution", to_string(n.substitution)},
                {"inverse", to_string(n.inverse)},
                {"pivot", n.pivot + 1}};
  std::ostringstream text;
  text << "tau = " << to_string(n.substitution) << "\nt = " << to_string(n.inverse)
       << "\ngenerators: " << generators_text(n.parametrization) << '\n';
  return {value, text.str()};
}

Rendered cmd_extend(const Parametrization& p, const std::vector<std::string>&, const AnalysisOptions& options) {
  const auto e = extend_by_conductor(p, options);
  std::ostringstream text;
  text << "b = [";
  for (std::size_t i = 0; i < e.b_list.size(); ++i) text << (i ? ", " : "") << e.b_list[i];
  text << "]\nS = k[[" << generators_text(e.s_generators) << "]]\nc_S = " << e.conductor_s << "\nHK(S) = ";
  for (std::size_t i = 0; i < e.hk_s.size(); ++i) text << (i ? ", " : "") << e.hk_s.sequence[i];
  text << '\n';
  return {extension_json(e), text.str()};
}

Rendered cmd_torsion(const Parametrization& p, const std::vector<std::string>&, const AnalysisOptions& options) {
  const auto w = torsion_witness(p, options);
  if (!w) return {nullptr, "no witness: the conductor lies in m^2\n"};
  std::ostringstream text;
  text << "omega = " << w->omega_text << "\nx1 = " << to_string(w->x1) << "\nxn = " << to_string(w->xn)
       << "\nimage in k[[t]]dt: " << to_string(w->image_in_normalization) << '\n'
       << w->nonvanishing_note << '\n';
  return {witness_json(w), text.str()};
}

const std::map<std::string, std::pair<Handler, bool>>& handlers() {
  // name -> (handler, takes an argument)
  static const std::map<std::string, std::pair<Handler, bool>> table = {
      {"analyze", {cmd_analyze, false}},     {"hk", {cmd_hk, false}},
      {"semigroup", {cmd_semigroup, false}}, {"member", {cmd_member, true}},
      {"equal", {cmd_equal, true}},          {"truncate", {cmd_truncate, false}},
      {"normalize", {cmd_normalize, false}}, {"extend", {cmd_extend, false}},
      {"torsion", {cmd_torsion, false}},
  };
  return table;
}

struct Outcome {
  int exit_code = kExitOk;
  Rendered rendered;
  std::string error;
};

Outcome run_one(const Handler& handler, const std::string& input, const std::vector<std::string>& args,
                const AnalysisOptions& options) {
  Outcome outcome;
  try {
    outcome.rendered = handler(parse_generators(input), args, options);
  } catch (const ParseError& e) {
    outcome.exit_code = kExitUsage;
    outcome.error = std::string("parse error: ") + e.what();
  } catch (const UsageError& e) {
    outcome.exit_code = kExitUsage;
    outcome.error = e.what();
  } catch (const MathError& e) {
    outcome.exit_code = kExitMath;
    outcome.error = e.what();
  }
  return outcome;
}

}  // namespace

std::vector<std::string> read_parametrizations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return lines;
}

CommandResult run_command(const std::string& command, const std::vector<std::string>& args, const InputSpec& spec) {
  CommandResult result;
  const auto it = handlers().find(command);
  if (it == handlers().end()) {
    result.exit_code = kExitUsage;
    result.error = "error: unknown command: " + command + "\n";
    return result;
  }
  const auto& [handler, takes_argument] = it->second;
  if (takes_argument != !args.empty() || args.size() > 1) {
    result.exit_code = kExitUsage;
    result.error = "error: " + command + (takes_argument ? " takes exactly one argument\n" : " takes no argument\n");
    return result;
  }
  if (spec.parametrizations.empty()) {
    result.exit_code = kExitUsage;
    result.error = "error: no generators given\n";
    return result;
  }

  AnalysisOptions options;
  options.initial_precision = spec.precision_override;
  options.max_precision = spec.max_precision;

  std::vector<std::future<Outcome>> pending;
  for (const auto& input : spec.parametrizations) {
    pending.push_back(std::async(std::launch::async, run_one, std::cref(handler), std::cref(input),
                                 std::cref(args), std::cref(options)));
  }
  std::vector<Outcome> outcomes;
  for (auto& f : pending) outcomes.push_back(f.get());

  const bool many = spec.parametrizations.size() > 1;
  std::ostringstream out;
  std::ostringstream err;
  json array = json::array();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    result.exit_code = std::max(result.exit_code, o.exit_code);
    if (o.exit_code != kExitOk) {
      err << (many ? "[" + spec.parametrizations[i] + "] " : "") << "error: " << o.error << '\n';
      if (spec.output_mode == OutputMode::kJson) array.push_back({{"error", o.error}});
      continue;
    }
    if (spec.output_mode == OutputMode::kJson) {
      array.push_back(o.rendered.value);
    } else {
      if (many) out << "== " << spec.parametrizations[i] << '\n';
      out << o.rendered.text;
    }
  }
  if (spec.output_mode == OutputMode::kJson) {
    if (many) {
      out << array.dump(2) << '\n';
    } else if (outcomes.front().exit_code == kExitOk) {
      out << array.front().dump(2) << '\n';
    }
  }
  result.output = out.str();
  result.error = err.str();
  return result;
}

}  // namespace hkc
