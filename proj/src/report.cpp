#include "hkc/report.hpp"

#include <sstream>

namespace hkc {

namespace {

nlohmann::json series_list(const std::vector<PowerSeries>& series) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : series) list.push_back(to_string(s));
  return list;
}

template <typename Range>
std::string join(const Range& values, const char* separator = ", ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << separator;
    out << v;
    first = false;
  }
  return out.str();
}

}  // namespace

Exponent display_precision(const RingReport& report) { return report.conductor_degree + report.multiplicity; }

std::string display_series(const PowerSeries& f, Exponent precision) {
  if (f.degree() < precision) return to_string(f);
  return to_string(with_precision(f, precision));
}

nlohmann::json semigroup_json(const NumericalSemigroup& s) {
  return {{"min_generators", s.min_generators}, {"conductor", s.conductor}, {"genus", sg_genus(s)}};
}

nlohmann::json witness_json(const std::optional<TorsionWitness>& witness) {
  if (!witness) return nullptr;
  return {{"a1", witness->a1},
          {"an", witness->an},
          {"x1", to_string(witness->x1)},
          {"xn", to_string(witness->xn)},
          {"omega", witness->omega_text},
          {"image_in_normalization", to_string(witness->image_in_normalization)},
          {"substitution", to_string(witness->substitution)},
          {"hk_generators", series_list(witness->hk_parametrization.generators())},
          {"nonvanishing", witness->nonvanishing_note}};
}

nlohmann::json extension_json(const std::optional<ExtensionReport>& extension) {
  if (!extension) return nullptr;
  const auto& e = *extension;
  return {{"b_list", e.b_list},
          {"s", e.s},
          {"generators", series_list(e.s_generators.generators())},
          {"conductor", e.conductor_s},
          {"value_semigroup", semigroup_json(e.semigroup_s)},
          {"hk_sequence", e.hk_s.sequence},
          {"hk_generators", series_list(e.hk_s.generators)},
          {"i0", e.i0},
          {"checks",
           {{"conductor_drop", e.conductor_drop_holds},
            {"length", e.length_holds},
            {"prefix", e.prefix_holds},
            {"tail_set", e.tail_set_holds},
            {"chosen_generate", e.chosen_generate}}}};
}

nlohmann::json report_json(const RingReport& report, const std::optional<TorsionWitness>& witness,
                           const std::optional<ExtensionReport>& extension) {
  const Exponent shown = display_precision(report);
  nlohmann::json hk_generators = nlohmann::json::array();
  for (const auto& x : report.hk.generators) hk_generators.push_back(display_series(x, shown));
  return {{"generators", series_list(report.parametrization.generators())},
          {"multiplicity", report.multiplicity},
          {"value_semigroup", semigroup_json(report.value_semigroup)},
          {"hk_sequence", report.hk.sequence},
          {"hk_generators", hk_generators},
          {"hk_generators_display_precision", shown},
          {"embedding_dimension", report.embedding_dimension},
          {"conductor_degree", report.conductor_degree},
          {"conductor_in_m2", report.conductor_in_m2},
          {"reduced_type", report.reduced_type.s},
          {"reduced_type_b_list", report.reduced_type.b_list},
          {"torsion_witness", witness_json(witness)},
          {"extension", extension_json(extension)},
          {"precision_used", report.precision_used}};
}

std::string report_text(const RingReport& report, const std::optional<TorsionWitness>& witness,
                        const std::optional<ExtensionReport>& extension) {
  std::ostringstream out;
  const Exponent shown = display_precision(report);
  std::vector<std::string> gens;
  for (const auto& g : report.parametrization.generators()) gens.push_back(to_string(g));
  out << "R = k[[" << join(gens) << "]]\n";
  out << "multiplicity:        " << report.multiplicity << '\n';
  out << "value semigroup:     <" << join(report.value_semigroup.min_generators) << ">\n";
  out << "conductor degree:    " << report.conductor_degree << '\n';
  out << "genus:               " << sg_genus(report.value_semigroup) << '\n';
  out << "HK sequence:         " << join(report.hk.sequence) << '\n';
  out << "embedding dimension: " << report.embedding_dimension << '\n';
  for (std::size_t i = 0; i < report.hk.generators.size(); ++i) {
    out << "  x" << i + 1 << " = " << display_series(report.hk.generators[i], shown) << '\n';
  }
  if (report.conductor_in_m2) {
    out << "conductor in m^2:    yes (a_n = " << report.hk.last() << " < c_R)\n";
  } else {
    out << "conductor in m^2:    no  (conductor not contained in m^2, since a_n = " << report.hk.last()
        << " >= c_R)\n";
  }
  out << "reduced type:        " << report.reduced_type.s;
  if (!report.reduced_type.b_list.empty()) out << " (b = " << join(report.reduced_type.b_list) << ')';
  out << '\n';
  if (witness) {
    out << "torsion witness:     omega = " << witness->omega_text << " with x1 = " << to_string(witness->x1)
        << ", x" << witness->hk_parametrization.size() << " = " << to_string(witness->xn) << '\n';
    out << "  image in k[[t]]dt: " << to_string(witness->image_in_normalization) << '\n';
    out << "  " << witness->nonvanishing_note << '\n';
  }
  if (extension) {
    out << "extension S:         b = [" << join(extension->b_list) << "], c_S = " << extension->conductor_s
        << ", HK(S) = " << join(extension->hk_s.sequence) << '\n';
  }
  out << "precision used:      " << report.precision_used << '\n';
  return out.str();
}

}  // namespace hkc
